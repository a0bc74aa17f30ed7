// Copyright 2026 The tropdiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropdiv/rational.h"

#include <charconv>
#include <numeric>

#include "tropdiv/errors.h"

namespace tropdiv {

namespace {

std::int64_t ParseInteger(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (text.empty()) {
    throw ValidationError("malformed rational '" + std::string(whole) + "'");
  }
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ValidationError("rational '" + std::string(whole) +
                          "' exceeds 64-bit range");
  }
  if (ec != std::errc() || ptr != last) {
    throw ValidationError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

std::int64_t Narrow(__int128 value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw ResourceError("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ResourceError("integer overflow");
  }
  return out;
}

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ResourceError("integer overflow");
  }
  return out;
}

std::int64_t Lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return CheckedMul(a / std::gcd(a, b), b);
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw ValidationError("rational with zero denominator");
  }
  __int128 n = numerator;
  __int128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  num_ = Narrow(n);
  den_ = Narrow(d);
}

Rational Rational::Parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text, text));
  }
  std::int64_t p = ParseInteger(text.substr(0, slash), text);
  std::string_view rest = text.substr(slash + 1);
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  std::int64_t q = ParseInteger(rest, text);
  if (q == 0) {
    throw ValidationError("rational '" + std::string(text) +
                          "' has zero denominator");
  }
  return Rational(p, q);
}

std::int64_t Rational::ToInteger() const {
  if (den_ != 1) {
    throw ValidationError("rational " + ToString() + " is not an integer");
  }
  return num_;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw ResourceError("rational arithmetic overflow");
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  __int128 n = static_cast<__int128>(a.num_) * b.den_ +
               static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  __int128 x = n < 0 ? -n : n;
  __int128 y = d;
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  if (x > 1) {
    n /= x;
    d /= x;
  }
  return Rational(Narrow(n), Narrow(d));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-cancel first so that products of reduced fractions stay small.
  std::int64_t g1 = std::gcd(a.num_, b.den_);
  std::int64_t g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(CheckedMul(a.num_ / g1, b.num_ / g2),
                  CheckedMul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ValidationError("division by zero rational");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToString();
}

}  // namespace tropdiv
