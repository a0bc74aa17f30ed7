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

#include "tropdiv/oracle.h"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "tropdiv/errors.h"

namespace tropdiv {

using boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<cpp_int>>;

struct LaplacianLattice::Impl {
  Matrix laplacian;
  Matrix u;
  Matrix v;
  Matrix s;
  std::vector<cpp_int> factors;
  // Rows of U that matter for the class key: s_i != 1.
  std::vector<int> key_rows;
  bool fast = false;
  std::vector<std::vector<std::int64_t>> u_fast;
  std::vector<std::int64_t> factors_fast;
};

namespace {

Matrix Identity(int n) {
  Matrix m(n, std::vector<cpp_int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool FitsInt64(const cpp_int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::string Int128ToString(__int128 x) {
  if (x == 0) return "0";
  bool negative = x < 0;
  unsigned __int128 m = negative ? -static_cast<unsigned __int128>(x) : x;
  std::string out;
  while (m > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (negative) out.push_back('-');
  return std::string(out.rbegin(), out.rend());
}

// Smith normal form by elementary operations: a is reduced in place to S
// while u and v record the row and column operations, keeping u L v == a.
void SmithNormalForm(Matrix& a, Matrix& u, Matrix& v) {
  const int n = static_cast<int>(a.size());
  auto add_row = [&](int i, int j, const cpp_int& k) {
    for (int c = 0; c < n; ++c) {
      a[i][c] += k * a[j][c];
      u[i][c] += k * u[j][c];
    }
  };
  auto add_col = [&](int i, int j, const cpp_int& k) {
    for (int r = 0; r < n; ++r) {
      a[r][i] += k * a[r][j];
      v[r][i] += k * v[r][j];
    }
  };
  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < n; ++r) {
      std::swap(a[r][i], a[r][j]);
      std::swap(v[r][i], v[r][j]);
    }
  };

  for (int t = 0; t < n; ++t) {
    int pi = -1, pj = -1;
    cpp_int best = 0;
    for (int i = t; i < n; ++i) {
      for (int j = t; j < n; ++j) {
        cpp_int m = abs(a[i][j]);
        if (m != 0 && (pi < 0 || m < best)) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clear = true;
      for (int i = t + 1; i < n && clear; ++i) {
        if (a[i][t] == 0) continue;
        add_row(i, t, -(a[i][t] / a[t][t]));
        if (a[i][t] != 0) {
          swap_rows(i, t);
          clear = false;
        }
      }
      for (int j = t + 1; j < n && clear; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) {
          swap_cols(j, t);
          clear = false;
        }
      }
      if (!clear) continue;
      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i) {
        for (int j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      add_row(t, bad, 1);
    }
    if (a[t][t] < 0) {
      for (int c = 0; c < n; ++c) {
        a[t][c] = -a[t][c];
        u[t][c] = -u[t][c];
      }
    }
  }
}

}  // namespace

LaplacianLattice::LaplacianLattice(WorkingGraphPtr working)
    : working_(std::move(working)), impl_(std::make_unique<Impl>()) {
  const int n = working_->vertex_count();
  Impl& m = *impl_;
  m.laplacian.assign(n, std::vector<cpp_int>(n, 0));
  for (int e = 0; e < working_->edge_count(); ++e) {
    auto [a, b] = working_->edge(e);
    m.laplacian[a][a] += 1;
    m.laplacian[b][b] += 1;
    m.laplacian[a][b] -= 1;
    m.laplacian[b][a] -= 1;
  }
  m.s = m.laplacian;
  m.u = Identity(n);
  m.v = Identity(n);
  SmithNormalForm(m.s, m.u, m.v);
  m.factors.resize(n);
  for (int i = 0; i < n; ++i) {
    m.factors[i] = m.s[i][i];
    if (m.factors[i] != 1) m.key_rows.push_back(i);
  }
  m.fast = true;
  for (int i : m.key_rows) {
    if (!FitsInt64(m.factors[i])) m.fast = false;
    for (int j = 0; j < n && m.fast; ++j) {
      if (!FitsInt64(m.u[i][j])) m.fast = false;
    }
  }
  if (m.fast) {
    m.u_fast.assign(n, std::vector<std::int64_t>(n, 0));
    m.factors_fast.assign(n, 0);
    for (int i : m.key_rows) {
      m.factors_fast[i] = static_cast<std::int64_t>(m.factors[i]);
      for (int j = 0; j < n; ++j) {
        m.u_fast[i][j] = static_cast<std::int64_t>(m.u[i][j]);
      }
    }
  }
}

LaplacianLattice::~LaplacianLattice() = default;
LaplacianLattice::LaplacianLattice(LaplacianLattice&&) noexcept = default;
LaplacianLattice& LaplacianLattice::operator=(LaplacianLattice&&) noexcept =
    default;

int LaplacianLattice::size() const { return working_->vertex_count(); }

std::vector<std::string> LaplacianLattice::invariant_factors() const {
  std::vector<std::string> out;
  for (const cpp_int& f : impl_->factors) out.push_back(f.str());
  return out;
}

int LaplacianLattice::corank() const {
  int zeros = 0;
  for (const cpp_int& f : impl_->factors) zeros += f == 0;
  return zeros;
}

std::string LaplacianLattice::Laplacian(int i, int j) const {
  return impl_->laplacian[i][j].str();
}
std::string LaplacianLattice::U(int i, int j) const {
  return impl_->u[i][j].str();
}
std::string LaplacianLattice::V(int i, int j) const {
  return impl_->v[i][j].str();
}
std::string LaplacianLattice::S(int i, int j) const {
  return impl_->s[i][j].str();
}

std::string LaplacianLattice::ClassKey(const Config& x) const {
  const Impl& m = *impl_;
  const int n = size();
  if (static_cast<int>(x.size()) != n) {
    throw BindingError("configuration does not match the lattice");
  }
  std::string key;
  for (int i : m.key_rows) {
    bool done = false;
    if (m.fast) {
      __int128 acc = 0;
      for (int j = 0; j < n; ++j) {
        if (x[j] != 0) acc += static_cast<__int128>(m.u_fast[i][j]) * x[j];
      }
      __int128 s = m.factors_fast[i];
      if (s != 0) {
        acc %= s;
        if (acc < 0) acc += s;
      }
      key += Int128ToString(acc);
      done = true;
    }
    if (!done) {
      cpp_int acc = 0;
      for (int j = 0; j < n; ++j) {
        if (x[j] != 0) acc += m.u[i][j] * x[j];
      }
      const cpp_int& s = m.factors[i];
      if (s != 0) {
        acc %= s;
        if (acc < 0) acc += s;
      }
      key += acc.str();
    }
    key += ',';
  }
  return key;
}

bool LaplacianLattice::Contains(const Config& x) const {
  const Impl& m = *impl_;
  const int n = size();
  if (static_cast<int>(x.size()) != n) {
    throw BindingError("configuration does not match the lattice");
  }
  for (int i = 0; i < n; ++i) {
    cpp_int acc = 0;
    for (int j = 0; j < n; ++j) {
      if (x[j] != 0) acc += m.u[i][j] * x[j];
    }
    const cpp_int& s = m.factors[i];
    if (s == 0 ? acc != 0 : acc % s != 0) return false;
  }
  return true;
}

bool OracleEquivalent(const Divisor& d1, const Divisor& d2) {
  if (!SameGraph(d1.graph(), d2.graph())) {
    throw BindingError("divisors are bound to different graphs");
  }
  if (d1.degree() != d2.degree()) return false;
  auto dens = d1.denominators();
  auto more = d2.denominators();
  dens.insert(more.begin(), more.end());
  LaplacianLattice lattice(WorkingGraph::Build(d1.graph(), dens));
  Config x = ToConfig(d1 - d2, *lattice.working());
  return lattice.Contains(x);
}

namespace {

std::size_t MultisetCount(std::size_t n, std::int64_t k, std::size_t cap) {
  unsigned __int128 count = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    count = count * (n + i - 1) / i;
    if (count > cap) {
      throw ResourceError("oracle would enumerate more than " +
                          std::to_string(cap) + " divisors");
    }
  }
  return static_cast<std::size_t>(count);
}

// Calls visit(x) for x = base + sign * E over every effective E of degree k.
template <typename Visit>
bool ForEachShift(Config& x, int sign, int k, int from, Visit&& visit) {
  if (k == 0) return visit(x);
  for (int v = from; v < static_cast<int>(x.size()); ++v) {
    x[v] += sign;
    bool go_on = ForEachShift(x, sign, k - 1, v, visit);
    x[v] -= sign;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

int OracleRank(const LaplacianLattice& lattice, const Config& d,
               const OracleCaps& caps) {
  const int n = lattice.size();
  const std::int64_t degree =
      std::accumulate(d.begin(), d.end(), std::int64_t{0});
  if (degree < 0) return -1;
  for (std::int64_t s = 0; s <= degree; ++s) {
    MultisetCount(n, s, caps.max_divisors);
    MultisetCount(n, degree - s, caps.max_divisors);
    std::unordered_set<std::string> effective;
    Config zero(n, 0);
    ForEachShift(zero, 1, static_cast<int>(degree - s), 0,
                 [&](const Config& f) {
                   effective.insert(lattice.ClassKey(f));
                   return true;
                 });
    Config x = d;
    bool all = ForEachShift(x, -1, static_cast<int>(s), 0,
                            [&](const Config& rest) {
                              return effective.count(lattice.ClassKey(rest)) >
                                     0;
                            });
    if (!all) return static_cast<int>(s) - 1;
  }
  return static_cast<int>(degree);
}

int OracleRank(const Divisor& d, const OracleCaps& caps) {
  LaplacianLattice lattice(WorkingGraph::Build(d.graph(), d.denominators()));
  return OracleRank(lattice, ToConfig(d, *lattice.working()), caps);
}

}  // namespace tropdiv
