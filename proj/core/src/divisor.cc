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

#include "tropdiv/divisor.h"

#include <algorithm>

#include "tropdiv/errors.h"

namespace tropdiv {

bool SameGraph(const GraphPtr& a, const GraphPtr& b) {
  return a == b || (a && b && *a == *b);
}

Divisor::Divisor(GraphPtr graph) : graph_(std::move(graph)) {
  if (!graph_) throw BindingError("divisor needs a graph");
}

Divisor::Divisor(GraphPtr graph,
                 std::initializer_list<std::pair<Point, int>> terms)
    : Divisor(std::move(graph)) {
  for (const auto& [point, coefficient] : terms) Add(point, coefficient);
}

int Divisor::operator[](const Point& point) const {
  auto it = terms_.find(point);
  return it == terms_.end() ? 0 : it->second;
}

Divisor& Divisor::Add(const Point& point, int coefficient) {
  graph_->CheckPoint(point);
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.emplace(point, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

std::int64_t Divisor::degree() const {
  std::int64_t total = 0;
  for (const auto& [point, c] : terms_) total += c;
  return total;
}

std::vector<Point> Divisor::support() const {
  std::vector<Point> out;
  for (const auto& [point, c] : terms_) out.push_back(point);
  return out;
}

bool Divisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return term.second > 0; });
}

std::set<std::int64_t> Divisor::denominators() const {
  std::set<std::int64_t> out;
  for (const auto& [point, c] : terms_) out.insert(PointDenominator(point));
  return out;
}

Divisor Divisor::operator-() const {
  Divisor out(graph_);
  for (const auto& [point, c] : terms_) out.terms_.emplace(point, -c);
  return out;
}

void Divisor::CheckSameGraph(const Divisor& other) const {
  if (!SameGraph(graph_, other.graph_)) {
    throw BindingError("divisors are bound to different graphs");
  }
}

Divisor& Divisor::operator+=(const Divisor& other) {
  CheckSameGraph(other);
  for (const auto& [point, c] : other.terms_) Add(point, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  CheckSameGraph(other);
  for (const auto& [point, c] : other.terms_) Add(point, -c);
  return *this;
}

Divisor operator*(int k, const Divisor& d) {
  Divisor out(d.graph_);
  if (k == 0) return out;
  for (const auto& [point, c] : d.terms_) out.terms_.emplace(point, k * c);
  return out;
}

Divisor Divisor::Rebind(GraphPtr graph) const {
  Divisor out(std::move(graph));
  for (const auto& [point, c] : terms_) out.Add(point, c);
  return out;
}

bool operator==(const Divisor& a, const Divisor& b) {
  return SameGraph(a.graph_, b.graph_) && a.terms_ == b.terms_;
}

Divisor VertexDivisor(GraphPtr graph,
                      std::initializer_list<std::pair<const char*, int>> terms) {
  Divisor out(std::move(graph));
  for (const auto& [id, c] : terms) out.Add(Point::AtVertex(id), c);
  return out;
}

Config ToConfig(const Divisor& divisor, const WorkingGraph& working) {
  if (!SameGraph(divisor.graph(), working.base())) {
    throw BindingError("divisor and working graph have different bases");
  }
  Config config(working.vertex_count(), 0);
  for (const auto& [point, c] : divisor.terms()) {
    config[working.RequireVertex(point)] += c;
  }
  return config;
}

Divisor FromConfig(const Config& config, const WorkingGraph& working) {
  Divisor out(working.base());
  for (int v = 0; v < static_cast<int>(config.size()); ++v) {
    if (config[v] != 0) out.Add(working.PointOf(v), config[v]);
  }
  return out;
}

Divisor PushForward(const Divisor& divisor, const Retraction& retraction) {
  if (!SameGraph(divisor.graph(), retraction.source())) {
    throw BindingError("divisor is not on the retraction's source graph");
  }
  Divisor out(retraction.target());
  for (const auto& [point, c] : divisor.terms()) out.Add(retraction(point), c);
  return out;
}

Divisor ScaleDivisor(const Divisor& divisor, GraphPtr scaled,
                     const Rational& factor) {
  Divisor out(std::move(scaled));
  for (const auto& [point, c] : divisor.terms()) {
    out.Add(point.is_vertex()
                ? point
                : Point::OnEdge(point.id(), point.offset() * factor),
            c);
  }
  return out;
}

}  // namespace tropdiv
