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

#ifndef TROPDIV_DIVISOR_H_
#define TROPDIV_DIVISOR_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tropdiv/metric_graph.h"
#include "tropdiv/working_graph.h"

namespace tropdiv {

// Finitely supported integer combination of points, bound to a metric graph.
// Zero coefficients are never stored.
class Divisor {
 public:
  explicit Divisor(GraphPtr graph);
  Divisor(GraphPtr graph, std::initializer_list<std::pair<Point, int>> terms);

  const GraphPtr& graph() const { return graph_; }
  const std::map<Point, int>& terms() const { return terms_; }

  int operator[](const Point& point) const;
  // Adds `coefficient` at `point`; throws BindingError for foreign points.
  Divisor& Add(const Point& point, int coefficient);

  std::int64_t degree() const;
  std::vector<Point> support() const;
  bool is_effective() const;
  bool is_zero() const { return terms_.empty(); }
  // Offset denominators of the support points (1 for vertices).
  std::set<std::int64_t> denominators() const;

  Divisor operator-() const;
  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, const Divisor& d);

  // Same terms, re-bound to another graph on which all points are valid.
  Divisor Rebind(GraphPtr graph) const;

  friend bool operator==(const Divisor& a, const Divisor& b);
  friend bool operator<(const Divisor& a, const Divisor& b) {
    return a.terms_ < b.terms_;
  }

 private:
  void CheckSameGraph(const Divisor& other) const;

  GraphPtr graph_;
  std::map<Point, int> terms_;
};

// Convenience: k[v] at a vertex id.
Divisor VertexDivisor(GraphPtr graph,
                      std::initializer_list<std::pair<const char*, int>> terms);

bool SameGraph(const GraphPtr& a, const GraphPtr& b);

// Working-graph coefficient vector.
using Config = std::vector<int>;

// Throws BindingError / RefinementError when points are foreign or off-grid.
Config ToConfig(const Divisor& divisor, const WorkingGraph& working);
Divisor FromConfig(const Config& config, const WorkingGraph& working);

// Pushforward along a retraction map.
Divisor PushForward(const Divisor& divisor, const Retraction& retraction);

// Moves every point along with a homothety of the graph.
Divisor ScaleDivisor(const Divisor& divisor, GraphPtr scaled,
                     const Rational& factor);

}  // namespace tropdiv

#endif  // TROPDIV_DIVISOR_H_
