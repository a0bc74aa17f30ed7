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

#include "tropdiv/working_graph.h"

#include "tropdiv/errors.h"

namespace tropdiv {

std::int64_t PointDenominator(const Point& point) {
  return point.is_vertex() ? 1 : point.offset().denominator();
}

WorkingGraphPtr WorkingGraph::Build(GraphPtr base,
                                    const std::set<std::int64_t>& denominators) {
  std::int64_t lcm = 1;
  for (std::int64_t d : denominators) {
    if (d <= 0) throw ValidationError("grid denominators must be positive");
    lcm = Lcm(lcm, d);
  }
  for (const Edge& e : base->edges()) lcm = Lcm(lcm, e.length.denominator());

  std::shared_ptr<WorkingGraph> wg(new WorkingGraph());
  wg->base_ = std::move(base);
  wg->refinement_ = CheckedMul(2, lcm);
  const MetricGraph& g = *wg->base_;

  for (const Vertex& v : g.vertices()) {
    wg->points_.push_back(Point::AtVertex(v.id));
  }
  for (const Edge& e : g.edges()) {
    std::int64_t segments =
        (e.length * Rational(wg->refinement_)).ToInteger();
    wg->edge_offset_.push_back(static_cast<int>(wg->points_.size()));
    wg->edge_segments_.push_back(segments);
    for (std::int64_t k = 1; k < segments; ++k) {
      wg->points_.push_back(Point::OnEdge(e.id, Rational(k, wg->refinement_)));
    }
  }
  wg->adjacency_.resize(wg->points_.size());
  wg->incidence_.resize(wg->points_.size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    int tail = static_cast<int>(*g.vertex_index(e.tail));
    int head = static_cast<int>(*g.vertex_index(e.head));
    std::int64_t segments = wg->edge_segments_[i];
    int prev = tail;
    for (std::int64_t k = 1; k <= segments; ++k) {
      int next = k == segments ? head
                               : wg->edge_offset_[i] + static_cast<int>(k) - 1;
      int id = static_cast<int>(wg->edges_.size());
      wg->edges_.emplace_back(prev, next);
      wg->edge_labels_.push_back(e.id + "#" + std::to_string(k - 1));
      wg->adjacency_[prev].push_back(next);
      wg->adjacency_[next].push_back(prev);
      wg->incidence_[prev].push_back(id);
      wg->incidence_[next].push_back(id);
      prev = next;
    }
  }
  return wg;
}

std::optional<int> WorkingGraph::VertexOf(const Point& point) const {
  if (point.is_vertex()) {
    auto index = base_->vertex_index(point.id());
    if (!index) return std::nullopt;
    return static_cast<int>(*index);
  }
  auto index = base_->edge_index(point.id());
  if (!index) return std::nullopt;
  Rational scaled = point.offset() * Rational(refinement_);
  if (!scaled.is_integer()) return std::nullopt;
  std::int64_t k = scaled.numerator();
  if (k <= 0 || k >= edge_segments_[*index]) return std::nullopt;
  return edge_offset_[*index] + static_cast<int>(k) - 1;
}

int WorkingGraph::RequireVertex(const Point& point) const {
  base_->CheckPoint(point);
  auto v = VertexOf(point);
  if (!v) {
    throw RefinementError("point '" + point.ToString() +
                          "' is not on the working grid 1/" +
                          std::to_string(refinement_));
  }
  return *v;
}

}  // namespace tropdiv
