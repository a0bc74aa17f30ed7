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

#ifndef TROPDIV_WORKING_GRAPH_H_
#define TROPDIV_WORKING_GRAPH_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropdiv/metric_graph.h"

namespace tropdiv {

// Loopless unit-length subdivision of a metric graph. Every algorithm on
// divisors runs here.
//
// With M the lcm of all requested denominators and all edge-length
// denominators, the refinement is N = 2M and an edge of length l becomes a
// path of l*N unit segments. Working vertices are numbered with the base
// vertices first (in id order), followed by the interior grid points of each
// edge (edges in id order, points by increasing offset from the tail).
class WorkingGraph {
 public:
  static std::shared_ptr<const WorkingGraph> Build(
      GraphPtr base, const std::set<std::int64_t>& denominators = {});

  const GraphPtr& base() const { return base_; }
  // Grid refinement N: working edges have length 1/N in base units.
  std::int64_t refinement() const { return refinement_; }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int genus() const { return edge_count() - vertex_count() + 1; }

  // Neighbours with multiplicity (parallel edges repeat the neighbour).
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int valence(int v) const { return static_cast<int>(adjacency_[v].size()); }
  // Edge endpoints, ordered as (closer to base tail, farther).
  const std::pair<int, int>& edge(int e) const { return edges_[e]; }
  const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }

  // Working vertex of a point, if the point lies on the grid.
  std::optional<int> VertexOf(const Point& point) const;
  // Like VertexOf but throws RefinementError for off-grid points and
  // BindingError for points not on the base graph.
  int RequireVertex(const Point& point) const;
  const Point& PointOf(int v) const { return points_[v]; }
  // "v0" for base vertices, "e1@1/2" for subdivision points.
  std::string Label(int v) const { return points_[v].ToString(); }
  // "e1#0" .. "e1#k": segment index along the base edge from its tail.
  std::string EdgeLabel(int e) const { return edge_labels_[e]; }

  bool is_base_vertex(int v) const {
    return v < static_cast<int>(base_->vertices().size());
  }
  int base_vertex_count() const {
    return static_cast<int>(base_->vertices().size());
  }

 private:
  WorkingGraph() = default;

  GraphPtr base_;
  std::int64_t refinement_ = 2;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> edge_labels_;
  std::vector<Point> points_;
  // First working index of each base edge's interior points.
  std::vector<int> edge_offset_;
  std::vector<std::int64_t> edge_segments_;
};

using WorkingGraphPtr = std::shared_ptr<const WorkingGraph>;

// Denominator of the point's offset (1 for vertex points).
std::int64_t PointDenominator(const Point& point);

}  // namespace tropdiv

#endif  // TROPDIV_WORKING_GRAPH_H_
