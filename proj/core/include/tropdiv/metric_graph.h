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

#ifndef TROPDIV_METRIC_GRAPH_H_
#define TROPDIV_METRIC_GRAPH_H_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tropdiv/rational.h"

namespace tropdiv {

struct Vertex {
  std::string id;
  int weight = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Edge direction is a storage convention: offsets along the edge are
// measured from `tail`. The metric graph itself is undirected.
struct Edge {
  std::string id;
  std::string tail;
  std::string head;
  Rational length;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A point of a metric graph with rational position. Points in the interior
// of an edge carry their distance from the edge's tail; endpoints must be
// written in vertex form.
class Point {
 public:
  Point() = default;
  static Point AtVertex(std::string id);
  static Point OnEdge(std::string edge_id, Rational offset);

  bool is_vertex() const { return !on_edge_; }
  // Vertex id for vertex points, edge id otherwise.
  const std::string& id() const { return id_; }
  const Rational& offset() const { return offset_; }

  // "v0" for vertices, "e1@1/3" for edge points.
  std::string ToString() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

 private:
  bool on_edge_ = false;
  std::string id_;
  Rational offset_;
};

class MetricGraph;
using GraphPtr = std::shared_ptr<const MetricGraph>;

struct Genus {
  int unweighted = 0;
  int weighted = 0;
};

// Vertex-weighted connected multigraph with positive rational edge lengths.
// Immutable after construction; vertices and edges are kept sorted by id so
// that every traversal is reproducible.
class MetricGraph {
 public:
  // Throws ValidationError on duplicate ids, dangling endpoints, nonpositive
  // lengths, negative weights, an empty vertex set or a disconnected graph.
  static GraphPtr Create(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  std::optional<std::size_t> edge_index(std::string_view id) const;
  const Vertex& vertex(std::string_view id) const;
  const Edge& edge(std::string_view id) const;

  // Indices of edges incident to the vertex; a loop appears twice.
  const std::vector<std::size_t>& incident_edges(std::size_t vertex) const {
    return incidence_[vertex];
  }
  int valence(std::size_t vertex) const {
    return static_cast<int>(incidence_[vertex].size());
  }

  bool is_weightless() const;
  Rational total_length() const;

  bool Contains(const Point& point) const;
  // Throws BindingError when the point does not lie on this graph.
  void CheckPoint(const Point& point) const;

  // Homothety: every length multiplied by `factor` (> 0).
  GraphPtr Scaled(const Rational& factor) const;

  friend bool operator==(const MetricGraph& a, const MetricGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  MetricGraph() = default;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_lookup_;
  std::map<std::string, std::size_t, std::less<>> edge_lookup_;
  std::vector<std::vector<std::size_t>> incidence_;
};

Genus ComputeGenus(const MetricGraph& graph);

// Adds weight(v) loops of length 1 at every vertex v and zeroes all weights.
// Virtual loop ids are "<vertex>~<k>", k = 1..weight(v).
GraphPtr VirtualWeightless(const MetricGraph& graph);

// Retraction map of a contraction: points on contracted edges go to the
// merged vertex, everything else keeps its edge id and offset.
class Retraction {
 public:
  Retraction() = default;
  Retraction(GraphPtr source, GraphPtr target,
             std::map<std::string, std::string> vertex_image,
             std::set<std::string> contracted_edges);

  const GraphPtr& source() const { return source_; }
  const GraphPtr& target() const { return target_; }
  const std::set<std::string>& contracted_edges() const {
    return contracted_edges_;
  }
  Point operator()(const Point& point) const;

 private:
  GraphPtr source_;
  GraphPtr target_;
  std::map<std::string, std::string> vertex_image_;
  std::set<std::string> contracted_edges_;
};

struct Contraction {
  GraphPtr graph;
  Retraction retraction;
};

// Contracts the given bridges. Merged vertices take the smallest id of their
// class and the sum of the weights. Throws PreconditionError for non-bridges.
Contraction ContractEdges(const GraphPtr& graph,
                          const std::set<std::string>& edge_ids);

// Repeatedly contracts leaf edges whose leaf end has weight zero.
Contraction ContractZeroWeightLeafEdges(const GraphPtr& graph);

// Suppresses valence-2 vertices (only weight-0 ones when `weighted`), merging
// their two edges. Unweighted output has all weights zero. Throws
// PreconditionError when the result would be a circle.
GraphPtr CanonicalModel(const MetricGraph& graph, bool weighted);

// Edge indices whose removal disconnects the graph.
std::vector<std::size_t> FindBridges(const MetricGraph& graph);

struct BridgeInfo {
  std::string edge_id;
  int tail_side_genus = 0;  // weighted genus of the component holding tail
  int head_side_genus = 0;
  bool positive_type = false;
};

struct BridgeReport {
  std::vector<BridgeInfo> bridges;
  // Positive-type bridges emanating from each vertex, keyed by vertex id.
  std::map<std::string, int> positive_counts;
};

BridgeReport ComputeBridgeReport(const MetricGraph& graph);

struct ConditionIResult {
  bool holds = true;
  // First violating vertex in id order, when !holds.
  std::string vertex;
  int count = 0;
  int bound = 0;
};

// Every vertex v has at most 2*weight(v) + 2 positive-type bridges.
ConditionIResult CheckConditionI(const MetricGraph& graph);

}  // namespace tropdiv

#endif  // TROPDIV_METRIC_GRAPH_H_
