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

#include "tropdiv/metric_graph.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>

#include "tropdiv/errors.h"

namespace tropdiv {

Point Point::AtVertex(std::string id) {
  Point p;
  p.on_edge_ = false;
  p.id_ = std::move(id);
  return p;
}

Point Point::OnEdge(std::string edge_id, Rational offset) {
  Point p;
  p.on_edge_ = true;
  p.id_ = std::move(edge_id);
  p.offset_ = offset;
  return p;
}

std::string Point::ToString() const {
  if (!on_edge_) return id_;
  return id_ + "@" + offset_.ToString();
}

GraphPtr MetricGraph::Create(std::vector<Vertex> vertices,
                             std::vector<Edge> edges) {
  if (vertices.empty()) {
    throw ValidationError("graph must have at least one vertex");
  }
  std::shared_ptr<MetricGraph> graph(new MetricGraph());
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& v = vertices[i];
    if (v.id.empty()) throw ValidationError("empty vertex id");
    if (v.weight < 0) {
      throw ValidationError("vertex '" + v.id + "' has negative weight");
    }
    if (!graph->vertex_lookup_.emplace(v.id, i).second) {
      throw ValidationError("duplicate vertex id '" + v.id + "'");
    }
  }
  graph->incidence_.resize(vertices.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.id.empty()) throw ValidationError("empty edge id");
    if (!graph->edge_lookup_.emplace(e.id, i).second) {
      throw ValidationError("duplicate edge id '" + e.id + "'");
    }
    auto t = graph->vertex_lookup_.find(e.tail);
    auto h = graph->vertex_lookup_.find(e.head);
    if (t == graph->vertex_lookup_.end() || h == graph->vertex_lookup_.end()) {
      throw ValidationError("edge '" + e.id + "' references unknown vertex");
    }
    if (e.length.sign() <= 0) {
      throw ValidationError("edge '" + e.id + "' has nonpositive length");
    }
    graph->incidence_[t->second].push_back(i);
    graph->incidence_[h->second].push_back(i);
  }
  graph->vertices_ = std::move(vertices);
  graph->edges_ = std::move(edges);

  // Connectivity.
  std::vector<bool> seen(graph->vertices_.size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : graph->incidence_[v]) {
      const Edge& edge = graph->edges_[e];
      for (const std::string* end : {&edge.tail, &edge.head}) {
        std::size_t w = graph->vertex_lookup_.find(*end)->second;
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
  }
  if (reached != graph->vertices_.size()) {
    throw ValidationError("graph is disconnected");
  }
  return graph;
}

std::optional<std::size_t> MetricGraph::vertex_index(std::string_view id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MetricGraph::edge_index(std::string_view id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

const Vertex& MetricGraph::vertex(std::string_view id) const {
  auto index = vertex_index(id);
  if (!index) throw BindingError("unknown vertex '" + std::string(id) + "'");
  return vertices_[*index];
}

const Edge& MetricGraph::edge(std::string_view id) const {
  auto index = edge_index(id);
  if (!index) throw BindingError("unknown edge '" + std::string(id) + "'");
  return edges_[*index];
}

bool MetricGraph::is_weightless() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.weight == 0; });
}

Rational MetricGraph::total_length() const {
  Rational total;
  for (const Edge& e : edges_) total += e.length;
  return total;
}

bool MetricGraph::Contains(const Point& point) const {
  if (point.is_vertex()) return vertex_index(point.id()).has_value();
  auto index = edge_index(point.id());
  if (!index) return false;
  return point.offset().sign() > 0 && point.offset() < edges_[*index].length;
}

void MetricGraph::CheckPoint(const Point& point) const {
  if (!Contains(point)) {
    throw BindingError("point '" + point.ToString() +
                       "' does not lie on the graph (edge points need "
                       "0 < offset < length)");
  }
}

GraphPtr MetricGraph::Scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw ValidationError("scale factor must be > 0");
  std::vector<Edge> edges = edges_;
  for (Edge& e : edges) e.length = e.length * factor;
  return Create(vertices_, std::move(edges));
}

Genus ComputeGenus(const MetricGraph& graph) {
  Genus genus;
  genus.unweighted = static_cast<int>(graph.edges().size()) -
                     static_cast<int>(graph.vertices().size()) + 1;
  genus.weighted = genus.unweighted;
  for (const Vertex& v : graph.vertices()) genus.weighted += v.weight;
  return genus;
}

GraphPtr VirtualWeightless(const MetricGraph& graph) {
  std::vector<Vertex> vertices = graph.vertices();
  std::vector<Edge> edges = graph.edges();
  std::set<std::string> taken;
  for (const Edge& e : edges) taken.insert(e.id);
  for (Vertex& v : vertices) {
    for (int k = 1; k <= v.weight; ++k) {
      std::string id = v.id + "~" + std::to_string(k);
      while (taken.count(id)) id += "~";
      taken.insert(id);
      edges.push_back(Edge{id, v.id, v.id, Rational(1)});
    }
    v.weight = 0;
  }
  return MetricGraph::Create(std::move(vertices), std::move(edges));
}

Retraction::Retraction(GraphPtr source, GraphPtr target,
                       std::map<std::string, std::string> vertex_image,
                       std::set<std::string> contracted_edges)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_image_(std::move(vertex_image)),
      contracted_edges_(std::move(contracted_edges)) {}

Point Retraction::operator()(const Point& point) const {
  source_->CheckPoint(point);
  if (point.is_vertex()) {
    return Point::AtVertex(vertex_image_.at(point.id()));
  }
  if (contracted_edges_.count(point.id())) {
    return Point::AtVertex(vertex_image_.at(source_->edge(point.id()).tail));
  }
  return point;
}

namespace {

// Union-find over vertex indices.
class Partition {
 public:
  explicit Partition(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    // Vertices are id-sorted, so the smaller index carries the smaller id.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t Other(const MetricGraph& g, std::size_t edge, std::size_t v) {
  const Edge& e = g.edges()[edge];
  std::size_t t = *g.vertex_index(e.tail);
  std::size_t h = *g.vertex_index(e.head);
  return t == v ? h : t;
}

}  // namespace

std::vector<std::size_t> FindBridges(const MetricGraph& graph) {
  const std::size_t n = graph.vertices().size();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> bridges;
  int timer = 0;
  // Iterative DFS tracking the edge used to enter each vertex, so parallel
  // edges are correctly treated as non-bridges.
  struct Frame {
    std::size_t vertex;
    std::size_t parent_edge;
    std::size_t next = 0;
  };
  const std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Frame> stack;
  stack.push_back({0, kNone});
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& inc = graph.incident_edges(f.vertex);
    if (f.next < inc.size()) {
      std::size_t e = inc[f.next++];
      if (e == f.parent_edge || graph.edges()[e].is_loop()) continue;
      std::size_t w = Other(graph, e, f.vertex);
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, e});
      } else {
        low[f.vertex] = std::min(low[f.vertex], disc[w]);
      }
    } else {
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        std::size_t parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > disc[parent]) bridges.push_back(done.parent_edge);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

Contraction ContractEdges(const GraphPtr& graph,
                          const std::set<std::string>& edge_ids) {
  std::vector<std::size_t> bridges = FindBridges(*graph);
  std::set<std::size_t> bridge_set(bridges.begin(), bridges.end());
  Partition classes(graph->vertices().size());
  for (const std::string& id : edge_ids) {
    auto index = graph->edge_index(id);
    if (!index) throw BindingError("unknown edge '" + id + "'");
    if (!bridge_set.count(*index)) {
      throw PreconditionError("edge '" + id + "' is not a bridge");
    }
    const Edge& e = graph->edges()[*index];
    classes.Union(*graph->vertex_index(e.tail), *graph->vertex_index(e.head));
  }
  std::map<std::string, std::string> image;
  std::map<std::size_t, int> weight;
  for (std::size_t i = 0; i < graph->vertices().size(); ++i) {
    std::size_t root = classes.Find(i);
    image[graph->vertices()[i].id] = graph->vertices()[root].id;
    weight[root] += graph->vertices()[i].weight;
  }
  std::vector<Vertex> vertices;
  for (const auto& [root, w] : weight) {
    vertices.push_back(Vertex{graph->vertices()[root].id, w});
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph->edges()) {
    if (edge_ids.count(e.id)) continue;
    edges.push_back(Edge{e.id, image[e.tail], image[e.head], e.length});
  }
  GraphPtr target = MetricGraph::Create(std::move(vertices), std::move(edges));
  return Contraction{target, Retraction(graph, target, std::move(image),
                                        edge_ids)};
}

Contraction ContractZeroWeightLeafEdges(const GraphPtr& graph) {
  std::set<std::string> contracted;
  GraphPtr current = graph;
  for (;;) {
    std::set<std::string> found;
    for (std::size_t v = 0; v < current->vertices().size(); ++v) {
      if (current->valence(v) != 1 || current->vertices()[v].weight != 0) {
        continue;
      }
      found.insert(current->edges()[current->incident_edges(v)[0]].id);
    }
    if (found.empty()) break;
    contracted.insert(found.begin(), found.end());
    current = ContractEdges(graph, contracted).graph;
  }
  return ContractEdges(graph, contracted);
}

GraphPtr CanonicalModel(const MetricGraph& graph, bool weighted) {
  std::map<std::string, int> weights;
  for (const Vertex& v : graph.vertices()) {
    weights[v.id] = weighted ? v.weight : 0;
  }
  std::map<std::string, Edge> edges;
  for (const Edge& e : graph.edges()) edges[e.id] = e;

  auto suppressible = [&](const std::string& v,
                          std::vector<std::string>& incident) {
    if (weights[v] > 0) return false;
    incident.clear();
    for (const auto& [id, e] : edges) {
      if (e.tail == v) incident.push_back(id);
      if (e.head == v) incident.push_back(id);
    }
    return incident.size() == 2;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::string> incident;
    for (const auto& [v, w] : weights) {
      if (!suppressible(v, incident)) continue;
      if (incident[0] == incident[1]) {
        // Only a loop through v remains: the component is a circle.
        throw PreconditionError(
            "metric graph is a circle; it has no canonical model");
      }
      Edge a = edges[incident[0]];
      Edge b = edges[incident[1]];
      std::string a_end = a.tail == v ? a.head : a.tail;
      std::string b_end = b.tail == v ? b.head : b.tail;
      Edge merged{std::min(a.id, b.id), a_end, b_end, a.length + b.length};
      edges.erase(a.id);
      edges.erase(b.id);
      edges[merged.id] = merged;
      weights.erase(v);
      changed = true;
      break;
    }
  }
  std::vector<Vertex> vertices;
  for (const auto& [id, w] : weights) vertices.push_back(Vertex{id, w});
  std::vector<Edge> edge_list;
  for (const auto& [id, e] : edges) edge_list.push_back(e);
  return MetricGraph::Create(std::move(vertices), std::move(edge_list));
}

BridgeReport ComputeBridgeReport(const MetricGraph& graph) {
  BridgeReport report;
  for (const Vertex& v : graph.vertices()) report.positive_counts[v.id] = 0;
  for (std::size_t b : FindBridges(graph)) {
    const Edge& bridge = graph.edges()[b];
    std::size_t tail = *graph.vertex_index(bridge.tail);
    std::vector<bool> side(graph.vertices().size(), false);
    std::queue<std::size_t> queue;
    queue.push(tail);
    side[tail] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (std::size_t e : graph.incident_edges(v)) {
        if (e == b) continue;
        std::size_t w = Other(graph, e, v);
        if (!side[w]) {
          side[w] = true;
          queue.push(w);
        }
      }
    }
    int genus[2] = {1, 1};  // index 0: tail side, 1: head side
    for (std::size_t v = 0; v < graph.vertices().size(); ++v) {
      genus[side[v] ? 0 : 1] += graph.vertices()[v].weight - 1;
    }
    for (std::size_t e = 0; e < graph.edges().size(); ++e) {
      if (e == b) continue;
      genus[side[*graph.vertex_index(graph.edges()[e].tail)] ? 0 : 1] += 1;
    }
    BridgeInfo info{bridge.id, genus[0], genus[1],
                    genus[0] >= 1 && genus[1] >= 1};
    if (info.positive_type) {
      ++report.positive_counts[bridge.tail];
      ++report.positive_counts[bridge.head];
    }
    report.bridges.push_back(info);
  }
  return report;
}

ConditionIResult CheckConditionI(const MetricGraph& graph) {
  BridgeReport report = ComputeBridgeReport(graph);
  ConditionIResult result;
  for (const Vertex& v : graph.vertices()) {
    int count = report.positive_counts[v.id];
    int bound = 2 * v.weight + 2;
    if (count > bound) {
      result.holds = false;
      result.vertex = v.id;
      result.count = count;
      result.bound = bound;
      break;
    }
  }
  return result;
}

}  // namespace tropdiv
