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

#ifndef TROPDIV_TESTS_TEST_SUPPORT_H_
#define TROPDIV_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tropdiv/divisor.h"
#include "tropdiv/metric_graph.h"
#include "tropdiv/working_graph.h"

namespace tropdiv::testing {

using Rng = std::mt19937_64;

inline int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random connected multigraph: a random spanning tree plus `extra` edges
// (parallel edges and loops allowed). Lengths are 1 unless `mixed_lengths`,
// in which case they are drawn from {1/2, 1, 3/2, 2}.
inline GraphPtr RandomGraph(Rng& rng, int vertices, int extra,
                            bool mixed_lengths = false, int max_weight = 0) {
  std::vector<Vertex> vs;
  for (int i = 0; i < vertices; ++i) {
    vs.push_back(Vertex{"v" + std::to_string(i), Uniform(rng, 0, max_weight)});
  }
  std::vector<Edge> es;
  auto length = [&] {
    if (!mixed_lengths) return Rational(1);
    static const Rational kChoices[] = {Rational(1, 2), Rational(1),
                                        Rational(3, 2), Rational(2)};
    return kChoices[Uniform(rng, 0, 3)];
  };
  auto add = [&](int a, int b) {
    es.push_back(Edge{"e" + std::to_string(es.size() + 1), vs[a].id, vs[b].id,
                      length()});
  };
  for (int i = 1; i < vertices; ++i) add(Uniform(rng, 0, i - 1), i);
  for (int k = 0; k < extra; ++k) {
    add(Uniform(rng, 0, vertices - 1), Uniform(rng, 0, vertices - 1));
  }
  return MetricGraph::Create(std::move(vs), std::move(es));
}

// Random divisor on the vertices of `graph` with coefficients in [lo, hi].
inline Divisor RandomVertexDivisor(Rng& rng, const GraphPtr& graph, int terms,
                                   int lo, int hi) {
  Divisor d(graph);
  for (int i = 0; i < terms; ++i) {
    const auto& v = graph->vertices()[Uniform(
        rng, 0, static_cast<int>(graph->vertices().size()) - 1)];
    d.Add(Point::AtVertex(v.id), Uniform(rng, lo, hi));
  }
  return d;
}

// Random configuration on a working graph.
inline Config RandomConfig(Rng& rng, const WorkingGraph& wg, int terms, int lo,
                           int hi) {
  Config c(wg.vertex_count(), 0);
  for (int i = 0; i < terms; ++i) {
    c[Uniform(rng, 0, wg.vertex_count() - 1)] += Uniform(rng, lo, hi);
  }
  return c;
}

// Laplacian applied to a script, computed from the adjacency lists alone:
// div(s)(v) = sum over neighbours w of s(w) - s(v).
inline Config Div(const WorkingGraph& wg, const std::vector<std::int64_t>& s) {
  Config out(wg.vertex_count(), 0);
  for (int e = 0; e < wg.edge_count(); ++e) {
    auto [a, b] = wg.edge(e);
    out[a] += static_cast<int>(s[b] - s[a]);
    out[b] += static_cast<int>(s[a] - s[b]);
  }
  return out;
}

// Adjacency lists (with multiplicity, loops dropped) of a metric graph's
// underlying multigraph.
inline std::vector<std::vector<int>> Adjacency(const MetricGraph& g) {
  std::vector<std::vector<int>> adj(g.vertices().size());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    int a = static_cast<int>(*g.vertex_index(e.tail));
    int b = static_cast<int>(*g.vertex_index(e.head));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

inline std::vector<std::vector<int>> Adjacency(const WorkingGraph& wg) {
  std::vector<std::vector<int>> adj(wg.vertex_count());
  for (int v = 0; v < wg.vertex_count(); ++v) adj[v] = wg.neighbors(v);
  return adj;
}

// Plain Dhar test written independently of the engine.
inline bool BurnsCompletely(const std::vector<std::vector<int>>& adj,
                            const std::vector<int>& c, int q) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> heat(n, 0);
  std::vector<bool> burnt(n, false);
  std::deque<int> queue{q};
  burnt[q] = true;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (!burnt[w] && ++heat[w] > c[w]) {
        burnt[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == n;
}

// All superstable configurations with respect to q: 0 <= c(v) < val(v) off
// q and c(q) = 0, accepted by the burning test. Each represents one class
// per degree, so together they enumerate Pic^d exhaustively.
inline std::vector<std::vector<int>> Superstables(
    const std::vector<std::vector<int>>& adj, int q) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> out;
  std::vector<int> c(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      if (BurnsCompletely(adj, c, q)) out.push_back(c);
      return;
    }
    int top = v == q ? 0 : static_cast<int>(adj[v].size()) - 1;
    for (int k = 0; k <= std::max(top, 0); ++k) {
      c[v] = k;
      rec(v + 1);
    }
    c[v] = 0;
  };
  rec(0);
  return out;
}

// Visits every multiset of size k from {0..n-1} as a count vector.
inline void ForEachMultiset(int n, int k,
                            const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> counts(n, 0);
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      f(counts);
      return;
    }
    for (int v = from; v < n; ++v) {
      ++counts[v];
      rec(v, left - 1);
      --counts[v];
    }
  };
  rec(0, k);
}

inline Divisor VertexCounts(const GraphPtr& graph, const std::vector<int>& c) {
  Divisor d(graph);
  for (std::size_t i = 0; i < c.size(); ++i) {
    d.Add(Point::AtVertex(graph->vertices()[i].id), c[i]);
  }
  return d;
}

}  // namespace tropdiv::testing

#endif  // TROPDIV_TESTS_TEST_SUPPORT_H_
