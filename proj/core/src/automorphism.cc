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

#include "tropdiv/automorphism.h"

#include <algorithm>
#include <map>
#include <utility>

#include "tropdiv/errors.h"

namespace tropdiv {

namespace {

using Key = std::pair<int, int>;

Key Ordered(int a, int b) { return a < b ? Key{a, b} : Key{b, a}; }

std::map<Key, std::vector<int>> ParallelClasses(const WorkingGraph& wg) {
  std::map<Key, std::vector<int>> classes;
  for (int e = 0; e < wg.edge_count(); ++e) {
    classes[Ordered(wg.edge(e).first, wg.edge(e).second)].push_back(e);
  }
  return classes;
}

class Multiplicity {
 public:
  explicit Multiplicity(const WorkingGraph& wg)
      : n_(wg.vertex_count()), m_(static_cast<std::size_t>(n_) * n_, 0) {
    for (int e = 0; e < wg.edge_count(); ++e) {
      auto [a, b] = wg.edge(e);
      ++m_[Index(a, b)];
      ++m_[Index(b, a)];
    }
  }
  int operator()(int a, int b) const { return m_[Index(a, b)]; }

 private:
  std::size_t Index(int a, int b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }
  int n_;
  std::vector<int> m_;
};

}  // namespace

int QuotientGenus(const WorkingGraph& wg, const std::vector<int>& vertex_map,
                  const std::vector<int>& edge_map) {
  int vertex_orbits = 0;
  for (int v = 0; v < wg.vertex_count(); ++v) {
    vertex_orbits += vertex_map[v] >= v;
  }
  int edge_orbits = 0;
  int half_edges = 0;
  for (int e = 0; e < wg.edge_count(); ++e) {
    if (edge_map[e] < e) continue;
    ++edge_orbits;
    if (edge_map[e] == e) {
      auto [a, b] = wg.edge(e);
      half_edges += vertex_map[a] == b && a != b;
    }
  }
  return edge_orbits - (vertex_orbits + half_edges) + 1;
}

Involution MakeInvolution(WorkingGraphPtr working,
                          std::vector<int> vertex_map) {
  const WorkingGraph& wg = *working;
  const int n = wg.vertex_count();
  if (static_cast<int>(vertex_map.size()) != n) {
    throw ValidationError("vertex map has the wrong size");
  }
  for (int v = 0; v < n; ++v) {
    int w = vertex_map[v];
    if (w < 0 || w >= n || vertex_map[w] != v) {
      throw ValidationError("vertex map is not an involution");
    }
  }
  auto classes = ParallelClasses(wg);
  std::vector<int> edge_map(wg.edge_count(), -1);
  for (const auto& [key, edges] : classes) {
    Key image = Ordered(vertex_map[key.first], vertex_map[key.second]);
    auto it = classes.find(image);
    if (it == classes.end() || it->second.size() != edges.size()) {
      throw ValidationError("vertex map does not preserve adjacency");
    }
    if (image != key) {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        edge_map[edges[i]] = it->second[i];
      }
    } else if (vertex_map[key.first] == key.first) {
      std::size_t i = 0;
      for (; i + 1 < edges.size(); i += 2) {
        edge_map[edges[i]] = edges[i + 1];
        edge_map[edges[i + 1]] = edges[i];
      }
      if (i < edges.size()) edge_map[edges[i]] = edges[i];
    } else {
      for (int e : edges) edge_map[e] = e;
    }
  }
  Involution out;
  out.working = std::move(working);
  out.vertex_map = std::move(vertex_map);
  out.edge_map = std::move(edge_map);
  for (int v = 0; v < n; ++v) {
    if (out.vertex_map[v] == v) out.fixed_vertices.push_back(v);
  }
  out.quotient_genus = QuotientGenus(wg, out.vertex_map, out.edge_map);
  return out;
}

namespace {

class Search {
 public:
  Search(const WorkingGraphPtr& working, const InvolutionSearchOptions& opts)
      : working_(working),
        wg_(*working),
        opts_(opts),
        mult_(wg_),
        sigma_(wg_.vertex_count(), -1),
        pinned_(wg_.vertex_count(), false) {
    for (int v : opts.pinned) pinned_.at(v) = true;
    std::vector<bool> seen(wg_.vertex_count(), false);
    if (wg_.vertex_count() == 0) return;
    order_.push_back(0);
    seen[0] = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (int w : wg_.neighbors(order_[i])) {
        if (!seen[w]) {
          seen[w] = true;
          order_.push_back(w);
        }
      }
    }
  }

  std::vector<Involution> Run() {
    Recurse(0);
    return std::move(found_);
  }

 private:
  // mult(z, x) == mult(sigma z, sigma x) for every placed x.
  bool Consistent(int z) const {
    int sz = sigma_[z];
    for (int x : wg_.neighbors(z)) {
      if (sigma_[x] >= 0 && mult_(sz, sigma_[x]) != mult_(z, x)) return false;
    }
    for (int y : wg_.neighbors(sz)) {
      if (sigma_[y] >= 0 && mult_(z, sigma_[y]) != mult_(sz, y)) return false;
    }
    return true;
  }

  void Recurse(std::size_t pos) {
    if (++nodes_ > opts_.max_nodes) {
      throw ResourceError("involution search exceeded its node budget");
    }
    while (pos < order_.size() && sigma_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) {
      Involution inv = MakeInvolution(working_, sigma_);
      if (!opts_.tree_quotient_only || inv.quotient_genus == 0) {
        found_.push_back(std::move(inv));
      }
      return;
    }
    int v = order_[pos];
    for (int w = 0; w < wg_.vertex_count(); ++w) {
      if (sigma_[w] >= 0 || wg_.valence(w) != wg_.valence(v)) continue;
      if ((pinned_[v] || pinned_[w]) && w != v) continue;
      sigma_[v] = w;
      sigma_[w] = v;
      if (Consistent(v) && (w == v || Consistent(w))) Recurse(pos + 1);
      sigma_[v] = -1;
      sigma_[w] = -1;
    }
  }

  WorkingGraphPtr working_;
  const WorkingGraph& wg_;
  const InvolutionSearchOptions& opts_;
  Multiplicity mult_;
  std::vector<int> sigma_;
  std::vector<bool> pinned_;
  std::vector<int> order_;
  std::vector<Involution> found_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<Involution> EnumerateInvolutions(
    const WorkingGraphPtr& working, const InvolutionSearchOptions& options) {
  return Search(working, options).Run();
}

}  // namespace tropdiv
