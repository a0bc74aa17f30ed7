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

#include "tropdiv/moderator.h"

#include <deque>
#include <numeric>

#include "tropdiv/errors.h"

namespace tropdiv {

std::vector<int> AcyclicOrder::Ranks() const {
  std::vector<int> rank(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i);
  }
  return rank;
}

Moderator ModeratorFromOrder(const AcyclicOrder& order) {
  const int n = order.working->vertex_count();
  if (static_cast<int>(order.order.size()) != n) {
    throw ValidationError("order must list every working vertex once");
  }
  std::vector<int> rank(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order.order[i];
    if (v < 0 || v >= n || rank[v] >= 0) {
      throw ValidationError("order must list every working vertex once");
    }
    rank[v] = i;
  }
  Moderator out{Config(n, -1), order};
  for (int v = 0; v < n; ++v) {
    for (int w : order.working->neighbors(v)) out.k[v] += rank[w] < rank[v];
  }
  return out;
}

bool IsAcyclic(const AcyclicOrder& order) {
  const WorkingGraph& wg = *order.working;
  std::vector<int> rank = order.Ranks();
  std::vector<int> indegree(wg.vertex_count(), 0);
  for (int v = 0; v < wg.vertex_count(); ++v) {
    for (int w : wg.neighbors(v)) indegree[v] += rank[w] > rank[v];
  }
  std::deque<int> ready;
  for (int v = 0; v < wg.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    ++seen;
    for (int w : wg.neighbors(v)) {
      if (rank[w] < rank[v] && --indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == wg.vertex_count();
}

namespace {

// BFS from `base` avoiding `blocked`; returns vertices in discovery order.
std::vector<int> BfsOrder(const WorkingGraph& wg, int base,
                          const std::vector<bool>& blocked) {
  std::vector<bool> seen(wg.vertex_count(), false);
  std::vector<int> order{base};
  seen[base] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : wg.neighbors(order[i])) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  return order;
}

}  // namespace

Moderator DominatingModerator(const ChipFiring& firing, const Config& d,
                              int base) {
  const WorkingGraph& wg = firing.working();
  const int n = wg.vertex_count();
  if (d[base] >= 0) {
    throw PreconditionError("dominating moderator needs d(v0) < 0");
  }
  if (!firing.IsReduced(d, base)) {
    throw PreconditionError("dominating moderator needs a v0-reduced divisor");
  }
  Config shifted = d;
  shifted[base] = 0;
  PeelOutcome peel = firing.Peel(shifted, base);
  if (!peel.ok) throw InternalError("reduced divisor failed to peel");

  std::vector<bool> placed(n, false);
  AcyclicOrder order{firing.working_ptr(), {base}};
  placed[base] = true;
  auto open_middle = [&](int v) {
    return !placed[v] && v != base && shifted[v] == 0 && wg.valence(v) >= 2;
  };

  const int k = static_cast<int>(peel.sequence.size());
  std::vector<bool> blocked(n, false);
  for (int a : peel.sequence) blocked[a] = true;
  for (int i = 0; i <= k; ++i) {
    // Region reached once a_1 .. a_{i-1} have burnt.
    if (i > 0) blocked[peel.sequence[i - 1]] = false;
    for (int v : BfsOrder(wg, base, blocked)) {
      if (open_middle(v)) {
        placed[v] = true;
        order.order.push_back(v);
      }
    }
    if (i < k) {
      placed[peel.sequence[i]] = true;
      order.order.push_back(peel.sequence[i]);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!placed[v]) {
      if (wg.valence(v) != 1) {
        throw InternalError("moderator order missed " + wg.Label(v));
      }
      order.order.push_back(v);
    }
  }
  return ModeratorFromOrder(order);
}

int ExtendReduced(const ChipFiring& firing, const Config& d, int base) {
  const WorkingGraph& wg = firing.working();
  if (!firing.IsReduced(d, base)) {
    throw PreconditionError("extend needs a v0-reduced divisor");
  }
  std::int64_t degree = std::accumulate(d.begin(), d.end(), std::int64_t{0});
  if (degree - d[base] > wg.genus() - 1) {
    throw PreconditionError("extend needs deg(d) - d(v0) <= g - 1");
  }
  Config lowered = d;
  lowered[base] = -1;
  Moderator k = DominatingModerator(firing, lowered, base);
  for (int w = 0; w < wg.vertex_count(); ++w) {
    if (w != base && lowered[w] < k.k[w]) return w;
  }
  throw InternalError("no extension vertex below the moderator");
}

Moderator DominatingModerator(const Divisor& d, const Point& base) {
  auto wg = WorkingGraphFor(d.graph(), {&d}, {base});
  ChipFiring firing(wg);
  return DominatingModerator(firing, ToConfig(d, *wg), wg->RequireVertex(base));
}

Point ExtendReduced(const Divisor& d, const Point& base) {
  auto wg = WorkingGraphFor(d.graph(), {&d}, {base});
  ChipFiring firing(wg);
  return wg->PointOf(
      ExtendReduced(firing, ToConfig(d, *wg), wg->RequireVertex(base)));
}

}  // namespace tropdiv
