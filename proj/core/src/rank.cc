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

#include "tropdiv/rank.h"

#include <algorithm>
#include <numeric>

#include "tropdiv/errors.h"

namespace tropdiv {

std::size_t ConfigHash::operator()(const Config& config) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : config) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ull;
  }
  return h;
}

RankEngine::RankEngine(WorkingGraphPtr working) : firing_(std::move(working)) {
  const WorkingGraph& wg = *firing_.working_ptr();
  for (int v = 0; v < wg.base_vertex_count(); ++v) probes_.push_back(v);
  for (const Edge& e : wg.base()->edges()) {
    if (e.is_loop()) {
      probes_.push_back(wg.RequireVertex(Point::OnEdge(e.id, e.length / 2)));
    }
  }
}

int RankEngine::Rank(const Config& config) const {
  std::int64_t degree = std::accumulate(config.begin(), config.end(),
                                        std::int64_t{0});
  if (degree < 0) return -1;
  return RankOfReduced(firing_.Reduce(config, 0).reduced);
}

int RankEngine::Rank(const Divisor& divisor) const {
  return Rank(ToConfig(divisor, *working()));
}

std::size_t RankEngine::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

int RankEngine::RankOfReduced(const Config& reduced) const {
  if (reduced[0] < 0) return -1;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(reduced);
    if (it != memo_.end()) return it->second;
  }
  int best = -1;
  bool first = true;
  Config child = reduced;
  for (int v : probes_) {
    --child[v];
    int r;
    if (v == 0 || reduced[v] >= 1) {
      // Still effective off the base with fewer chips: still reduced.
      r = RankOfReduced(child);
    } else {
      r = RankOfReduced(firing_.Reduce(child, 0).reduced);
    }
    ++child[v];
    if (first || r < best) best = r;
    first = false;
    if (best == -1) break;
  }
  int result = 1 + best;
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(reduced, result);
  return result;
}

int Rank(const Divisor& divisor) {
  RankEngine engine(WorkingGraphFor(divisor.graph(), {&divisor}));
  return engine.Rank(divisor);
}

Divisor EmbedWeightless(const Divisor& divisor) {
  return divisor.Rebind(VirtualWeightless(*divisor.graph()));
}

int RankWeighted(const Divisor& divisor) {
  return Rank(EmbedWeightless(divisor));
}

RiemannRoch RrCheck(const Divisor& divisor) {
  const GraphPtr& graph = divisor.graph();
  if (!graph->is_weightless()) {
    throw PreconditionError("rr-check needs a weightless graph");
  }
  Divisor dual = CanonicalDivisor(graph, false) - divisor;
  RankEngine engine(WorkingGraphFor(graph, {&divisor}));
  RiemannRoch out;
  out.rank = engine.Rank(divisor);
  out.dual_rank = engine.Rank(dual);
  out.lhs = out.rank - out.dual_rank;
  out.rhs = divisor.degree() + 1 - ComputeGenus(*graph).unweighted;
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace tropdiv
