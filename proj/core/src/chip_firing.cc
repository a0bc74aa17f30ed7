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

#include "tropdiv/chip_firing.h"

#include <algorithm>
#include <deque>
#include <limits>

#include "tropdiv/errors.h"

namespace tropdiv {

std::map<std::string, std::int64_t> FiringScript::ToMap() const {
  std::map<std::string, std::int64_t> out;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (values[v] != 0) out[working->Label(static_cast<int>(v))] = values[v];
  }
  return out;
}

ChipFiring::ChipFiring(WorkingGraphPtr working)
    : working_(std::move(working)) {}

Config ChipFiring::DivOf(const std::vector<std::int64_t>& script) const {
  const int n = working_->vertex_count();
  Config out(n, 0);
  for (int v = 0; v < n; ++v) {
    std::int64_t total = 0;
    for (int w : working_->neighbors(v)) total += script[w] - script[v];
    if (total > std::numeric_limits<int>::max() ||
        total < std::numeric_limits<int>::min()) {
      throw ResourceError("chip count overflow");
    }
    out[v] = static_cast<int>(total);
  }
  return out;
}

Config ChipFiring::Apply(const Config& config,
                         const std::vector<std::int64_t>& script) const {
  Config div = DivOf(script);
  Config out(config.size());
  for (std::size_t v = 0; v < config.size(); ++v) out[v] = config[v] - div[v];
  return out;
}

BurnResult ChipFiring::Burn(const Config& config, int base) const {
  const int n = working_->vertex_count();
  for (int v = 0; v < n; ++v) {
    if (v != base && config[v] < 0) {
      throw PreconditionError("burning needs an effective divisor away from "
                              "the base; " + working_->Label(v) +
                              " is negative");
    }
  }
  BurnResult result;
  result.burnt.assign(n, false);
  std::vector<int> heat(n, 0);
  std::deque<int> queue{base};
  result.burnt[base] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : working_->neighbors(v)) {
      if (result.burnt[w]) continue;
      if (++heat[w] > config[w]) {
        result.burnt[w] = true;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!result.burnt[v]) result.unburnt.push_back(v);
  }
  return result;
}

bool ChipFiring::IsReduced(const Config& config, int base) const {
  for (int v = 0; v < working_->vertex_count(); ++v) {
    if (v != base && config[v] < 0) return false;
  }
  return Burn(config, base).all_burnt();
}

ConfigReduction ChipFiring::Reduce(const Config& config, int base) const {
  const int n = working_->vertex_count();
  std::vector<std::int64_t> chips(config.begin(), config.end());
  std::vector<std::int64_t> fired(n, 0);

  auto fire = [&](const std::vector<int>& set, std::int64_t times) {
    if (times == 0) return;
    std::vector<bool> in(n, false);
    for (int v : set) in[v] = true;
    for (int v : set) {
      fired[v] += times;
      for (int w : working_->neighbors(v)) {
        if (in[w]) continue;
        chips[v] -= times;
        chips[w] += times;
      }
    }
  };

  // Stage 1: clear negative chips layer by layer, farthest first.
  std::vector<int> dist(n, -1);
  std::vector<int> order{base};
  dist[base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : working_->neighbors(order[i])) {
      if (dist[w] < 0) {
        dist[w] = dist[order[i]] + 1;
        order.push_back(w);
      }
    }
  }
  const int max_layer = dist[order.back()];
  for (int k = max_layer; k >= 1; --k) {
    std::int64_t times = 0;
    for (int w : order) {
      if (dist[w] != k || chips[w] >= 0) continue;
      std::int64_t down = 0;
      for (int u : working_->neighbors(w)) down += dist[u] == k - 1;
      times = std::max(times, (-chips[w] + down - 1) / down);
    }
    if (times == 0) continue;
    std::vector<int> inner;
    for (int v : order) {
      if (dist[v] < k) inner.push_back(v);
    }
    fire(inner, times);
  }

  // Stage 2: fire the unburnt region as often as it stays effective.
  while (true) {
    Config current(n);
    for (int v = 0; v < n; ++v) {
      if (chips[v] > std::numeric_limits<int>::max() ||
          chips[v] < std::numeric_limits<int>::min()) {
        throw ResourceError("chip count overflow during reduction");
      }
      current[v] = static_cast<int>(chips[v]);
    }
    BurnResult burn = Burn(current, base);
    if (burn.all_burnt()) {
      ConfigReduction out;
      out.reduced = std::move(current);
      // Firing A adds div(1_A), so the witness is minus the firing counts.
      std::int64_t top = *std::max_element(fired.begin(), fired.end());
      out.script.resize(n);
      for (int v = 0; v < n; ++v) out.script[v] = top - fired[v];
      return out;
    }
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (int u : burn.unburnt) {
      std::int64_t out_edges = 0;
      for (int w : working_->neighbors(u)) out_edges += burn.burnt[w];
      if (out_edges > 0) times = std::min(times, chips[u] / out_edges);
    }
    if (times <= 0 || times == std::numeric_limits<std::int64_t>::max()) {
      throw InternalError("burning stalled on an unfireable region");
    }
    fire(burn.unburnt, times);
  }
}

PeelOutcome ChipFiring::Peel(const Config& config, int base) const {
  const int n = working_->vertex_count();
  if (config[base] != 0) {
    throw PreconditionError("peel sequence needs a zero coefficient at base");
  }
  std::vector<bool> blocked(n, false);
  int remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (config[v] < 0) {
      throw PreconditionError("peel sequence needs an effective divisor");
    }
    if (config[v] > 0) {
      blocked[v] = true;
      ++remaining;
    }
  }
  PeelOutcome out;
  while (true) {
    std::vector<bool> reach(n, false);
    std::vector<int> stack{base};
    reach[base] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : working_->neighbors(v)) {
        if (!reach[w] && !blocked[w]) {
          reach[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (remaining == 0) {
      out.ok = true;
      return out;
    }
    int pick = -1;
    for (int b = 0; b < n && pick < 0; ++b) {
      if (!blocked[b]) continue;
      int into = 0;
      for (int w : working_->neighbors(b)) into += reach[w];
      if (config[b] < into) pick = b;
    }
    if (pick < 0) {
      for (int v = 0; v < n; ++v) {
        if (!reach[v]) out.stuck.push_back(v);
      }
      return out;
    }
    blocked[pick] = false;
    --remaining;
    out.sequence.push_back(pick);
  }
}

WorkingGraphPtr WorkingGraphFor(const GraphPtr& graph,
                                const std::vector<const Divisor*>& divisors,
                                const std::vector<Point>& points) {
  std::set<std::int64_t> dens;
  for (const Divisor* d : divisors) {
    if (!SameGraph(d->graph(), graph)) {
      throw BindingError("divisor is bound to a different graph");
    }
    auto more = d->denominators();
    dens.insert(more.begin(), more.end());
  }
  for (const Point& p : points) {
    graph->CheckPoint(p);
    dens.insert(PointDenominator(p));
  }
  return WorkingGraph::Build(graph, dens);
}

Divisor ApplyScript(const Divisor& divisor, const FiringScript& script) {
  ChipFiring engine(script.working);
  Config config = ToConfig(divisor, *script.working);
  return FromConfig(engine.Apply(config, script.values), *script.working);
}

PointBurn DharBurn(const Divisor& divisor, const Point& base) {
  auto wg = WorkingGraphFor(divisor.graph(), {&divisor}, {base});
  ChipFiring engine(wg);
  BurnResult burn =
      engine.Burn(ToConfig(divisor, *wg), wg->RequireVertex(base));
  PointBurn out;
  for (int v = 0; v < wg->vertex_count(); ++v) {
    (burn.burnt[v] ? out.burnt : out.unburnt).push_back(wg->PointOf(v));
  }
  return out;
}

ReductionResult Reduce(const Divisor& divisor, const Point& base) {
  auto wg = WorkingGraphFor(divisor.graph(), {&divisor}, {base});
  ChipFiring engine(wg);
  ConfigReduction r =
      engine.Reduce(ToConfig(divisor, *wg), wg->RequireVertex(base));
  return ReductionResult{FromConfig(r.reduced, *wg),
                         FiringScript{wg, std::move(r.script)}, base};
}

bool IsReduced(const Divisor& divisor, const Point& base) {
  auto wg = WorkingGraphFor(divisor.graph(), {&divisor}, {base});
  ChipFiring engine(wg);
  return engine.IsReduced(ToConfig(divisor, *wg), wg->RequireVertex(base));
}

PeelSequenceResult PeelSequence(const Divisor& divisor, const Point& base) {
  auto wg = WorkingGraphFor(divisor.graph(), {&divisor}, {base});
  ChipFiring engine(wg);
  PeelOutcome peel =
      engine.Peel(ToConfig(divisor, *wg), wg->RequireVertex(base));
  PeelSequenceResult out;
  out.ok = peel.ok;
  for (int v : peel.sequence) out.sequence.push_back(wg->PointOf(v));
  for (int v : peel.stuck) out.stuck.push_back(wg->PointOf(v));
  return out;
}

Equivalence LinearlyEquivalent(const Divisor& d1, const Divisor& d2) {
  if (!SameGraph(d1.graph(), d2.graph())) {
    throw BindingError("divisors are bound to different graphs");
  }
  Equivalence out;
  if (d1.degree() != d2.degree()) return out;
  auto wg = WorkingGraphFor(d1.graph(), {&d1, &d2});
  ChipFiring engine(wg);
  ConfigReduction r1 = engine.Reduce(ToConfig(d1, *wg), 0);
  ConfigReduction r2 = engine.Reduce(ToConfig(d2, *wg), 0);
  if (r1.reduced != r2.reduced) return out;
  out.equivalent = true;
  std::vector<std::int64_t> witness(r1.script.size());
  for (std::size_t v = 0; v < witness.size(); ++v) {
    witness[v] = r1.script[v] - r2.script[v];
  }
  std::int64_t low = *std::min_element(witness.begin(), witness.end());
  for (auto& x : witness) x -= low;
  out.witness = FiringScript{wg, std::move(witness)};
  return out;
}

Divisor CanonicalDivisor(const GraphPtr& graph, bool weighted) {
  Divisor out(graph);
  for (std::size_t i = 0; i < graph->vertices().size(); ++i) {
    const Vertex& v = graph->vertices()[i];
    int k = graph->valence(i) - 2 + (weighted ? 2 * v.weight : 0);
    out.Add(Point::AtVertex(v.id), k);
  }
  return out;
}

}  // namespace tropdiv
