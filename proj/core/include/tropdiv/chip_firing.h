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

#ifndef TROPDIV_CHIP_FIRING_H_
#define TROPDIV_CHIP_FIRING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropdiv/divisor.h"
#include "tropdiv/metric_graph.h"
#include "tropdiv/working_graph.h"

namespace tropdiv {

// Integer labels on working vertices, i.e. a rational function that is
// linear on every unit segment. Sign convention:
//   div(s)(v) = sum over edges vw of (s(w) - s(v)),
// the sum of outgoing slopes at v.
struct FiringScript {
  WorkingGraphPtr working;
  std::vector<std::int64_t> values;

  // Nonzero entries keyed by working-vertex label.
  std::map<std::string, std::int64_t> ToMap() const;
};

struct BurnResult {
  std::vector<bool> burnt;
  std::vector<int> unburnt;  // working indices, ascending

  bool all_burnt() const { return unburnt.empty(); }
};

struct ConfigReduction {
  Config reduced;
  // input - div(script) == reduced; normalized so that min(script) == 0.
  std::vector<std::int64_t> script;
};

struct PeelOutcome {
  bool ok = false;
  std::vector<int> sequence;  // a_1 .. a_k on success
  std::vector<int> stuck;     // the closed set B on failure
};

// Chip-firing on a fixed working graph; all positions are working indices.
class ChipFiring {
 public:
  explicit ChipFiring(WorkingGraphPtr working);

  const WorkingGraph& working() const { return *working_; }
  const WorkingGraphPtr& working_ptr() const { return working_; }

  // div(script) as a configuration.
  Config DivOf(const std::vector<std::int64_t>& script) const;
  // config - div(script).
  Config Apply(const Config& config,
               const std::vector<std::int64_t>& script) const;

  // Dhar burning from `base`. A vertex ignites once the number of burning
  // edges reaching it exceeds its chip count. Throws PreconditionError on a
  // negative coefficient away from the base.
  BurnResult Burn(const Config& config, int base) const;
  bool IsReduced(const Config& config, int base) const;

  ConfigReduction Reduce(const Config& config, int base) const;

  // Support order in which the fire reaches a base-free effective divisor,
  // or the closed set it cannot enter. Requires config >= 0 and
  // config[base] == 0.
  PeelOutcome Peel(const Config& config, int base) const;

 private:
  WorkingGraphPtr working_;
};

// Point-level wrappers. Each builds the coarsest working graph that carries
// the divisor (and the base point, when given).

Divisor ApplyScript(const Divisor& divisor, const FiringScript& script);

struct PointBurn {
  std::vector<Point> burnt;
  std::vector<Point> unburnt;
};
PointBurn DharBurn(const Divisor& divisor, const Point& base);

struct ReductionResult {
  Divisor reduced;
  FiringScript witness;
  Point base;
};
ReductionResult Reduce(const Divisor& divisor, const Point& base);
bool IsReduced(const Divisor& divisor, const Point& base);

struct PeelSequenceResult {
  bool ok = false;
  std::vector<Point> sequence;
  std::vector<Point> stuck;
};
PeelSequenceResult PeelSequence(const Divisor& divisor, const Point& base);

struct Equivalence {
  bool equivalent = false;
  // d1 - div(witness) == d2 when equivalent.
  std::optional<FiringScript> witness;
};
Equivalence LinearlyEquivalent(const Divisor& d1, const Divisor& d2);

// Weightless: sum of (val(v) - 2)[v]. Weighted: the canonical divisor of the
// virtual weightless graph, i.e. (val(v) + 2 weight(v) - 2)[v] on the input
// graph's vertices.
Divisor CanonicalDivisor(const GraphPtr& graph, bool weighted);

// Working graph of `graph` refined enough for all given divisors and points.
WorkingGraphPtr WorkingGraphFor(const GraphPtr& graph,
                                const std::vector<const Divisor*>& divisors,
                                const std::vector<Point>& points = {});

}  // namespace tropdiv

#endif  // TROPDIV_CHIP_FIRING_H_
