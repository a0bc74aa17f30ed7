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

#ifndef TROPDIV_HYPERELLIPTIC_H_
#define TROPDIV_HYPERELLIPTIC_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tropdiv/automorphism.h"
#include "tropdiv/chip_firing.h"
#include "tropdiv/divisor.h"
#include "tropdiv/metric_graph.h"
#include "tropdiv/rank.h"

namespace tropdiv {

// Graphs produced on the way to the involution search:
//   graph -> weightless (virtual loops) -> leafless (zero-weight leaf edges
//   contracted) -> core (remaining bridges contracted).
struct InvolutionReport {
  GraphPtr weightless;
  Contraction leafless;
  Contraction core;
  // Tree-quotient involutions found on the core's working graph, and on the
  // leafless graph's working graph with every bridge point held fixed.
  std::size_t core_count = 0;
  std::size_t extended_count = 0;
  std::optional<Involution> core_involution;
  std::optional<Involution> involution;  // on the leafless working graph
};

// Throws PreconditionError when the weighted genus is below 2.
InvolutionReport FindInvolution(const GraphPtr& graph);

struct HyperellipticCert {
  bool verdict = false;
  int genus = 0;  // weighted
  std::size_t pairs_checked = 0;
  // Vertices u, v of the input with rank([u] + [v]) == 1 on the weighted
  // graph, when the verdict is true.
  std::optional<std::pair<std::string, std::string>> pair;
  std::optional<InvolutionReport> involution;
  // [u] + [v] ~ [w] + [i(w)] on the leafless graph.
  bool consistent = false;
};

// Exhaustive search over vertex pairs; the involution is a second witness.
// Throws InternalError if the two witnesses disagree on existence.
HyperellipticCert IsHyperelliptic(const GraphPtr& graph);

// Hyperelliptic data of a certified graph. Divisors may be bound to the
// input graph, its weightless graph, or the leafless graph.
class HyperellipticStructure {
 public:
  // Throws PreconditionError unless the graph is hyperelliptic.
  static std::shared_ptr<const HyperellipticStructure> Analyze(
      const GraphPtr& graph);

  const GraphPtr& graph() const { return graph_; }
  const GraphPtr& leafless() const { return report_.leafless.graph; }
  const InvolutionReport& report() const { return report_; }
  const Involution& involution() const { return *report_.involution; }
  const WorkingGraphPtr& working() const { return report_.involution->working; }
  int genus() const { return genus_; }

  // Fixed working vertices of the involution on the leafless graph.
  std::vector<Point> FixedPoints() const;
  // Image of a point of the leafless working grid.
  Point Image(const Point& point) const;
  // Default base for p: the id-smallest fixed vertex of the leafless graph,
  // else the first fixed subdivision point.
  const Point& base() const { return base_; }

  Divisor ToLeafless(const Divisor& d) const;
  // floor(D_{v0}(v0) / 2) for the fixed point v0. Requires d effective.
  int PValue(const Divisor& d) const;
  int PValueAt(const Divisor& d, const Point& fixed_point) const;
  // p if deg - p <= g, else deg - g.
  int HypRank(const Divisor& d) const;
  // [v] + [i(v)] for the id-smallest vertex of the leafless graph with
  // valence other than 2; bound to the input graph.
  Divisor G12Class() const;
  // Degree-g divisor on the leafless graph with p = 0, obtained by repeated
  // extension from the reduced form of d at the base. Requires p(d) == 0.
  Divisor CompleteToGenus(const Divisor& d) const;

  // Config-level p on the leafless working graph, for sweeps.
  int PValueConfig(const Config& config) const;

 private:
  HyperellipticStructure() = default;

  GraphPtr graph_;
  InvolutionReport report_;
  int genus_ = 0;
  Point base_;
  int base_index_ = 0;
  std::unique_ptr<ChipFiring> firing_;
};

using HyperellipticPtr = std::shared_ptr<const HyperellipticStructure>;

struct WdrOptions {
  int degree = 0;
  int rank = 0;
  std::int64_t denominator = 1;
  std::size_t max_multisets = 1'000'000;
  int jobs = 1;
};

struct WdrResult {
  std::int64_t denominator = 1;
  bool complete_for_grid = true;
  std::size_t multisets = 0;
  std::size_t classes = 0;
  std::vector<Divisor> divisors;  // sorted reduced representatives
};

// Effective degree-d divisors on the 1/denominator grid with weighted rank
// >= r, one reduced representative per class (base: smallest vertex id).
WdrResult WdrEnumerate(const GraphPtr& graph, const WdrOptions& options);

}  // namespace tropdiv

#endif  // TROPDIV_HYPERELLIPTIC_H_
