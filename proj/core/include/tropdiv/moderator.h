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

#ifndef TROPDIV_MODERATOR_H_
#define TROPDIV_MODERATOR_H_

#include <vector>

#include "tropdiv/chip_firing.h"
#include "tropdiv/divisor.h"
#include "tropdiv/working_graph.h"

namespace tropdiv {

// Total order on working vertices; order[i] is the vertex of rank i. Every
// edge is oriented towards its earlier endpoint.
struct AcyclicOrder {
  WorkingGraphPtr working;
  std::vector<int> order;

  // rank[v] = position of v in `order`.
  std::vector<int> Ranks() const;
};

// K+(v) = (number of edges from v to earlier vertices) - 1.
struct Moderator {
  Config k;
  AcyclicOrder order;
};

// Throws ValidationError when `order` is not a permutation.
Moderator ModeratorFromOrder(const AcyclicOrder& order);

// Kahn's algorithm over the induced orientation.
bool IsAcyclic(const AcyclicOrder& order);

// A v0-reduced moderator K+ >= d with K+(v0) = -1, for d v0-reduced with
// d(v0) < 0. The order starts at v0 and interleaves the burning sequence
// of d - d(v0)[v0] with the remaining vertices of valence >= 2, taken in BFS
// order inside each region the fire has reached; valence-1 vertices go last.
Moderator DominatingModerator(const ChipFiring& firing, const Config& d,
                              int base);

// A vertex w != base with d + [w] still base-reduced. Requires d
// base-reduced and deg(d) - d(base) <= g - 1. Returns the smallest index
// among the candidates {w : d''(w) < K+(w)}, d'' = d - (d(base) + 1)[base].
int ExtendReduced(const ChipFiring& firing, const Config& d, int base);

Moderator DominatingModerator(const Divisor& d, const Point& base);
Point ExtendReduced(const Divisor& d, const Point& base);

}  // namespace tropdiv

#endif  // TROPDIV_MODERATOR_H_
