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

#ifndef TROPDIV_RANK_H_
#define TROPDIV_RANK_H_

#include <cstddef>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "tropdiv/chip_firing.h"
#include "tropdiv/divisor.h"
#include "tropdiv/working_graph.h"

namespace tropdiv {

struct ConfigHash {
  std::size_t operator()(const Config& config) const;
};

// Baker-Norine rank on one working graph:
//   r(D) = -1 if D is not equivalent to an effective divisor,
//   r(D) = 1 + min over probe vertices v of r(D - v) otherwise,
// memoized on the reduced representative at working vertex 0. The probes
// are the base vertices plus every loop midpoint, a rank-determining set.
// Rank() may be called concurrently.
class RankEngine {
 public:
  explicit RankEngine(WorkingGraphPtr working);

  const WorkingGraphPtr& working() const { return firing_.working_ptr(); }
  const ChipFiring& firing() const { return firing_; }

  int Rank(const Config& config) const;
  int Rank(const Divisor& divisor) const;
  std::size_t memo_size() const;

 private:
  int RankOfReduced(const Config& reduced) const;

  ChipFiring firing_;
  std::vector<int> probes_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Config, int, ConfigHash> memo_;
};

// Rank on the coarsest working graph carrying `divisor`.
int Rank(const Divisor& divisor);

// Rank of the divisor's image in the virtual weightless graph.
int RankWeighted(const Divisor& divisor);

// Embeds a divisor into the virtual weightless graph of its graph.
Divisor EmbedWeightless(const Divisor& divisor);

struct RiemannRoch {
  int rank = 0;             // r(D)
  int dual_rank = 0;        // r(K - D)
  std::int64_t lhs = 0;     // r(D) - r(K - D)
  std::int64_t rhs = 0;     // deg(D) + 1 - g
  bool equal = false;
};

// Both sides evaluated with the rank engine. Requires a weightless graph.
RiemannRoch RrCheck(const Divisor& divisor);

}  // namespace tropdiv

#endif  // TROPDIV_RANK_H_
