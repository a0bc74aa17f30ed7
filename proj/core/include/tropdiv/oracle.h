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

#ifndef TROPDIV_ORACLE_H_
#define TROPDIV_ORACLE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tropdiv/divisor.h"
#include "tropdiv/working_graph.h"

namespace tropdiv {

// Lattice of principal divisors on a working graph, i.e. the integer image
// of the Laplacian L = diag(valence) - adjacency, via its Smith normal form
// U L V = S computed in arbitrary precision. Shares no code with the
// chip-firing engine.
class LaplacianLattice {
 public:
  explicit LaplacianLattice(WorkingGraphPtr working);
  ~LaplacianLattice();
  LaplacianLattice(LaplacianLattice&&) noexcept;
  LaplacianLattice& operator=(LaplacianLattice&&) noexcept;

  const WorkingGraphPtr& working() const { return working_; }
  int size() const;

  // Diagonal of S as decimal strings, and its entries reduced to int64 when
  // they fit (otherwise -1).
  std::vector<std::string> invariant_factors() const;
  // Number of invariant factors equal to zero; 1 for a connected graph.
  int corank() const;

  // Entry (i, j) of L, U, V, S as decimal strings, for checks.
  std::string Laplacian(int i, int j) const;
  std::string U(int i, int j) const;
  std::string V(int i, int j) const;
  std::string S(int i, int j) const;

  // x lies in the image of L.
  bool Contains(const Config& x) const;
  // Canonical key of the class of x modulo the image of L.
  std::string ClassKey(const Config& x) const;

 private:
  struct Impl;
  WorkingGraphPtr working_;
  std::unique_ptr<Impl> impl_;
};

bool OracleEquivalent(const Divisor& d1, const Divisor& d2);

struct OracleCaps {
  // Largest number of effective divisors enumerated for a single degree.
  std::size_t max_divisors = 2'000'000;
};

// Rank straight from the definition: the largest s such that d - E is
// equivalent to an effective divisor for every effective E of degree s on
// the working grid. Every candidate divisor is enumerated exhaustively.
int OracleRank(const Divisor& d, const OracleCaps& caps = {});
int OracleRank(const LaplacianLattice& lattice, const Config& d,
               const OracleCaps& caps = {});

}  // namespace tropdiv

#endif  // TROPDIV_ORACLE_H_
