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

#ifndef TROPDIV_AUTOMORPHISM_H_
#define TROPDIV_AUTOMORPHISM_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropdiv/working_graph.h"

namespace tropdiv {

// Order-<=2 automorphism of a working graph. edge_map[e] is the image of
// working edge e; a fixed edge whose endpoints are swapped is reversed.
struct Involution {
  WorkingGraphPtr working;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<int> fixed_vertices;  // ascending
  int quotient_genus = 0;

  bool fixes(int v) const { return vertex_map[v] == v; }
};

// Completes a vertex involution to an edge involution. Parallel classes
// mapped to another class are matched in index order. A class with both
// endpoints fixed has its edges swapped in consecutive pairs; a class with
// swapped endpoints keeps every edge, reversed. This choice gives the
// smallest quotient genus for the vertex map. Throws ValidationError if the
// vertex map is not an adjacency-preserving involution.
Involution MakeInvolution(WorkingGraphPtr working,
                          std::vector<int> vertex_map);

// Genus |E_q| - |V_q| + 1 of the quotient graph. A reversed edge folds onto
// a half-edge, contributing one vertex and one edge.
int QuotientGenus(const WorkingGraph& working,
                  const std::vector<int>& vertex_map,
                  const std::vector<int>& edge_map);

struct InvolutionSearchOptions {
  std::vector<int> pinned;       // vertices forced to be fixed
  bool tree_quotient_only = true;
  std::size_t max_nodes = 5'000'000;  // backtracking budget
};

// All involutive automorphisms, by backtracking over vertex images in BFS
// order. Images must match valence and edge multiplicities to every vertex
// already placed. Throws ResourceError when the budget runs out.
std::vector<Involution> EnumerateInvolutions(
    const WorkingGraphPtr& working, const InvolutionSearchOptions& options);

}  // namespace tropdiv

#endif  // TROPDIV_AUTOMORPHISM_H_
