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

#ifndef TROPDIV_CORPUS_H_
#define TROPDIV_CORPUS_H_

#include <string>
#include <vector>

#include "tropdiv/divisor.h"
#include "tropdiv/metric_graph.h"

namespace tropdiv::corpus {

// Two vertices v1, v2 joined by g + 1 unit edges e1 .. e{g+1}.
GraphPtr Banana(int genus);
// Banana of genus 2 with vertices u, v.
GraphPtr Theta();
// Center v0 with bridges e1, e2, e3 to v1, v3, v5; each petal (v1,v2),
// (v3,v4), (v5,v6) is a pair of parallel unit edges. Genus 3.
GraphPtr ThreePetal(int center_weight = 0);
// Genus-4 ladder: top row w1-v1-w3, bottom row v2-b2-b3, rungs through the
// middle vertices m1, w2, m3 and end arcs through m0, m4. All unit edges.
GraphPtr Ladder4();
GraphPtr K4();
// Path v0 - v1 - ... - v{n}.
GraphPtr Path(int edges);
// Center c with leaves l1 .. lk.
GraphPtr Star(int leaves);
// Cycle v0 .. v{n-1}, genus 1.
GraphPtr Cycle(int vertices);
// Single vertex "v" of the given weight, no edges.
GraphPtr WeightedVertex(int weight);

struct Fixture {
  std::string name;  // corpus file stem
  GraphPtr graph;
  int genus = 0;     // weighted
  bool hyperelliptic = false;
};

// The graphs shipped under corpus/.
std::vector<Fixture> Fixtures();

}  // namespace tropdiv::corpus

#endif  // TROPDIV_CORPUS_H_
