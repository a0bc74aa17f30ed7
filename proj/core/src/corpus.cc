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

#include "tropdiv/corpus.h"

#include <utility>

namespace tropdiv::corpus {

namespace {

GraphPtr Unit(std::vector<std::string> vertices,
              std::vector<std::pair<std::string, std::string>> edges) {
  std::vector<Vertex> vs;
  for (auto& id : vertices) vs.push_back(Vertex{std::move(id), 0});
  std::vector<Edge> es;
  int k = 1;
  for (auto& [a, b] : edges) {
    es.push_back(Edge{"e" + std::to_string(k++), a, b, Rational(1)});
  }
  return MetricGraph::Create(std::move(vs), std::move(es));
}

}  // namespace

GraphPtr Banana(int genus) {
  std::vector<std::pair<std::string, std::string>> edges(genus + 1,
                                                         {"v1", "v2"});
  return Unit({"v1", "v2"}, edges);
}

GraphPtr Theta() { return Unit({"u", "v"}, {{"u", "v"}, {"u", "v"}, {"u", "v"}}); }

GraphPtr ThreePetal(int center_weight) {
  std::vector<Vertex> vs;
  for (int i = 0; i <= 6; ++i) vs.push_back(Vertex{"v" + std::to_string(i), 0});
  vs[0].weight = center_weight;
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"v0", "v1"}, {"v0", "v3"}, {"v0", "v5"}, {"v1", "v2"}, {"v1", "v2"},
      {"v3", "v4"}, {"v3", "v4"}, {"v5", "v6"}, {"v5", "v6"}};
  std::vector<Edge> es;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    es.push_back(Edge{"e" + std::to_string(i + 1), pairs[i].first,
                      pairs[i].second, Rational(1)});
  }
  return MetricGraph::Create(std::move(vs), std::move(es));
}

GraphPtr Ladder4() {
  return Unit({"m0", "m1", "w2", "m3", "m4", "w1", "v1", "w3", "v2", "b2", "b3"},
              {{"w1", "v1"},
               {"v1", "w3"},
               {"v2", "b2"},
               {"b2", "b3"},
               {"v2", "m1"},
               {"m1", "w1"},
               {"b2", "w2"},
               {"w2", "v1"},
               {"b3", "m3"},
               {"m3", "w3"},
               {"m0", "w1"},
               {"m0", "v2"},
               {"m4", "w3"},
               {"m4", "b3"}});
}

GraphPtr K4() {
  return Unit({"v0", "v1", "v2", "v3"}, {{"v0", "v1"},
                                         {"v0", "v2"},
                                         {"v0", "v3"},
                                         {"v1", "v2"},
                                         {"v1", "v3"},
                                         {"v2", "v3"}});
}

GraphPtr Path(int edges) {
  std::vector<std::string> vs{"v0"};
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= edges; ++i) {
    vs.push_back("v" + std::to_string(i));
    es.emplace_back(vs[i - 1], vs[i]);
  }
  return Unit(vs, es);
}

GraphPtr Star(int leaves) {
  std::vector<std::string> vs{"c"};
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= leaves; ++i) {
    vs.push_back("l" + std::to_string(i));
    es.emplace_back("c", vs.back());
  }
  return Unit(vs, es);
}

GraphPtr Cycle(int vertices) {
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < vertices; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < vertices; ++i) {
    es.emplace_back(vs[i], vs[(i + 1) % vertices]);
  }
  return Unit(vs, es);
}

GraphPtr WeightedVertex(int weight) {
  return MetricGraph::Create({Vertex{"v", weight}}, {});
}

std::vector<Fixture> Fixtures() {
  return {
      {"banana2", Banana(2), 2, true},
      {"banana3", Banana(3), 3, true},
      {"banana4", Banana(4), 4, true},
      {"banana5", Banana(5), 5, true},
      {"theta", Theta(), 2, true},
      {"three-petal", ThreePetal(), 3, true},
      {"ladder4", Ladder4(), 4, true},
      {"k4", K4(), 3, false},
      {"tree-path", Path(2), 0, false},
      {"tree-star", Star(3), 0, false},
      {"cycle", Cycle(3), 1, false},
      {"weighted1", WeightedVertex(1), 1, false},
      {"weighted2", WeightedVertex(2), 2, true},
      {"weighted3", WeightedVertex(3), 3, true},
  };
}

}  // namespace tropdiv::corpus
