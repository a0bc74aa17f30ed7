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

#ifndef TROPDIV_JSON_IO_H_
#define TROPDIV_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "tropdiv/automorphism.h"
#include "tropdiv/chip_firing.h"
#include "tropdiv/divisor.h"
#include "tropdiv/hyperelliptic.h"
#include "tropdiv/metric_graph.h"
#include "tropdiv/moderator.h"

namespace tropdiv {

// Key order is preserved so that output is byte-stable.
using Json = nlohmann::ordered_json;

// Parse failures and schema violations throw ValidationError.
Json ReadJsonFile(const std::string& path);
Json ParseJson(const std::string& text);

// {"vertices":[{"id":"v0","weight":0}],
//  "edges":[{"id":"e1","ends":["v0","v1"],"length":"3/2"}]}
// Extra top-level keys (such as "meta") are ignored.
GraphPtr GraphFromJson(const Json& json);
Json GraphToJson(const MetricGraph& graph);

// "v0" or {"edge":"e1","offset":"1/3"}.
Point PointFromJson(const Json& json);
Json PointToJson(const Point& point);

// [{"at":"v0","coeff":2},{"at":{"edge":"e1","offset":"1/2"},"coeff":-1}]
Divisor DivisorFromJson(const Json& json, const GraphPtr& graph);
Json DivisorToJson(const Divisor& divisor);

Json ReductionToJson(const ReductionResult& result);
Json InvolutionToJson(const Involution& involution);
Json ModeratorToJson(const Moderator& moderator);
Json WdrToJson(const WdrResult& result);

// Graphviz export; with an order, edges point towards earlier vertices.
std::string GraphToDot(const MetricGraph& graph);
std::string OrderToDot(const AcyclicOrder& order);

}  // namespace tropdiv

#endif  // TROPDIV_JSON_IO_H_
