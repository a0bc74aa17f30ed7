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

#include "tropdiv/json_io.h"

#include <fstream>
#include <sstream>

#include "tropdiv/errors.h"

namespace tropdiv {

namespace {

Rational RationalFromJson(const Json& json, const char* what) {
  if (json.is_string()) return Rational::Parse(json.get<std::string>());
  if (json.is_number_integer()) return Rational(json.get<std::int64_t>());
  throw ValidationError(std::string(what) +
                        " must be an integer or a \"p/q\" string");
}

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return json.at(key);
}

std::string StringField(const Json& json, const char* key) {
  const Json& value = Field(json, key);
  if (!value.is_string()) {
    throw ValidationError(std::string("field '") + key + "' must be a string");
  }
  return value.get<std::string>();
}

}  // namespace

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str());
}

GraphPtr GraphFromJson(const Json& json) {
  const Json& vs = Field(json, "vertices");
  if (!vs.is_array()) throw ValidationError("'vertices' must be an array");
  std::vector<Vertex> vertices;
  for (const Json& v : vs) {
    Vertex vertex{StringField(v, "id"), 0};
    if (v.contains("weight")) {
      if (!v.at("weight").is_number_integer()) {
        throw ValidationError("vertex weight must be an integer");
      }
      vertex.weight = v.at("weight").get<int>();
    }
    vertices.push_back(std::move(vertex));
  }
  std::vector<Edge> edges;
  if (json.contains("edges")) {
    const Json& es = json.at("edges");
    if (!es.is_array()) throw ValidationError("'edges' must be an array");
    for (const Json& e : es) {
      const Json& ends = Field(e, "ends");
      if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() ||
          !ends[1].is_string()) {
        throw ValidationError("edge 'ends' must be two vertex ids");
      }
      edges.push_back(Edge{StringField(e, "id"), ends[0].get<std::string>(),
                           ends[1].get<std::string>(),
                           RationalFromJson(Field(e, "length"), "length")});
    }
  }
  return MetricGraph::Create(std::move(vertices), std::move(edges));
}

Json GraphToJson(const MetricGraph& graph) {
  Json out = Json::object();
  out["vertices"] = Json::array();
  for (const Vertex& v : graph.vertices()) {
    out["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  }
  out["edges"] = Json::array();
  for (const Edge& e : graph.edges()) {
    out["edges"].push_back({{"id", e.id},
                            {"ends", {e.tail, e.head}},
                            {"length", e.length.ToString()}});
  }
  return out;
}

Point PointFromJson(const Json& json) {
  if (json.is_string()) return Point::AtVertex(json.get<std::string>());
  if (json.is_object()) {
    return Point::OnEdge(StringField(json, "edge"),
                         RationalFromJson(Field(json, "offset"), "offset"));
  }
  throw ValidationError("a point is a vertex id or {\"edge\",\"offset\"}");
}

Json PointToJson(const Point& point) {
  if (point.is_vertex()) return point.id();
  return {{"edge", point.id()}, {"offset", point.offset().ToString()}};
}

Divisor DivisorFromJson(const Json& json, const GraphPtr& graph) {
  if (!json.is_array()) throw ValidationError("a divisor is a JSON array");
  Divisor out(graph);
  for (const Json& term : json) {
    const Json& coeff = Field(term, "coeff");
    if (!coeff.is_number_integer()) {
      throw ValidationError("divisor coefficients must be integers");
    }
    out.Add(PointFromJson(Field(term, "at")), coeff.get<int>());
  }
  return out;
}

Json DivisorToJson(const Divisor& divisor) {
  Json out = Json::array();
  for (const auto& [point, c] : divisor.terms()) {
    out.push_back({{"at", PointToJson(point)}, {"coeff", c}});
  }
  return out;
}

Json ReductionToJson(const ReductionResult& result) {
  Json witness = Json::object();
  for (const auto& [label, value] : result.witness.ToMap()) {
    witness[label] = value;
  }
  return {{"base", PointToJson(result.base)},
          {"reduced", DivisorToJson(result.reduced)},
          {"witness", witness}};
}

Json InvolutionToJson(const Involution& involution) {
  const WorkingGraph& wg = *involution.working;
  Json vertex_map = Json::object();
  for (int v = 0; v < wg.vertex_count(); ++v) {
    vertex_map[wg.Label(v)] = wg.Label(involution.vertex_map[v]);
  }
  Json edge_map = Json::object();
  for (int e = 0; e < wg.edge_count(); ++e) {
    edge_map[wg.EdgeLabel(e)] = wg.EdgeLabel(involution.edge_map[e]);
  }
  Json fixed = Json::array();
  for (int v : involution.fixed_vertices) fixed.push_back(wg.Label(v));
  return {{"vertex_map", vertex_map},
          {"edge_map", edge_map},
          {"fixed_vertices", fixed},
          {"quotient_genus", involution.quotient_genus}};
}

Json ModeratorToJson(const Moderator& moderator) {
  const WorkingGraph& wg = *moderator.order.working;
  Json order = Json::array();
  for (int v : moderator.order.order) order.push_back(wg.Label(v));
  Json k = Json::object();
  for (int v : moderator.order.order) k[wg.Label(v)] = moderator.k[v];
  return {{"order", order}, {"K", k}};
}

Json WdrToJson(const WdrResult& result) {
  Json divisors = Json::array();
  for (const Divisor& d : result.divisors) divisors.push_back(DivisorToJson(d));
  return {{"denominator", result.denominator},
          {"complete_for_grid", result.complete_for_grid},
          {"classes", result.classes},
          {"divisors", divisors}};
}

std::string GraphToDot(const MetricGraph& graph) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const Vertex& v : graph.vertices()) {
    out << "  \"" << v.id << "\" [label=\"" << v.id;
    if (v.weight > 0) out << " (" << v.weight << ")";
    out << "\"];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  \"" << e.tail << "\" -- \"" << e.head << "\" [label=\"" << e.id
        << ":" << e.length << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string OrderToDot(const AcyclicOrder& order) {
  const WorkingGraph& wg = *order.working;
  std::vector<int> rank = order.Ranks();
  std::ostringstream out;
  out << "digraph K {\n";
  for (int v : order.order) out << "  \"" << wg.Label(v) << "\";\n";
  for (int e = 0; e < wg.edge_count(); ++e) {
    auto [a, b] = wg.edge(e);
    if (rank[a] < rank[b]) std::swap(a, b);
    out << "  \"" << wg.Label(a) << "\" -> \"" << wg.Label(b) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tropdiv
