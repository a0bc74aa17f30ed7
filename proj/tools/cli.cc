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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "tropdiv/chip_firing.h"
#include "tropdiv/errors.h"
#include "tropdiv/hyperelliptic.h"
#include "tropdiv/json_io.h"
#include "tropdiv/moderator.h"
#include "tropdiv/oracle.h"
#include "tropdiv/rank.h"

namespace tropdiv {

namespace {

struct Args {
  std::string graph;
  std::string divisor;
  std::string other;
  std::string base;
  std::string order;
  std::string emit_dot;
  bool weighted = false;
  bool pretty = false;
  int degree = 0;
  int rank = 0;
  std::int64_t denominator = 1;
  std::size_t caps = 0;
  int jobs = 1;
};

// "v0" or "e1@1/2".
Point ParsePoint(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos) return Point::AtVertex(text);
  return Point::OnEdge(text.substr(0, at),
                       Rational::Parse(std::string_view(text).substr(at + 1)));
}

Point BaseOr(const Args& args, const GraphPtr& graph) {
  if (!args.base.empty()) return ParsePoint(args.base);
  return Point::AtVertex(graph->vertices().front().id);
}

void EmitDot(const Args& args, const std::string& dot) {
  if (args.emit_dot.empty()) return;
  std::ofstream file(args.emit_dot);
  if (!file) throw ValidationError("cannot write '" + args.emit_dot + "'");
  file << dot;
}

Json ErrorJson(std::string_view kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation:
      return 2;
    case ErrorKind::kPrecondition:
    case ErrorKind::kBinding:
    case ErrorKind::kRefinement:
      return 3;
    case ErrorKind::kResource:
      return 4;
    case ErrorKind::kInternal:
      return 1;
  }
  return 1;
}

using Handler = std::function<Json(const Args&)>;

Json GenusCmd(const Args& a) {
  tropdiv::Genus g = ComputeGenus(*GraphFromJson(ReadJsonFile(a.graph)));
  return {{"unweighted", g.unweighted}, {"weighted", g.weighted}};
}

Json ReduceCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  EmitDot(a, GraphToDot(*graph));
  Divisor d = DivisorFromJson(ReadJsonFile(a.divisor), graph);
  return ReductionToJson(Reduce(d, BaseOr(a, graph)));
}

Json RankCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  Divisor d = DivisorFromJson(ReadJsonFile(a.divisor), graph);
  return {{"rank", a.weighted ? RankWeighted(d) : Rank(d)}};
}

Json EquivCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  Divisor d1 = DivisorFromJson(ReadJsonFile(a.divisor), graph);
  Divisor d2 = DivisorFromJson(ReadJsonFile(a.other), graph);
  Equivalence eq = LinearlyEquivalent(d1, d2);
  Json out = {{"equivalent", eq.equivalent}};
  if (eq.witness) {
    Json witness = Json::object();
    for (const auto& [label, v] : eq.witness->ToMap()) witness[label] = v;
    out["witness"] = witness;
  }
  return out;
}

Json CanonicalCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  Divisor k = CanonicalDivisor(graph, a.weighted);
  return {{"canonical", DivisorToJson(k)}, {"degree", k.degree()}};
}

Json RrCheckCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  RiemannRoch rr = RrCheck(DivisorFromJson(ReadJsonFile(a.divisor), graph));
  return {{"rank", rr.rank},
          {"dual_rank", rr.dual_rank},
          {"lhs", rr.lhs},
          {"rhs", rr.rhs},
          {"equal", rr.equal}};
}

Json InvolutionJson(const InvolutionReport& report) {
  Json out = {{"core_count", report.core_count},
              {"count", report.extended_count}};
  out["involution"] =
      report.involution ? InvolutionToJson(*report.involution) : Json();
  return out;
}

Json HyperellipticCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  EmitDot(a, GraphToDot(*graph));
  HyperellipticCert cert = IsHyperelliptic(graph);
  Json out = {{"hyperelliptic", cert.verdict},
              {"genus", cert.genus},
              {"pairs_checked", cert.pairs_checked}};
  out["pair"] =
      cert.pair ? Json::array({cert.pair->first, cert.pair->second}) : Json();
  if (cert.involution) {
    out["consistent"] = cert.consistent;
    out["involution"] = InvolutionJson(*cert.involution);
  }
  return out;
}

Json InvolutionCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  InvolutionReport report = FindInvolution(graph);
  Json out = {{"found", report.involution.has_value()}};
  Json details = InvolutionJson(report);
  for (auto& [key, value] : details.items()) out[key] = value;
  return out;
}

Json PCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  Divisor d = DivisorFromJson(ReadJsonFile(a.divisor), graph);
  auto hyp = HyperellipticStructure::Analyze(graph);
  Point base = a.base.empty() ? hyp->base() : ParsePoint(a.base);
  return {{"p", hyp->PValueAt(d, base)}, {"base", PointToJson(base)}};
}

Json HypRankCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  Divisor d = DivisorFromJson(ReadJsonFile(a.divisor), graph);
  auto hyp = HyperellipticStructure::Analyze(graph);
  return {{"rank", hyp->HypRank(d)},
          {"p", hyp->PValue(d)},
          {"degree", d.degree()},
          {"genus", hyp->genus()}};
}

Json ConditionICmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  ConditionIResult r = CheckConditionI(*graph);
  Json out = {{"holds", r.holds}};
  if (!r.holds) {
    out["witness"] = {
        {"vertex", r.vertex}, {"count", r.count}, {"bound", r.bound}};
  }
  return out;
}

Json ModeratorCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  Moderator k;
  if (!a.order.empty()) {
    auto wg = WorkingGraph::Build(graph);
    std::map<std::string, int> index;
    for (int v = 0; v < wg->vertex_count(); ++v) index[wg->Label(v)] = v;
    Json labels = ReadJsonFile(a.order);
    if (!labels.is_array()) throw ValidationError("order must be an array");
    AcyclicOrder order{wg, {}};
    for (const Json& label : labels) {
      auto it = label.is_string() ? index.find(label.get<std::string>())
                                  : index.end();
      if (it == index.end()) {
        throw ValidationError("unknown working vertex " + label.dump());
      }
      order.order.push_back(it->second);
    }
    k = ModeratorFromOrder(order);
  } else {
    if (a.divisor.empty()) {
      throw ValidationError("moderator needs a divisor or --order");
    }
    Divisor d = DivisorFromJson(ReadJsonFile(a.divisor), graph);
    k = DominatingModerator(d, BaseOr(a, graph));
  }
  EmitDot(a, OrderToDot(k.order));
  return ModeratorToJson(k);
}

Json ExtendCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  Divisor d = DivisorFromJson(ReadJsonFile(a.divisor), graph);
  Point w = ExtendReduced(d, BaseOr(a, graph));
  Divisor result = d;
  result.Add(w, 1);
  return {{"w", PointToJson(w)}, {"result", DivisorToJson(result)}};
}

Json WdrCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  WdrOptions options;
  options.degree = a.degree;
  options.rank = a.rank;
  options.denominator = a.denominator;
  options.jobs = a.jobs;
  if (a.caps > 0) options.max_multisets = a.caps;
  return WdrToJson(WdrEnumerate(graph, options));
}

Json OracleRankCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  OracleCaps caps;
  if (a.caps > 0) caps.max_divisors = a.caps;
  return {{"rank",
           OracleRank(DivisorFromJson(ReadJsonFile(a.divisor), graph), caps)}};
}

Json OracleEquivCmd(const Args& a) {
  GraphPtr graph = GraphFromJson(ReadJsonFile(a.graph));
  return {{"equivalent",
           OracleEquivalent(DivisorFromJson(ReadJsonFile(a.divisor), graph),
                            DivisorFromJson(ReadJsonFile(a.other), graph))}};
}

}  // namespace

int RunCli(const std::vector<std::string>& argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Divisors, ranks and hyperelliptic structure on metric graphs",
               "tropdiv"};
  app.require_subcommand(1);
  Args args;
  app.add_flag("--pretty", args.pretty, "Indent JSON output");

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto command = [&](const char* name, const char* help, Handler handler,
                     int divisors) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", args.graph, "Graph JSON file")->required();
    if (divisors >= 1) {
      sub->add_option("divisor", args.divisor, "Divisor JSON file")->required();
    }
    if (divisors >= 2) {
      sub->add_option("other", args.other, "Second divisor JSON file")
          ->required();
    }
    sub->add_option("--emit-dot", args.emit_dot, "Write Graphviz output here");
    commands.emplace_back(sub, std::move(handler));
    return sub;
  };

  command("genus", "Unweighted and weighted genus", GenusCmd, 0);
  command("reduce", "Reduced divisor with firing-script witness", ReduceCmd, 1)
      ->add_option("--base", args.base, "Base point (v0 or e1@1/2)");
  command("rank", "Baker-Norine rank", RankCmd, 1)
      ->add_flag("--weighted", args.weighted, "Rank on the weighted graph");
  command("equiv", "Linear equivalence with witness", EquivCmd, 2);
  command("canonical", "Canonical divisor", CanonicalCmd, 0)
      ->add_flag("--weighted", args.weighted, "Include vertex weights");
  command("rr-check", "Riemann-Roch check", RrCheckCmd, 1);
  command("hyperelliptic", "Hyperellipticity certificate", HyperellipticCmd, 0);
  command("involution", "Hyperelliptic involution search", InvolutionCmd, 0);
  command("p", "p-value at a fixed point", PCmd, 1)
      ->add_option("--base", args.base, "Fixed point of the involution");
  command("hyp-rank", "Rank from the hyperelliptic formula", HypRankCmd, 1);
  command("condition-i", "Positive-type bridge bound", ConditionICmd, 0);
  CLI::App* mod =
      command("moderator", "Moderator of an order or dominating a divisor",
              ModeratorCmd, 0);
  mod->add_option("divisor", args.divisor, "Divisor JSON file");
  mod->add_option("--order", args.order, "JSON array of working labels");
  mod->add_option("--base", args.base, "Base point");
  command("extend", "Extend a reduced divisor by one point", ExtendCmd, 1)
      ->add_option("--base", args.base, "Base point");
  CLI::App* wdr = command("wdr", "Enumerate W_d^r on a grid", WdrCmd, 0);
  wdr->add_option("-d", args.degree, "Degree")->required();
  wdr->add_option("-r", args.rank, "Rank")->required();
  wdr->add_option("--denominator", args.denominator, "Grid denominator");
  wdr->add_option("--caps", args.caps, "Maximum divisors enumerated");
  wdr->add_option("--jobs", args.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  command("oracle-rank", "Rank from the definition", OracleRankCmd, 1)
      ->add_option("--caps", args.caps, "Maximum divisors per degree");
  command("oracle-equiv", "Equivalence via the Laplacian lattice",
          OracleEquivCmd, 2);

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << ErrorJson("validation", e.what()).dump() << "\n";
    return 2;
  }

  const int indent = args.pretty ? 2 : -1;
  try {
    for (auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        EmitDot(args, GraphToDot(*GraphFromJson(ReadJsonFile(args.graph))));
        Json result = handler(args);
        out << result.dump(indent) << "\n";
        return 0;
      }
    }
    throw InternalError("no subcommand selected");
  } catch (const Error& e) {
    err << ErrorJson(ErrorKindName(e.kind()), e.what()).dump() << "\n";
    return ExitCode(e.kind());
  } catch (const std::exception& e) {
    err << ErrorJson("internal", e.what()).dump() << "\n";
    return 1;
  }
}

}  // namespace tropdiv
