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

#include "tropdiv/hyperelliptic.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "tropdiv/errors.h"
#include "tropdiv/moderator.h"

namespace tropdiv {

namespace {

std::set<std::int64_t> LengthDenominators(const MetricGraph& g) {
  std::set<std::int64_t> out;
  for (const Edge& e : g.edges()) out.insert(e.length.denominator());
  return out;
}

// Working vertices lying on a bridge, endpoints included.
std::vector<int> BridgePoints(const WorkingGraph& wg) {
  const MetricGraph& g = *wg.base();
  std::set<std::string> bridges;
  std::vector<bool> on_bridge(wg.vertex_count(), false);
  for (std::size_t i : FindBridges(g)) {
    const Edge& e = g.edges()[i];
    bridges.insert(e.id);
    on_bridge[*g.vertex_index(e.tail)] = true;
    on_bridge[*g.vertex_index(e.head)] = true;
  }
  for (int v = wg.base_vertex_count(); v < wg.vertex_count(); ++v) {
    if (bridges.count(wg.PointOf(v).id())) on_bridge[v] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < wg.vertex_count(); ++v) {
    if (on_bridge[v]) out.push_back(v);
  }
  return out;
}

// id-smallest vertex of valence other than 2.
std::size_t CanonicalVertex(const MetricGraph& g) {
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    if (g.valence(i) != 2) return i;
  }
  throw InternalError("leafless graph of genus >= 2 has no branch vertex");
}

}  // namespace

InvolutionReport FindInvolution(const GraphPtr& graph) {
  if (ComputeGenus(*graph).weighted < 2) {
    throw PreconditionError("involution search needs genus >= 2");
  }
  InvolutionReport report;
  report.weightless = VirtualWeightless(*graph);
  report.leafless = ContractZeroWeightLeafEdges(report.weightless);
  const GraphPtr& leafless = report.leafless.graph;
  std::set<std::string> bridge_ids;
  for (std::size_t i : FindBridges(*leafless)) {
    bridge_ids.insert(leafless->edges()[i].id);
  }
  report.core = ContractEdges(leafless, bridge_ids);

  auto dens = LengthDenominators(*leafless);
  auto core_wg = WorkingGraph::Build(report.core.graph, dens);
  auto leaf_wg = WorkingGraph::Build(leafless, dens);

  InvolutionSearchOptions core_opts;
  auto core_found = EnumerateInvolutions(core_wg, core_opts);
  report.core_count = core_found.size();
  if (!core_found.empty()) report.core_involution = core_found.front();

  InvolutionSearchOptions leaf_opts;
  leaf_opts.pinned = BridgePoints(*leaf_wg);
  auto leaf_found = EnumerateInvolutions(leaf_wg, leaf_opts);
  report.extended_count = leaf_found.size();
  if (!leaf_found.empty()) report.involution = leaf_found.front();
  return report;
}

HyperellipticCert IsHyperelliptic(const GraphPtr& graph) {
  HyperellipticCert cert;
  cert.genus = ComputeGenus(*graph).weighted;
  if (cert.genus < 2) return cert;

  GraphPtr weightless = VirtualWeightless(*graph);
  RankEngine engine(WorkingGraph::Build(weightless));
  const auto& vertices = graph->vertices();
  for (std::size_t i = 0; i < vertices.size() && !cert.pair; ++i) {
    for (std::size_t j = i; j < vertices.size(); ++j) {
      ++cert.pairs_checked;
      Divisor d(weightless);
      d.Add(Point::AtVertex(vertices[i].id), 1);
      d.Add(Point::AtVertex(vertices[j].id), 1);
      if (engine.Rank(d) == 1) {
        cert.pair = {vertices[i].id, vertices[j].id};
        break;
      }
    }
  }
  cert.verdict = cert.pair.has_value();
  InvolutionReport report = FindInvolution(graph);
  if (cert.verdict != report.involution.has_value()) {
    throw InternalError(cert.verdict
                            ? "rank-1 pair found but no involution"
                            : "involution found but no rank-1 pair");
  }
  if (cert.verdict) {
    const Involution& inv = *report.involution;
    const WorkingGraph& wg = *inv.working;
    int w = static_cast<int>(CanonicalVertex(*report.leafless.graph));
    Config g12(wg.vertex_count(), 0);
    ++g12[w];
    ++g12[inv.vertex_map[w]];
    Divisor uv(weightless);
    uv.Add(Point::AtVertex(cert.pair->first), 1);
    uv.Add(Point::AtVertex(cert.pair->second), 1);
    Config pushed = ToConfig(PushForward(uv, report.leafless.retraction), wg);
    ChipFiring firing(inv.working);
    cert.consistent =
        firing.Reduce(pushed, 0).reduced == firing.Reduce(g12, 0).reduced;
    cert.involution = std::move(report);
  }
  return cert;
}

std::shared_ptr<const HyperellipticStructure> HyperellipticStructure::Analyze(
    const GraphPtr& graph) {
  if (ComputeGenus(*graph).weighted < 2) {
    throw PreconditionError("graph has genus < 2 and is not hyperelliptic");
  }
  std::shared_ptr<HyperellipticStructure> s(new HyperellipticStructure());
  s->graph_ = graph;
  s->report_ = FindInvolution(graph);
  if (!s->report_.involution) {
    throw PreconditionError("graph is not hyperelliptic");
  }
  if (s->report_.extended_count != 1 || s->report_.core_count != 1) {
    throw InternalError("hyperelliptic involution is not unique");
  }
  s->genus_ = ComputeGenus(*graph).weighted;
  const Involution& inv = *s->report_.involution;
  s->base_index_ = inv.fixed_vertices.front();
  for (int v : inv.fixed_vertices) {
    if (inv.working->is_base_vertex(v)) {
      s->base_index_ = v;
      break;
    }
  }
  s->base_ = inv.working->PointOf(s->base_index_);
  s->firing_ = std::make_unique<ChipFiring>(inv.working);
  return s;
}

std::vector<Point> HyperellipticStructure::FixedPoints() const {
  std::vector<Point> out;
  for (int v : involution().fixed_vertices) {
    out.push_back(working()->PointOf(v));
  }
  return out;
}

Point HyperellipticStructure::Image(const Point& point) const {
  int v = working()->RequireVertex(point);
  return working()->PointOf(involution().vertex_map[v]);
}

Divisor HyperellipticStructure::ToLeafless(const Divisor& d) const {
  if (SameGraph(d.graph(), leafless())) return d.Rebind(leafless());
  if (SameGraph(d.graph(), report_.weightless)) {
    return PushForward(d.Rebind(report_.weightless),
                       report_.leafless.retraction);
  }
  if (SameGraph(d.graph(), graph_)) {
    return PushForward(d.Rebind(report_.weightless),
                       report_.leafless.retraction);
  }
  throw BindingError("divisor is not bound to the analyzed graph");
}

int HyperellipticStructure::PValueConfig(const Config& config) const {
  return firing_->Reduce(config, base_index_).reduced[base_index_] / 2;
}

int HyperellipticStructure::PValueAt(const Divisor& d,
                                     const Point& fixed_point) const {
  Divisor dl = ToLeafless(d);
  if (!dl.is_effective()) throw PreconditionError("p needs an effective divisor");
  auto v = working()->VertexOf(fixed_point);
  if (!v || !involution().fixes(*v)) {
    throw PreconditionError("'" + fixed_point.ToString() +
                            "' is not a fixed point of the involution");
  }
  WorkingGraphPtr wg = working();
  auto dens = dl.denominators();
  dens.insert(wg->refinement());
  if (std::any_of(dens.begin(), dens.end(), [&](std::int64_t q) {
        return wg->refinement() % q != 0;
      })) {
    wg = WorkingGraph::Build(leafless(), dens);
  }
  ChipFiring firing(wg);
  int base = wg->RequireVertex(fixed_point);
  return firing.Reduce(ToConfig(dl, *wg), base).reduced[base] / 2;
}

int HyperellipticStructure::PValue(const Divisor& d) const {
  return PValueAt(d, base_);
}

int HyperellipticStructure::HypRank(const Divisor& d) const {
  int p = PValue(d);
  std::int64_t degree = d.degree();
  return static_cast<int>(degree - p <= genus_ ? p : degree - genus_);
}

Divisor HyperellipticStructure::G12Class() const {
  int v = static_cast<int>(CanonicalVertex(*leafless()));
  Divisor out(graph_);
  out.Add(working()->PointOf(v), 1);
  out.Add(working()->PointOf(involution().vertex_map[v]), 1);
  return out;
}

Divisor HyperellipticStructure::CompleteToGenus(const Divisor& d) const {
  Divisor dl = ToLeafless(d);
  if (!dl.is_effective()) {
    throw PreconditionError("completion needs an effective divisor");
  }
  const WorkingGraph& wg = *working();
  Config e = firing_->Reduce(ToConfig(dl, wg), base_index_).reduced;
  if (e[base_index_] >= 2) throw PreconditionError("completion needs p = 0");
  if (dl.degree() > genus_) {
    throw PreconditionError("completion needs degree <= g");
  }
  const bool lift = e[base_index_] == 1;
  e[base_index_] = 0;
  const int target = lift ? genus_ - 1 : genus_;
  while (std::accumulate(e.begin(), e.end(), 0) < target) {
    ++e[ExtendReduced(*firing_, e, base_index_)];
  }
  if (lift) ++e[base_index_];
  return FromConfig(e, wg);
}

WdrResult WdrEnumerate(const GraphPtr& graph, const WdrOptions& options) {
  if (options.degree < 0 || options.rank < 0 || options.denominator < 1) {
    throw PreconditionError("wdr needs d >= 0, r >= 0, denominator >= 1");
  }
  std::vector<Point> grid;
  for (const Vertex& v : graph->vertices()) grid.push_back(Point::AtVertex(v.id));
  for (const Edge& e : graph->edges()) {
    for (std::int64_t k = 1; Rational(k, options.denominator) < e.length; ++k) {
      grid.push_back(Point::OnEdge(e.id, Rational(k, options.denominator)));
    }
  }
  const std::size_t n = grid.size();
  // Number of multisets C(n + d - 1, d), saturating at the cap.
  unsigned __int128 count = 1;
  for (int i = 1; i <= options.degree; ++i) {
    count = count * (n + i - 1) / i;
    if (count > options.max_multisets) {
      throw ResourceError("wdr would enumerate more than " +
                          std::to_string(options.max_multisets) +
                          " divisors; raise --caps");
    }
  }

  auto wg = WorkingGraph::Build(graph, {options.denominator});
  ChipFiring firing(wg);
  std::vector<int> index(n);
  for (std::size_t i = 0; i < n; ++i) index[i] = wg->RequireVertex(grid[i]);

  WdrResult result;
  result.denominator = options.denominator;
  std::set<Config> classes;
  std::vector<std::size_t> pick(options.degree, 0);
  while (true) {
    Config config(wg->vertex_count(), 0);
    for (std::size_t i : pick) ++config[index[i]];
    classes.insert(firing.Reduce(config, 0).reduced);
    ++result.multisets;
    int pos = options.degree - 1;
    while (pos >= 0 && pick[pos] == n - 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < options.degree; ++j) pick[j] = pick[pos];
  }
  result.classes = classes.size();

  std::vector<Config> reps(classes.begin(), classes.end());
  GraphPtr weightless = VirtualWeightless(*graph);
  RankEngine engine(WorkingGraph::Build(weightless, {options.denominator}));
  std::vector<int> ranks(reps.size(), -2);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < reps.size(); i = next++) {
      Divisor d = FromConfig(reps[i], *wg).Rebind(weightless);
      ranks[i] = engine.Rank(d);
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (ranks[i] >= options.rank) {
      result.divisors.push_back(FromConfig(reps[i], *wg));
    }
  }
  std::sort(result.divisors.begin(), result.divisors.end());
  return result;
}

}  // namespace tropdiv
