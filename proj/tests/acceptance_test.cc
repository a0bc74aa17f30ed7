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

// Acceptance sweep: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "test_support.h"
#include "tropdiv/automorphism.h"
#include "tropdiv/chip_firing.h"
#include "tropdiv/corpus.h"
#include "tropdiv/errors.h"
#include "tropdiv/hyperelliptic.h"
#include "tropdiv/moderator.h"
#include "tropdiv/oracle.h"
#include "tropdiv/rank.h"

namespace tropdiv {
namespace {

using testing::Adjacency;
using testing::BurnsCompletely;
using testing::ForEachMultiset;
using testing::RandomGraph;
using testing::Rng;
using testing::Superstables;
using testing::Uniform;
using testing::VertexCounts;

// Collects failures; the first few are printed under the criterion line.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    std::lock_guard<std::mutex> lock(mu_);
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  template <typename A, typename B>
  void Equal(const A& a, const B& b, const std::string& what) {
    if (a == b) {
      Expect(true, what);
      return;
    }
    std::ostringstream os;
    os << what << ": got " << a << ", want " << b;
    Expect(false, os.str());
  }
  void Note(const std::string& s) { notes_ = s; }

  bool ok() const { return failed_ == 0; }
  long checks() const { return checks_; }
  long failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

 private:
  std::mutex mu_;
  std::atomic<long> checks_{0};
  std::atomic<long> failed_{0};
  std::vector<std::string> failures_;
  std::string notes_;
};

void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& f) {
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) f(i);
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
}

Divisor Vd(const GraphPtr& g, std::initializer_list<std::pair<const char*, int>> t) {
  return VertexDivisor(g, t);
}

std::string Name(const GraphPtr& g) {
  for (const auto& f : corpus::Fixtures()) {
    if (*f.graph == *g) return f.name;
  }
  return "graph";
}

int Degree(const Config& c) { return std::accumulate(c.begin(), c.end(), 0); }

// Hyperelliptic fixtures used across criteria 4, 7, 9 and 10.
std::vector<GraphPtr> HyperellipticCorpus() {
  return {corpus::Theta(),      corpus::Banana(3),      corpus::Banana(4),
          corpus::Banana(5),    corpus::ThreePetal(),   corpus::Ladder4(),
          corpus::WeightedVertex(2), corpus::WeightedVertex(3)};
}

// Tree of bridges decorated with loops and two-edge petals; hyperelliptic
// whenever its genus is at least 2.
GraphPtr RandomLoopTree(Rng& rng) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  const int n = Uniform(rng, 1, 4);
  auto edge = [&](const std::string& a, const std::string& b, Rational len) {
    es.push_back(Edge{"e" + std::to_string(es.size() + 1), a, b, len});
  };
  for (int i = 0; i < n; ++i) {
    vs.push_back(Vertex{"t" + std::to_string(i), 0});
    if (i > 0) {
      edge(vs[Uniform(rng, 0, i - 1)].id, vs[i].id,
           Rational(Uniform(rng, 1, 3), 2));
    }
  }
  int genus = 0;
  while (genus < 2 || (genus < 4 && Uniform(rng, 0, 1))) {
    const std::string at = vs[Uniform(rng, 0, n - 1)].id;
    if (Uniform(rng, 0, 1)) {
      edge(at, at, Rational(Uniform(rng, 1, 2)));
    } else {
      std::string tip = "p" + std::to_string(vs.size());
      vs.push_back(Vertex{tip, 0});
      Rational len(Uniform(rng, 1, 2), 2);
      edge(at, tip, len);
      edge(at, tip, len);
    }
    ++genus;
  }
  return MetricGraph::Create(vs, es);
}

// ---------------------------------------------------------------------------

void Criterion1(Check& c) {
  for (int g = 3; g <= 5; ++g) {
    c.Equal(Rank(Vd(corpus::Banana(g), {{"v1", 1}, {"v2", 1}})), 1,
            "banana" + std::to_string(g) + " rank([v1]+[v2])");
  }
  c.Equal(Rank(Vd(corpus::ThreePetal(), {{"v0", 2}})), 1,
          "three-petal rank(2[v0])");
  c.Equal(ComputeGenus(*corpus::ThreePetal()).weighted, 3, "three-petal genus");
  c.Equal(Rank(Vd(corpus::Ladder4(), {{"v1", 3}, {"v2", 1}})), 1,
          "ladder4 rank(3[v1]+[v2])");
  c.Equal(ComputeGenus(*corpus::Ladder4()).weighted, 4, "ladder4 genus");
}

void Criterion2(Check& c) {
  ConditionIResult petal = CheckConditionI(*corpus::ThreePetal());
  c.Expect(!petal.holds, "three-petal must fail");
  c.Equal(petal.vertex, std::string("v0"), "three-petal witness vertex");
  c.Equal(petal.count, 3, "three-petal positive bridges");
  c.Equal(petal.bound, 2, "three-petal bound");
  c.Expect(CheckConditionI(*corpus::Ladder4()).holds, "ladder4 passes");
  for (int g = 2; g <= 5; ++g) {
    c.Expect(CheckConditionI(*corpus::Banana(g)).holds,
             "banana" + std::to_string(g) + " passes");
  }
}

void Criterion3(Check& c) {
  long divisors = 0;
  for (GraphPtr g : {corpus::Theta(), corpus::Banana(3), corpus::K4(),
                     corpus::ThreePetal(), corpus::Ladder4()}) {
    const int genus = ComputeGenus(*g).unweighted;
    auto classes = Superstables(Adjacency(*g), 0);
    std::vector<Divisor> sweep;
    for (int deg = -2; deg <= 2 * genus; ++deg) {
      for (auto counts : classes) {
        counts[0] += deg - Degree(counts);
        sweep.push_back(VertexCounts(g, counts));
      }
    }
    divisors += static_cast<long>(sweep.size());
    // One engine per graph so that the memo is shared across the sweep.
    RankEngine engine(WorkingGraph::Build(g));
    const Divisor k = CanonicalDivisor(g, false);
    ParallelFor(sweep.size(), [&](std::size_t i) {
      const Divisor& d = sweep[i];
      const std::int64_t lhs = engine.Rank(d) - engine.Rank(k - d);
      c.Expect(lhs == d.degree() + 1 - genus,
               Name(g) + " RR at degree " + std::to_string(d.degree()));
    });
    c.Equal(RrCheck(sweep.back()).equal, true, Name(g) + " rr-check path");
  }
  Rng rng(1003);
  std::vector<Divisor> random;
  for (int i = 0; i < 500; ++i) {
    GraphPtr g = RandomGraph(rng, Uniform(rng, 1, 10), Uniform(rng, 0, 3));
    const int genus = ComputeGenus(*g).unweighted;
    Divisor d = testing::RandomVertexDivisor(rng, g, Uniform(rng, 0, 4), -2, 2);
    const int target = Uniform(rng, -2, 2 * genus);
    d.Add(Point::AtVertex(g->vertices()[0].id),
          static_cast<int>(target - d.degree()));
    random.push_back(d);
  }
  ParallelFor(random.size(), [&](std::size_t i) {
    RiemannRoch rr = RrCheck(random[i]);
    c.Expect(rr.equal, "random RR case " + std::to_string(i));
  });
  c.Note(std::to_string(divisors) + " class representatives + 500 random");
}

void Criterion4(Check& c) {
  long total = 0;
  for (GraphPtr g : HyperellipticCorpus()) {
    auto s = HyperellipticStructure::Analyze(g);
    GraphPtr weightless = VirtualWeightless(*g);
    RankEngine engine(WorkingGraph::Build(weightless));
    const int n = static_cast<int>(g->vertices().size());
    std::vector<std::vector<int>> all;
    for (int deg = 0; deg <= 2 * s->genus(); ++deg) {
      ForEachMultiset(n, deg, [&](const std::vector<int>& k) { all.push_back(k); });
    }
    total += static_cast<long>(all.size());
    ParallelFor(all.size(), [&](std::size_t i) {
      Divisor d = VertexCounts(g, all[i]);
      int hyp = s->HypRank(d);
      int eng = engine.Rank(d.Rebind(weightless));
      c.Expect(hyp == eng, Name(g) + " degree " + std::to_string(d.degree()) +
                               ": hyp " + std::to_string(hyp) + " vs engine " +
                               std::to_string(eng));
    });
  }
  c.Note(std::to_string(total) + " effective divisors");
}

void Criterion5(Check& c) {
  Rng rng(1005);
  for (const auto& f : corpus::Fixtures()) {
    auto wg = WorkingGraph::Build(VirtualWeightless(*f.graph));
    ChipFiring firing(wg);
    LaplacianLattice lattice(wg);
    const auto adj = Adjacency(*wg);
    for (int i = 0; i < 200; ++i) {
      const int q = Uniform(rng, 0, wg->vertex_count() - 1);
      Config d = testing::RandomConfig(rng, *wg, Uniform(rng, 1, 5), -2, 2);
      int excess = Degree(d) - 3;
      for (int v = 0; excess > 0; v = (v + 1) % wg->vertex_count()) {
        if (d[v] > -2) {
          --d[v];
          --excess;
        }
      }
      std::vector<std::int64_t> s(wg->vertex_count());
      for (auto& x : s) x = Uniform(rng, -3, 3);
      Config moved = d;
      Config div = testing::Div(*wg, s);
      for (std::size_t v = 0; v < d.size(); ++v) moved[v] -= div[v];

      ConfigReduction r = firing.Reduce(d, q);
      ConfigReduction rm = firing.Reduce(moved, q);
      c.Expect(r.reduced == rm.reduced, f.name + " uniqueness");
      Config back = d;
      Config wdiv = testing::Div(*wg, r.script);
      for (std::size_t v = 0; v < d.size(); ++v) back[v] -= wdiv[v];
      c.Expect(back == r.reduced, f.name + " witness");
      bool effective_off_q = true;
      for (int v = 0; v < wg->vertex_count(); ++v) {
        if (v != q && r.reduced[v] < 0) effective_off_q = false;
      }
      c.Expect(effective_off_q && BurnsCompletely(adj, r.reduced, q),
               f.name + " reduced");
      c.Expect(firing.Reduce(r.reduced, q).reduced == r.reduced,
               f.name + " idempotence");
      const bool has_effective = OracleRank(lattice, d) >= 0;
      c.Expect(has_effective == (r.reduced[q] >= 0),
               f.name + " effectivity criterion");
    }
  }
  c.Note("200 perturbations on each of " +
         std::to_string(corpus::Fixtures().size()) + " graphs");
}

void Criterion6(Check& c) {
  Rng rng(1006);
  for (const auto& f : corpus::Fixtures()) {
    auto wg = WorkingGraph::Build(VirtualWeightless(*f.graph));
    ChipFiring firing(wg);
    const auto adj = Adjacency(*wg);
    const int n = wg->vertex_count();
    for (int i = 0; i < 100; ++i) {
      const int q = Uniform(rng, 0, n - 1);
      Config raw = testing::RandomConfig(rng, *wg, Uniform(rng, 0, wg->genus() + 3),
                                         0, 2);
      Config d = firing.Reduce(raw, q).reduced;
      d[q] = -Uniform(rng, 1, 3);
      Moderator m = DominatingModerator(firing, d, q);
      c.Equal(Degree(m.k), wg->genus() - 1, f.name + " degree");
      c.Equal(m.k[q], -1, f.name + " value at base");
      bool dominates = true;
      for (int v = 0; v < n; ++v) dominates = dominates && m.k[v] >= d[v];
      c.Expect(dominates, f.name + " dominates");
      bool off_base = true;
      for (int v = 0; v < n; ++v) off_base = off_base && (v == q || m.k[v] >= 0);
      c.Expect(off_base && BurnsCompletely(adj, m.k, q), f.name + " reduced");
      // Topological sort of the induced orientation, recomputed here.
      std::vector<int> rank(n, -1);
      for (int i2 = 0; i2 < static_cast<int>(m.order.order.size()); ++i2) {
        rank[m.order.order[i2]] = i2;
      }
      bool permutation =
          static_cast<int>(m.order.order.size()) == n &&
          std::none_of(rank.begin(), rank.end(), [](int r) { return r < 0; });
      c.Expect(permutation && IsAcyclic(m.order), f.name + " acyclic");
      if (!permutation) continue;
      Config k(n, -1);
      for (int v = 0; v < n; ++v) {
        for (int w : wg->neighbors(v)) k[v] += rank[w] < rank[v];
      }
      c.Expect(k == m.k, f.name + " moderator from orientation");
    }
  }
}

void Criterion7(Check& c) {
  long extended = 0;
  for (const auto& f : corpus::Fixtures()) {
    GraphPtr weightless = VirtualWeightless(*f.graph);
    auto wg = WorkingGraph::Build(weightless);
    if (wg->genus() < 1) continue;
    ChipFiring firing(wg);
    const auto adj = Adjacency(*wg);
    const int nb = static_cast<int>(f.graph->vertices().size());
    for (int q = 0; q < nb; ++q) {
      for (int deg = 0; deg <= wg->genus() - 1; ++deg) {
        ForEachMultiset(nb, deg, [&](const std::vector<int>& counts) {
          if (counts[q] != 0) return;
          Config d(wg->vertex_count(), 0);
          for (int v = 0; v < nb; ++v) d[v] = counts[v];
          if (!BurnsCompletely(adj, d, q)) return;
          for (int at_q : {-1, 0, 1}) {
            if (deg + at_q > wg->genus()) continue;
            d[q] = at_q;
            int w = ExtendReduced(firing, d, q);
            Config more = d;
            ++more[w];
            c.Expect(w != q && BurnsCompletely(adj, more, q),
                     f.name + " extension certified");
            ++extended;
          }
        });
      }
    }
  }
  long completed = 0;
  for (GraphPtr g : HyperellipticCorpus()) {
    auto s = HyperellipticStructure::Analyze(g);
    const int n = static_cast<int>(g->vertices().size());
    for (int deg = 0; deg <= std::min(2, s->genus()); ++deg) {
      ForEachMultiset(n, deg, [&](const std::vector<int>& counts) {
        Divisor seed = VertexCounts(g, counts);
        if (s->PValue(seed) != 0) return;
        Divisor full = s->CompleteToGenus(seed);
        c.Equal(full.degree(), static_cast<std::int64_t>(s->genus()),
                Name(g) + " completed degree");
        c.Equal(s->PValue(full), 0, Name(g) + " completed p");
        c.Equal(Rank(full), 0, Name(g) + " completed rank");
        ++completed;
      });
    }
  }
  c.Note(std::to_string(extended) + " extensions, " + std::to_string(completed) +
         " completions");
}

void Criterion8(Check& c) {
  std::vector<GraphPtr> small;
  for (const auto& f : corpus::Fixtures()) {
    auto wg = WorkingGraph::Build(VirtualWeightless(*f.graph));
    if (wg->vertex_count() <= 8) small.push_back(wg->base());
  }
  // Random multigraphs on up to three vertices that stay within eight
  // working vertices.
  Rng rng(1008);
  for (int i = 0; i < 60; ++i) {
    GraphPtr g = RandomGraph(rng, Uniform(rng, 1, 3), Uniform(rng, 0, 2));
    if (WorkingGraph::Build(g)->vertex_count() <= 8) small.push_back(g);
  }
  long exhaustive = 0;
  for (GraphPtr g : small) {
    auto wg = WorkingGraph::Build(g);
    LaplacianLattice lattice(wg);
    RankEngine engine(wg);
    auto classes = Superstables(Adjacency(*wg), 0);
    std::vector<Config> sweep;
    for (int deg = -1; deg <= 4; ++deg) {
      for (auto k : classes) {
        k[0] += deg - Degree(k);
        sweep.push_back(k);
      }
    }
    exhaustive += static_cast<long>(sweep.size());
    ParallelFor(sweep.size(), [&](std::size_t i) {
      c.Equal(OracleRank(lattice, sweep[i]), engine.Rank(sweep[i]),
              "exhaustive rank, degree " + std::to_string(Degree(sweep[i])));
    });
  }
  std::vector<std::pair<GraphPtr, Config>> larger;
  while (larger.size() < 200) {
    GraphPtr g = RandomGraph(rng, Uniform(rng, 3, 6), Uniform(rng, 0, 2));
    auto wg = WorkingGraph::Build(g);
    if (wg->vertex_count() <= 8 || wg->vertex_count() > 16) continue;
    Config d = testing::RandomConfig(rng, *wg, Uniform(rng, 1, 6), -1, 2);
    if (Degree(d) > 4) continue;
    larger.emplace_back(g, d);
  }
  ParallelFor(larger.size(), [&](std::size_t i) {
    auto wg = WorkingGraph::Build(larger[i].first);
    c.Equal(OracleRank(LaplacianLattice(wg), larger[i].second),
            RankEngine(wg).Rank(larger[i].second), "random larger rank");
  });
  int equivalent = 0;
  for (int i = 0; i < 500; ++i) {
    GraphPtr g = RandomGraph(rng, Uniform(rng, 1, 8), Uniform(rng, 0, 4),
                             Uniform(rng, 0, 1));
    auto wg = WorkingGraph::Build(g);
    LaplacianLattice lattice(wg);
    Config a = testing::RandomConfig(rng, *wg, 5, -2, 3);
    Config b;
    if (i % 2 == 0) {
      std::vector<std::int64_t> s(wg->vertex_count());
      for (auto& x : s) x = Uniform(rng, -3, 3);
      Config div = testing::Div(*wg, s);
      b = a;
      for (std::size_t v = 0; v < a.size(); ++v) b[v] -= div[v];
    } else {
      b = testing::RandomConfig(rng, *wg, 5, -2, 3);
      b[0] += Degree(a) - Degree(b);
    }
    Equivalence e = LinearlyEquivalent(FromConfig(a, *wg), FromConfig(b, *wg));
    Config diff(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) diff[v] = a[v] - b[v];
    c.Equal(e.equivalent, lattice.Contains(diff), "equivalence pair");
    equivalent += e.equivalent;
  }
  c.Note(std::to_string(exhaustive) + " classes on " +
         std::to_string(small.size()) + " small graphs, 200 larger, 500 pairs (" +
         std::to_string(equivalent) + " equivalent)");
}

int PByDirectReduction(const HyperellipticStructure& s, const Divisor& d,
                       std::int64_t refinement) {
  Divisor dl = s.ToLeafless(d);
  auto wg = WorkingGraph::Build(s.leafless(), {refinement});
  Config config = ToConfig(dl, *wg);
  int base = wg->RequireVertex(s.base());
  return ChipFiring(wg).Reduce(config, base).reduced[base] / 2;
}

void Criterion9(Check& c) {
  Rng rng(1009);
  std::vector<GraphPtr> graphs = HyperellipticCorpus();
  for (int i = 0; i < 12; ++i) graphs.push_back(RandomLoopTree(rng));
  long cases = 0;
  for (GraphPtr g : graphs) {
    auto s = HyperellipticStructure::Analyze(g);
    GraphPtr weightless = VirtualWeightless(*g);
    const Rational factor(3, 2);
    GraphPtr scaled = g->Scaled(factor);
    auto s_scaled = HyperellipticStructure::Analyze(scaled);
    std::set<std::string> bridges;
    for (std::size_t e : FindBridges(*g)) bridges.insert(g->edges()[e].id);
    Contraction contracted = ContractEdges(g, bridges);
    auto s_contracted = HyperellipticStructure::Analyze(contracted.graph);

    for (int i = 0; i < 15; ++i) {
      Divisor d = testing::RandomVertexDivisor(rng, g, Uniform(rng, 0, 2 * s->genus()),
                                               1, 1);
      if (Uniform(rng, 0, 1) && !g->edges().empty()) {
        const Edge& e = g->edges()[Uniform(rng, 0, static_cast<int>(g->edges().size()) - 1)];
        d.Add(Point::OnEdge(e.id, e.length / Rational(2)), 1);
      }
      Divisor dw = d.Rebind(weightless);
      const int r = Rank(dw);
      const int p = s->PValue(d);
      const std::string tag = Name(g) + " " + std::to_string(i);

      auto wg = WorkingGraphFor(weightless, {&dw});
      // Passing N as a denominator yields a grid of 2N.
      auto fine = WorkingGraph::Build(weightless, {wg->refinement()});
      c.Equal(RankEngine(fine).Rank(ToConfig(dw, *fine)), r, tag + " rank, 2N");
      c.Equal(PByDirectReduction(*s, d, s->working()->refinement()), p,
              tag + " p, 2N");

      Divisor ds = ScaleDivisor(d, scaled, factor);
      c.Equal(RankWeighted(ds), r, tag + " rank, scaled");
      c.Equal(s_scaled->PValue(ds), p, tag + " p, scaled");

      Divisor dc = PushForward(d, contracted.retraction);
      c.Equal(RankWeighted(dc), r, tag + " rank, bridges contracted");
      c.Equal(s_contracted->PValue(dc), p, tag + " p, bridges contracted");
      ++cases;
    }
  }
  c.Note(std::to_string(cases) + " divisors on " + std::to_string(graphs.size()) +
         " graphs");
}

void Criterion10(Check& c) {
  std::vector<GraphPtr> yes = {corpus::Theta(),      corpus::Banana(2),
                               corpus::Banana(3),    corpus::Banana(4),
                               corpus::Banana(5),    corpus::ThreePetal(),
                               corpus::Ladder4(),    corpus::WeightedVertex(2),
                               corpus::WeightedVertex(3)};
  for (GraphPtr g : yes) {
    const std::string name = Name(g);
    HyperellipticCert cert = IsHyperelliptic(g);
    c.Expect(cert.verdict, name + " verdict");
    c.Expect(cert.pair.has_value(), name + " pair witness");
    c.Expect(cert.consistent, name + " witnesses agree");
    c.Expect(cert.involution && cert.involution->involution.has_value(),
             name + " involution witness");
    if (!cert.pair || !cert.involution || !cert.involution->involution) continue;
    c.Equal(RankWeighted(Vd(g, {{cert.pair->first.c_str(), 1},
                                {cert.pair->second.c_str(), 1}})),
            1, name + " pair rank");
    c.Equal(cert.involution->core_count, std::size_t{1}, name + " core count");
    c.Equal(cert.involution->extended_count, std::size_t{1},
            name + " extended count");
    const Involution& inv = *cert.involution->involution;
    c.Equal(inv.quotient_genus, 0, name + " quotient genus");
    bool involutive = true;
    for (std::size_t v = 0; v < inv.vertex_map.size(); ++v) {
      involutive = involutive && inv.vertex_map[inv.vertex_map[v]] ==
                                     static_cast<int>(v);
    }
    c.Expect(involutive, name + " order two");
  }
  HyperellipticCert k4 = IsHyperelliptic(corpus::K4());
  c.Expect(!k4.verdict && !k4.pair, "K4 is not hyperelliptic");
  InvolutionReport report = FindInvolution(corpus::Ladder4());
  const Involution& ladder = *report.involution;
  std::vector<std::string> fixed;
  for (int v : ladder.fixed_vertices) fixed.push_back(ladder.working->Label(v));
  std::sort(fixed.begin(), fixed.end());
  c.Expect(fixed == std::vector<std::string>{"m0", "m1", "m3", "m4", "w2"},
           "ladder4 fixes exactly its five middle vertices");
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  void (*run)(Check&);
};

}  // namespace
}  // namespace tropdiv

int main() {
  using namespace tropdiv;
  const Criterion criteria[] = {
      {1, "corpus ranks and genera", 5, Criterion1},
      {2, "positive-type bridge condition", 1, Criterion2},
      {3, "Riemann-Roch over all classes of degree -2..2g", 600, Criterion3},
      {4, "hyperelliptic rank formula matches the engine", 600, Criterion4},
      {5, "reduced divisor laws", 600, Criterion5},
      {6, "moderator laws", 600, Criterion6},
      {7, "extension of reduced divisors and completion to degree g", 600,
       Criterion7},
      {8, "engine agrees with the Laplacian lattice oracle", 900, Criterion8},
      {9, "invariance under refinement, scaling and bridge contraction", 600,
       Criterion9},
      {10, "hyperelliptic certificates", 600, Criterion10},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    const bool in_time = seconds <= cr.budget_seconds;
    const bool pass = check.ok() && error.empty() && in_time;
    failed += !pass;
    std::printf("[%s] %d %s (%ld checks, %.2f s%s%s)\n", pass ? "PASS" : "FAIL",
                cr.id, cr.title, check.checks(), seconds,
                check.notes().empty() ? "" : "; ",
                check.notes().c_str());
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
    if (!in_time) {
      std::printf("       over the %.0f s budget\n", cr.budget_seconds);
    }
    for (const auto& f : check.failures()) std::printf("       %s\n", f.c_str());
    if (check.failed() > static_cast<long>(check.failures().size())) {
      std::printf("       ... %ld failures in total\n", check.failed());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
