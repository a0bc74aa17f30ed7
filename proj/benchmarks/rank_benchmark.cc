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

#include <benchmark/benchmark.h>

#include "tropdiv/chip_firing.h"
#include "tropdiv/corpus.h"
#include "tropdiv/hyperelliptic.h"
#include "tropdiv/oracle.h"
#include "tropdiv/rank.h"

namespace tropdiv {
namespace {

void BM_ReduceLadder(benchmark::State& state) {
  auto wg = WorkingGraph::Build(corpus::Ladder4(), {state.range(0)});
  ChipFiring firing(wg);
  Config c(wg->vertex_count(), 0);
  c[wg->vertex_count() - 1] = 5;
  c[1] = -2;
  for (auto _ : state) benchmark::DoNotOptimize(firing.Reduce(c, 0));
  state.counters["vertices"] = wg->vertex_count();
}
BENCHMARK(BM_ReduceLadder)->Arg(1)->Arg(4)->Arg(16);

void BM_RankBanana(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  GraphPtr g = corpus::Banana(genus);
  Divisor d = VertexDivisor(g, {{"v1", genus}, {"v2", genus - 1}});
  for (auto _ : state) benchmark::DoNotOptimize(Rank(d));
}
BENCHMARK(BM_RankBanana)->DenseRange(2, 6);

void BM_RankLadderCanonical(benchmark::State& state) {
  Divisor k = CanonicalDivisor(corpus::Ladder4(), false);
  for (auto _ : state) benchmark::DoNotOptimize(Rank(k));
}
BENCHMARK(BM_RankLadderCanonical);

void BM_HypRankLadder(benchmark::State& state) {
  auto s = HyperellipticStructure::Analyze(corpus::Ladder4());
  Divisor k = CanonicalDivisor(corpus::Ladder4(), false);
  for (auto _ : state) benchmark::DoNotOptimize(s->HypRank(k));
}
BENCHMARK(BM_HypRankLadder);

void BM_InvolutionSearch(benchmark::State& state) {
  GraphPtr g = corpus::Ladder4();
  for (auto _ : state) benchmark::DoNotOptimize(FindInvolution(g));
}
BENCHMARK(BM_InvolutionSearch);

void BM_OracleRankTheta(benchmark::State& state) {
  Divisor d = VertexDivisor(corpus::Theta(), {{"u", 2}, {"v", 1}});
  for (auto _ : state) benchmark::DoNotOptimize(OracleRank(d));
}
BENCHMARK(BM_OracleRankTheta);

}  // namespace
}  // namespace tropdiv

BENCHMARK_MAIN();
