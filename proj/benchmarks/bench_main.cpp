#include <benchmark/benchmark.h>

#include "cotrans/calculus.hpp"
#include "cotrans/grz/cut.hpp"
#include "cotrans/oracle.hpp"

using namespace cotrans;
using namespace cotrans::grz;

namespace {

const Sequent kGrzAxiom = parse_sequent("|- box(box(p0 -> box p0) -> p0) -> p0");

Graph grz_axiom_proof() { return *search(kGrzAxiom, {8, 4, std::nullopt}); }

void BM_Search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search(kGrzAxiom, {8, 4, std::nullopt}));
}
BENCHMARK(BM_Search);

void BM_Unfold(benchmark::State& state) {
  Graph g = grz_axiom_proof();
  auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unfold(g.graph(), g.root, UnfoldBudget{depth, 10000000}));
}
BENCHMARK(BM_Unfold)->DenseRange(2, 8, 2);

void BM_CheckGraph(benchmark::State& state) {
  auto corpus = generate_corpus(11, 20);
  for (auto _ : state)
    for (const auto& g : corpus) benchmark::DoNotOptimize(check_proof_graph(grz_cut_calculus(), g));
}
BENCHMARK(BM_CheckGraph);

void BM_CutElim(benchmark::State& state) {
  auto corpus = generate_corpus(12, 20);
  ExtendOptions opt;
  opt.max_states = 200;
  for (auto _ : state)
    for (const auto& g : corpus) benchmark::DoNotOptimize(cut_elim(g, opt));
}
BENCHMARK(BM_CutElim)->Unit(benchmark::kMillisecond);

void BM_CanonicalKey(benchmark::State& state) {
  Graph g = grz_axiom_proof();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g.graph(), g.root));
}
BENCHMARK(BM_CanonicalKey);

}  // namespace
BENCHMARK_MAIN();
