// Timings for the E7 pipeline stages.

#include <benchmark/benchmark.h>

#include <chevkit/centralizer.hpp>
#include <chevkit/crgit.hpp>
#include <chevkit/e7.hpp>
#include <chevkit/modrep.hpp>

using namespace chevkit;

namespace {

RootPermutation perm(const WeylWord& w) { return word_to_permutation(w, *e7::system()); }

void BM_RootGeneration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem::generate(CartanDatum::e7()));
}
BENCHMARK(BM_RootGeneration);

void BM_GenericConjugation(benchmark::State& state) {
  const auto ctx = e7::context();
  const auto u = generic_unipotent(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_by_word(e7::q1(), u));
}
BENCHMARK(BM_GenericConjugation);

void BM_CentralizerSolve(benchmark::State& state) {
  const auto ctx = e7::context();
  const std::vector<RootPermutation> gens{perm(e7::q1()), perm(e7::q2())};
  for (auto _ : state) benchmark::DoNotOptimize(solve(centralizer_equations(gens, ctx)));
}
BENCHMARK(BM_CentralizerSolve)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const auto ctx = e7::context();
  const auto f = GF2m::with_degree(static_cast<unsigned>(state.range(0)));
  const std::vector<PolyMixed> q{PolyMixed::weyl(ctx, e7::q1()), PolyMixed::weyl(ctx, e7::q2())};
  const auto h = conjugate_tuple(PolyMixed::radical(e7::v(ctx, SparsePoly::parse("a"))), q);
  const auto src = specialize_tuple(h, {{"a", f.elem(1)}}, f);
  const auto tgt = specialize_tuple(q, {}, f);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_conjugacy(src, tgt, e7::m_radical(), f));
}
BENCHMARK(BM_BruteForce)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ModuleDecomposition(benchmark::State& state) {
  const std::vector<RootPermutation> gens{perm(e7::q1()), perm(e7::q2())};
  const auto rep = permutation_module(gens, label_range(1, 7), GF2m::with_degree(3));
  for (auto _ : state) benchmark::DoNotOptimize(is_completely_reducible(rep));
}
BENCHMARK(BM_ModuleDecomposition);

}  // namespace

BENCHMARK_MAIN();
