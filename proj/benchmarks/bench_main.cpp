#include <benchmark/benchmark.h>

#include "shelfchain/corpus.hpp"
#include "shelfchain/doab.hpp"
#include "shelfchain/extend.hpp"
#include "shelfchain/matrix.hpp"
#include "shelfchain/polynomial.hpp"
#include "shelfchain/spectrum.hpp"
#include "shelfchain/verify.hpp"

namespace sc = shelfchain;

namespace {

// Root with two shelves: a 5-element tree poset and a 2-chain plus a point.
sc::ShelfTree sample_tree() {
  sc::TreeSpec spec;
  spec.root = "r";
  spec.children = {{"r", {"s1", "s2"}}, {"s1", {}}, {"s2", {}}};
  spec.leaf_posets.emplace("s1", sc::validate_poset({1, 2, 3, 4, 5}, {{1, 3}, {2, 3}, {4, 5}}));
  spec.leaf_posets.emplace("s2", sc::validate_poset({6, 7, 8}, {{6, 7}}));
  return sc::load_tree(spec);
}

sc::ShelfTree sample_ladder_tree() {
  sc::TreeSpec spec;
  spec.root = "r";
  spec.children = {{"r", {"s1", "s2"}}, {"s1", {}}, {"s2", {}}};
  spec.leaf_posets.emplace("s1", sc::validate_poset({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5}}));
  spec.leaf_posets.emplace("s2", sc::validate_poset({6, 7}, {}));
  return sc::load_tree(spec);
}

void BM_BuildMatrix(benchmark::State& state) {
  const auto t = sample_tree();
  for (auto _ : state) benchmark::DoNotOptimize(sc::build_transition_matrix(t));
  state.counters["states"] = static_cast<double>(sc::state_count(t));
}
BENCHMARK(BM_BuildMatrix);

void BM_CharPoly(benchmark::State& state) {
  const auto t = sample_tree();
  const auto a = sc::substitute(sc::build_transition_matrix(t), sc::standard_weights(t)[2]);
  for (auto _ : state) benchmark::DoNotOptimize(sc::char_poly(a));
  state.counters["states"] = static_cast<double>(a.rows());
}
BENCHMARK(BM_CharPoly)->Unit(benchmark::kMillisecond);

void BM_ForestSpectrum(benchmark::State& state) {
  const auto t = sample_tree();
  for (auto _ : state) benchmark::DoNotOptimize(sc::forest_spectrum(t));
}
BENCHMARK(BM_ForestSpectrum);

void BM_LadderSpectrum(benchmark::State& state) {
  const auto t = sample_ladder_tree();
  for (auto _ : state) benchmark::DoNotOptimize(sc::ladder_spectrum(t));
}
BENCHMARK(BM_LadderSpectrum);

void BM_DoabSpectrum(benchmark::State& state) {
  const auto t = sample_ladder_tree();
  for (auto _ : state) benchmark::DoNotOptimize(sc::doab_spectrum(t));
}
BENCHMARK(BM_DoabSpectrum)->Unit(benchmark::kMillisecond);

void BM_TreeMonoid(benchmark::State& state) {
  const auto t = sample_tree();
  for (auto _ : state) {
    const auto m = sc::tree_monoid(t);
    benchmark::DoNotOptimize(sc::is_r_trivial(m));
    state.counters["elements"] = static_cast<double>(m.size());
  }
}
BENCHMARK(BM_TreeMonoid)->Unit(benchmark::kMillisecond);

void BM_VerifyForestInstance(benchmark::State& state) {
  const auto t = sample_tree();
  const auto s = sc::forest_spectrum(t);
  const auto ws = sc::standard_weights(t);
  for (auto _ : state) benchmark::DoNotOptimize(sc::verify_spectrum(t, s, ws));
}
BENCHMARK(BM_VerifyForestInstance)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
