#include <benchmark/benchmark.h>

BENCHMARK_MAIN();

#include <random>

#include "grc/code.hpp"
#include "grc/search.hpp"

using namespace grc;

namespace {

const RingSpec f2{0};

GroupRingElement random_element(std::mt19937_64& rng, RingSpec ring, const GroupPtr& g) {
  auto v = GroupRingElement::zero(ring, g);
  for (auto& c : v.coeffs)
    c = RingValue(ring, static_cast<std::uint16_t>(rng() % ring.cardinality()));
  return v;
}

void BM_SigmaConstruction(benchmark::State& state) {
  const auto g = make_named("g24_8");
  std::mt19937_64 rng(1);
  const auto v = random_element(rng, f2, g);
  for (auto _ : state) benchmark::DoNotOptimize(sigma(v));
}
BENCHMARK(BM_SigmaConstruction);

void BM_CodeFromSigma(benchmark::State& state) {
  const auto g = make_named("g24_8");
  std::mt19937_64 rng(2);
  const auto m = sigma(random_element(rng, f2, g));
  for (auto _ : state) benchmark::DoNotOptimize(code_from_sigma(m));
}
BENCHMARK(BM_CodeFromSigma);

void BM_MinDistanceRank12(benchmark::State& state) {
  const auto c = code_from_sigma(sigma(parse_element(
      "1 + b*(a+a^2+a^3 + (e+a)*(z+z^2))", f2,
      reorder_cyclic_dihedral(make_direct_product(make_cyclic(3, "z"), make_dihedral(8)), 3, 8))));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(c, Metric::hamming));
}
BENCHMARK(BM_MinDistanceRank12);

void BM_Dual24(benchmark::State& state) {
  const auto g = make_named("sl23");
  std::mt19937_64 rng(3);
  const auto c = code_from_sigma(sigma(random_element(rng, f2, g)));
  for (auto _ : state) benchmark::DoNotOptimize(dual(c));
}
BENCHMARK(BM_Dual24);

void BM_CensusC3D8(benchmark::State& state) {
  const auto spec = builtin_search("census_c3d8");
  for (auto _ : state) benchmark::DoNotOptimize(run_search(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CensusC3D8)->Arg(1)->Arg(2);

void BM_GolaySL23(benchmark::State& state) {
  const auto spec = builtin_search("golay_sl23");
  for (auto _ : state) benchmark::DoNotOptimize(run_search(spec, 1));
}
BENCHMARK(BM_GolaySL23);

}  // namespace
