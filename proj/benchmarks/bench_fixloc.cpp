#include "fixloc/fixed_locus.hpp"
#include "fixloc/parabolic.hpp"
#include "fixloc/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace fixloc;

namespace {

ParabolicP1 generic_flags(long g, long c) {
  ParabolicP1 b{c, -(g + 1), {}, {}, {}};
  for (long i = 0; i < 2 * g + 2; ++i) {
    b.points.push_back(Rational(i));
    b.flags.push_back({1, make_rational(7 * i * i - 3, i + 2)});
    b.weights.push_back(make_rational(1, 2));
  }
  return b;
}

void BM_StabilityGeneric(benchmark::State& state) {
  const long g = state.range(0);
  const auto b = generic_flags(g, -((g + 1) / 2));
  for (auto _ : state) benchmark::DoNotOptimize(stability_classify(b, g));
}
BENCHMARK(BM_StabilityGeneric)->DenseRange(1, 4);

void BM_StabilityBracket(benchmark::State& state) {
  const long g = state.range(0);
  std::vector<bool> in_q(2 * g + 2, false);
  in_q[0] = in_q[1] = true;
  std::vector<Rational> pts;
  for (long i = 0; i < 2 * g + 2; ++i) pts.push_back(Rational(i));
  const auto b = bracket_bundle(g, in_q, pts);
  for (auto _ : state) benchmark::DoNotOptimize(stability_classify(b, g));
}
BENCHMARK(BM_StabilityBracket)->DenseRange(1, 4);

void BM_EnumerateLambda(benchmark::State& state) {
  const auto h = hyperelliptic_profile(state.range(0));
  const auto det = hyperelliptic_delta0(h);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lambda(det, h));
}
BENCHMARK(BM_EnumerateLambda)->DenseRange(1, 5);

void BM_BijectionRoundTrip(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  const auto p = random_profile(rng, 12, 4);
  const auto x = random_rank2_data(rng, p);
  for (auto _ : state) benchmark::DoNotOptimize(from_parabolic(to_parabolic(x, p), p));
}
BENCHMARK(BM_BijectionRoundTrip);

void BM_HyperellipticReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hyperelliptic_report(state.range(0)));
}
BENCHMARK(BM_HyperellipticReport)->DenseRange(1, 4);

} // namespace

BENCHMARK_MAIN();
