#include <benchmark/benchmark.h>

#include <random>

#include "phasetrop/phasetrop.hpp"

using namespace phasetrop;

namespace {

KPoly plane_line() {
  KPoly f({"x", "y"});
  f.add_term({1, 0}, Series::constant(PolarC::one()));
  f.add_term({0, 1}, Series::constant(PolarC::one()));
  f.add_term({0, 0}, Series::monomial(PolarC::one(), Rat(1)));
  return f;
}

std::vector<PhaseVec> phase_batch(std::size_t rank, std::size_t count) {
  std::mt19937_64 rng(5);
  std::vector<PhaseVec> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_exact_phases(rng, rank, 360));
  return out;
}

void closure_exact(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  const SimpleCoA desc = SimpleCoA::standard(rank);
  const auto batch = phase_batch(rank, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(closure_membership(desc, batch[i++ % batch.size()]));
}
BENCHMARK(closure_exact)->Arg(2)->Arg(3)->Arg(4);

void closure_limit_lps(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  const SimpleCoA desc = SimpleCoA::standard(rank);
  const auto batch = phase_batch(rank, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(closure_via_limit_lps(desc, batch[i++ % batch.size()]));
}
BENCHMARK(closure_limit_lps)->Arg(2)->Arg(3);

void witness_lp(benchmark::State& state) {
  const auto batch = phase_batch(3, 256);
  const PhaseVec coeffs(3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lp_witness(coeffs, batch[i++ % batch.size()]));
}
BENCHMARK(witness_lp);

void tropical_complex(benchmark::State& state) {
  const KPoly f = plane_line();
  for (auto _ : state) benchmark::DoNotOptimize(trop_complex(f));
}
BENCHMARK(tropical_complex);

void model_build(benchmark::State& state) {
  const KPoly f = plane_line();
  for (auto _ : state) benchmark::DoNotOptimize(build_trop_model(f, Section::canonical()));
}
BENCHMARK(model_build);

void nca_lookup(benchmark::State& state) {
  const TropModel m = build_trop_model(plane_line(), Section::canonical());
  const auto batch = phase_batch(2, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(nca_membership(m, batch[i++ % batch.size()]));
}
BENCHMARK(nca_lookup);

void kpoint_sampling(benchmark::State& state) {
  const TropModel m = build_trop_model(plane_line(), Section::canonical());
  KPointOptions opts;
  opts.count = static_cast<std::size_t>(state.range(0));
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample_kpoints(m, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(kpoint_sampling)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
