#include <benchmark/benchmark.h>

#include "zerospan/fixtures.hpp"

namespace {

using namespace zerospan;

PolyInput campaign_fixture(std::uint32_t m, std::uint64_t rng) {
  fixtures::GenParams p;
  p.kind = fixtures::Kind::Seeded;
  p.n = 1;
  p.m = m;
  p.vars = 6;
  p.terms = 4;
  p.rng = rng;
  return fixtures::generate(p);
}

void BM_full_polarization(benchmark::State& state) {
  PolyInput poly = campaign_fixture(std::uint32_t(state.range(0)), 3);
  std::vector<SparseVector> args;
  for (std::uint32_t j = 0; j < poly.hom->degree(); ++j) {
    std::vector<SparseVector::Entry> e{{j + 1, Scalar::one(poly.field())},
                                       {j + 3, Scalar::integer(poly.field(), 2)}};
    args.push_back(SparseVector(poly.field(), std::move(e)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(full_polarization(*poly.hom, args));
}
BENCHMARK(BM_full_polarization)->Arg(2)->Arg(3)->Arg(4);

void BM_restrict_table(benchmark::State& state) {
  PolyInput poly = campaign_fixture(3, 5);
  std::vector<SparseVector> basis;
  for (std::uint32_t j = 1; j <= std::uint32_t(state.range(0)); ++j)
    basis.push_back(SparseVector::unit(poly.field(), j));
  for (auto _ : state) benchmark::DoNotOptimize(restrict_to_span(*poly.hom, basis));
}
BENCHMARK(BM_restrict_table)->Arg(3)->Arg(6)->Arg(9);

void BM_kernel_stream(benchmark::State& state) {
  const Field f = Field::Rational;
  std::vector<SparseVector> funcs;
  for (std::uint32_t j = 1; j <= 8; ++j) {
    std::vector<SparseVector::Entry> e{{j, Scalar::one(f)},
                                       {j + 5, Scalar::integer(f, -2)}};
    funcs.push_back(SparseVector(f, std::move(e)));
  }
  for (auto _ : state) {
    Subspace K = kernel_within(full_space(f), funcs);
    for (int i = 0; i < int(state.range(0)); ++i) benchmark::DoNotOptimize(K.next());
  }
}
BENCHMARK(BM_kernel_stream)->Arg(16)->Arg(64);

void BM_build_zero_space(benchmark::State& state) {
  PolyInput poly = campaign_fixture(std::uint32_t(state.range(0)), 11);
  SeedSpace seed = fixtures::standard_seed(poly.field(), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_zero_space(poly, seed, 6, RunConfig{}));
}
BENCHMARK(BM_build_zero_space)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_rank(benchmark::State& state) {
  const Field f = Field::GaussianRational;
  std::vector<SparseVector> vecs;
  for (std::uint32_t i = 1; i <= std::uint32_t(state.range(0)); ++i) {
    std::vector<SparseVector::Entry> e{{i, Scalar::integer(f, long(i))},
                                       {i + 2, Scalar::integer(f, -1)},
                                       {2 * i + 5, Scalar::one(f)}};
    vecs.push_back(SparseVector(f, std::move(e)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(vecs));
}
BENCHMARK(BM_rank)->Arg(10)->Arg(30);

} // namespace

BENCHMARK_MAIN();
