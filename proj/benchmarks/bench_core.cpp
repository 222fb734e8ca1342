#include <random>

#include <benchmark/benchmark.h>

#include "iwafitt/euler.hpp"
#include "iwafitt/fitting.hpp"
#include "iwafitt/lambda_ideal.hpp"
#include "iwafitt/smith.hpp"
#include "iwafitt/weierstrass.hpp"

namespace {

using namespace iwafitt;

fitting::PresentationMatrix random_dvr_matrix(int n, std::uint64_t seed) {
  fitting::RingDescriptor ring{fitting::RingKind::Dvr, 3, 12, 1};
  const ring::ModRing R = ring.coefficients();
  std::mt19937_64 gen(seed);
  std::vector<ring::i64> e(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (auto& x : e) x = R.mul(R.p_power(static_cast<int>(ring::bounded_draw(gen(), 0, 3))),
                             ring::bounded_draw(gen(), 0, R.modulus() - 1));
  return fitting::PresentationMatrix::scalar(ring, n, n, std::move(e));
}

void BM_FittingMinors(benchmark::State& state) {
  const auto M = random_dvr_matrix(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(fitting::fitting_exponents(M));
}
BENCHMARK(BM_FittingMinors)->DenseRange(2, 8, 2);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto M = random_dvr_matrix(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(fitting::smith_normal_form(M));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 8, 2);

void BM_WeierstrassPrepare(benchmark::State& state) {
  const ring::ModRing R(3, 20);
  const int m = static_cast<int>(state.range(0));
  std::vector<ring::i64> c(static_cast<size_t>(m));
  std::mt19937_64 gen(5);
  for (auto& x : c) x = ring::bounded_draw(gen(), 0, R.modulus() - 1);
  c[0] = 3;
  c[1] = 6;
  c[2] = 1;
  const ring::TruncatedSeries f(R, m, c);
  for (auto _ : state) benchmark::DoNotOptimize(ring::weierstrass_prepare(f));
}
BENCHMARK(BM_WeierstrassPrepare)->Arg(8)->Arg(16)->Arg(32);

void BM_Simulator(benchmark::State& state) {
  const auto shape = euler::SelmerShape::make(1, {2, 1});
  const int size = static_cast<int>(state.range(0));
  const auto pool = euler::make_pool(size, 0, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(euler::simulate_system(shape, 6, pool, 9));
}
BENCHMARK(BM_Simulator)->Arg(8)->Arg(12)->Arg(16);

void BM_VerifyArtSel(benchmark::State& state) {
  const auto shape = euler::SelmerShape::make(0, {2, 1});
  const auto sim = euler::simulate_system(shape, 6, euler::make_pool(12, 0, 6, 3), 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler::verify_artsel(sim.data, shape));
    benchmark::DoNotOptimize(euler::reciprocity_check(sim.data));
  }
}
BENCHMARK(BM_VerifyArtSel);

void BM_FactorOverBasis(benchmark::State& state) {
  const ring::ModRing R(3, 16);
  const std::vector<lambda::HeightOnePrime> basis{lambda::HeightOnePrime::pi(), lambda::HeightOnePrime::linear(0),
                                                  lambda::HeightOnePrime::linear(3),
                                                  lambda::HeightOnePrime::distinguished({3, 0, 1})};
  const lambda::PseudoClass c({{basis[0], 2}, {basis[1], 1}, {basis[2], 2}, {basis[3], 1}});
  const auto f = lambda::series_of(c, R, 12) * ring::TruncatedSeries::from_poly(R, 12, {2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(lambda::factor_over_basis(f, basis));
}
BENCHMARK(BM_FactorOverBasis);

}  // namespace

BENCHMARK_MAIN();
