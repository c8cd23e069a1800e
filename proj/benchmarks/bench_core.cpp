#include <benchmark/benchmark.h>

#include "eigenkit/cech/cech.hpp"
#include "eigenkit/laind/bgg.hpp"
#include "eigenkit/laind/compact.hpp"
#include "eigenkit/spectral/projector.hpp"
#include "eigenkit/weight/universal.hpp"

using namespace eigenkit;

namespace {

const padic::PadicContext kCtx(5, 1, 20);

void BM_ScalarMultiply(benchmark::State& state) {
  auto a = padic::PadicScalar::from_int(kCtx, 123456789), b = padic::PadicScalar::from_int(kCtx, 987654321);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMultiply);

void BM_ScalarInverse(benchmark::State& state) {
  auto a = padic::PadicScalar::from_int(kCtx, 123456789);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_ScalarInverse);

void BM_ThetaKernel(benchmark::State& state) {
  auto kappa = weight::Character::algebraic_weight(kCtx, {3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(laind::joint_theta_kernel(kappa, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ThetaKernel)->Arg(6)->Arg(12)->Arg(24);

void BM_FredholmSeries(benchmark::State& state) {
  auto U = laind::compact_u_matrix(kCtx, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral::fredholm_series(U, U.size()));
}
BENCHMARK(BM_FredholmSeries)->Args({2, 12})->Args({2, 40})->Args({3, 6});

void BM_SlopeFactor(benchmark::State& state) {
  auto U = laind::compact_u_matrix(kCtx, 2, 12);
  auto P = spectral::fredholm_series(U, U.size());
  for (auto _ : state) benchmark::DoNotOptimize(spectral::slope_factor(P, padic::Rational(5, 2)));
}
BENCHMARK(BM_SlopeFactor);

void BM_RieszProjector(benchmark::State& state) {
  const padic::PadicContext W(5, 1, 36);
  auto U = laind::compact_u_matrix(W, 2, static_cast<int>(state.range(0)));
  auto f = spectral::slope_factor(spectral::fredholm_series(U, U.size()), padic::Rational(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(spectral::riesz_projector(U, f));
}
BENCHMARK(BM_RieszProjector)->Arg(8)->Arg(16);

void BM_UniversalCharacter(benchmark::State& state) {
  auto ctx = padic::PadicContext::with_default_ramification(5, 80);
  for (auto _ : state)
    benchmark::DoNotOptimize(weight::universal_character_eval(ctx, {padic::Rational(1), 2, static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_UniversalCharacter)->Arg(8)->Arg(13);

void BM_CechCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  cech::AffinoidModel A(kCtx, 16);
  auto M = spectral::BanachModuleModel::orthonormalizable(kCtx, spectral::BaseRing::tate({"x"}, 16), n);
  for (auto _ : state) benchmark::DoNotOptimize(cech::cech_check(M, A));
}
BENCHMARK(BM_CechCheck)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
