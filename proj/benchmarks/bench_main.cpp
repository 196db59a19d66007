#include "anyonlab/anyon2d.hpp"
#include "anyonlab/lanczos.hpp"
#include "anyonlab/oscillator_basis.hpp"
#include "anyonlab/tonks_girardeau.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace anyonlab;

void BM_HermiteEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite_eval(n, x));
    x += 1e-9;  // defeat value caching
  }
}
BENCHMARK(BM_HermiteEval)->Arg(8)->Arg(64);

void BM_AssembleRelative(benchmark::State& state) {
  RelativeProblem p;
  p.alpha = 0.7;
  p.epsilon = 0.1;
  p.omega_b = default_omega_b(p.epsilon);
  p.n_max = static_cast<int>(state.range(0));
  p.m_max = p.n_max % 2 == 0 ? p.n_max : p.n_max + 1;
  for (auto _ : state) benchmark::DoNotOptimize(assemble_relative(p));
}
BENCHMARK(BM_AssembleRelative)->Arg(12)->Arg(24);

void BM_LanczosSmallest(benchmark::State& state) {
  RelativeProblem p;
  p.alpha = 0.7;
  p.epsilon = 0.1;
  p.omega_b = default_omega_b(p.epsilon);
  p.n_max = static_cast<int>(state.range(0));
  p.m_max = p.n_max % 2 == 0 ? p.n_max : p.n_max + 1;
  const SparseSymmetric m = assemble_relative(p);
  LanczosOptions opt;
  opt.want_vectors = false;
  for (auto _ : state) benchmark::DoNotOptimize(lanczos_smallest(m, 6, opt));
}
BENCHMARK(BM_LanczosSmallest)->Arg(16)->Arg(32);

void BM_TGDeterminant(benchmark::State& state) {
  const auto levels = tg_levels(3, 4);
  const TGEigenstate& psi = levels.back();
  std::vector<double> xs = {0.3, -0.9, 1.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg_eigenfunction_eval(psi, xs));
    xs[0] += 1e-9;
  }
}
BENCHMARK(BM_TGDeterminant);

}  // namespace

BENCHMARK_MAIN();
