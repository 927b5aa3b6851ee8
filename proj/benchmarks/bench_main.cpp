#include <benchmark/benchmark.h>

#include "l1lab/empirical/basis_pursuit.hpp"
#include "l1lab/empirical/instance.hpp"
#include "l1lab/empirical/nullspace.hpp"
#include "l1lab/general/sectional.hpp"
#include "l1lab/general/strong.hpp"
#include "l1lab/general/weak.hpp"
#include "l1lab/lift/threshold.hpp"
#include "l1lab/nonneg/strong.hpp"

using namespace l1lab;

static void BM_SectionalSetTermLifted(benchmark::State& state) {
  const LiftParams p{0.8, 1.1, 0.9, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(sectional_set_term_lifted(0.1, p));
}
BENCHMARK(BM_SectionalSetTermLifted);

static void BM_StrongLogMoment(benchmark::State& state) {
  const LiftParams p{0.8, 1.1, 0.9, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(strong_log_moment(p));
}
BENCHMARK(BM_StrongLogMoment);

static void BM_NonnegLogMoment(benchmark::State& state) {
  const NonnegStrongParams s = make_nonneg_params({0.8, 1.1, 0.9, 0.3});
  for (auto _ : state) benchmark::DoNotOptimize(strong_nonneg_log_moment(s));
}
BENCHMARK(BM_NonnegLogMoment);

static void BM_WeakAlphaOfBeta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weak_alpha_of_beta(0.2));
}
BENCHMARK(BM_WeakAlphaOfBeta);

static void BM_ThresholdBisect(benchmark::State& state) {
  const auto kind = static_cast<ThresholdKind>(state.range(0));
  const auto method = static_cast<BoundMethod>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(threshold_bisect(0.5, kind, method).beta);
}
BENCHMARK(BM_ThresholdBisect)
    ->ArgsProduct({{static_cast<int>(ThresholdKind::sectional), static_cast<int>(ThresholdKind::strong),
                    static_cast<int>(ThresholdKind::strong_nonneg)},
                   {static_cast<int>(BoundMethod::direct), static_cast<int>(BoundMethod::lifted)}})
    ->Unit(benchmark::kMillisecond);

static void BM_BasisPursuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemInstance inst = generate_instance(n, n / 2, n / 10, false, 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_basis_pursuit(inst, false).rel_error);
}
BENCHMARK(BM_BasisPursuit)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_StrongNullspace(benchmark::State& state) {
  const Eigen::MatrixXd A = gaussian_matrix(12, 16, 3);
  for (auto _ : state) benchmark::DoNotOptimize(strong_nullspace_holds(A, 2, false));
}
BENCHMARK(BM_StrongNullspace)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
