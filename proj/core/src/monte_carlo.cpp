#include "l1lab/empirical/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "l1lab/error.hpp"

namespace l1lab {

RecoveryRate weak_recovery_stats(double alpha, double beta, int n, int trials, bool nonneg, std::uint64_t seed,
                                 int threads, const BasisPursuitOptions& options) {
  const int m = static_cast<int>(std::lround(alpha * n));
  const int k = static_cast<int>(std::lround(beta * n));
  if (!(k >= 1 && k <= m && m < n) || trials < 1) {
    throw Error(ErrorCode::DimensionError, "need 1 <= round(beta n) <= round(alpha n) < n and trials >= 1; got m=" +
                                               std::to_string(m) + " k=" + std::to_string(k));
  }
  struct Outcome {
    bool ok = false;
    bool error = false;
    int iterations = 0;
  };
  std::vector<Outcome> out(trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      try {
        const ProblemInstance inst = generate_instance(n, m, k, nonneg, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const RecoveryReport rep = solve_basis_pursuit(inst, nonneg, options);
        out[t] = {rep.recovered, false, rep.solver_iterations};
      } catch (const Error&) {
        out[t] = {false, true, 0};
      }
    }
  };
  const int pool = std::clamp(threads, 1, trials);
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::thread> ts;
    for (int i = 0; i < pool; ++i) ts.emplace_back(worker);
    for (auto& th : ts) th.join();
  }
  RecoveryRate r;
  r.trials = trials;
  for (const Outcome& o : out) {
    r.successes += o.ok ? 1 : 0;
    r.solver_errors += o.error ? 1 : 0;
    r.solver_iterations += o.iterations;
  }
  r.rate = static_cast<double>(r.successes) / trials;
  return r;
}

double weak_recovery_rate(double alpha, double beta, int n, int trials, bool nonneg, std::uint64_t seed, int threads) {
  return weak_recovery_stats(alpha, beta, n, trials, nonneg, seed, threads).rate;
}

TransitionEstimate empirical_weak_transition(double beta, int n, int trials, bool nonneg, std::uint64_t seed,
                                             double tol, int threads, double alpha_max) {
  TransitionEstimate est;
  const int k = static_cast<int>(std::lround(beta * n));
  double lo = static_cast<double>(k) / n;  // m = k: below any transition
  double hi = alpha_max;
  if (std::lround(hi * n) >= n) hi = static_cast<double>(n - 1) / n;
  auto rate = [&](double a) {
    const double r = weak_recovery_stats(a, beta, n, trials, nonneg, seed, threads).rate;
    est.probe_alphas.push_back(a);
    est.probe_rates.push_back(r);
    return r;
  };
  while (0.5 * (hi - lo) > tol) {
    const double mid = 0.5 * (lo + hi);
    if (rate(mid) >= 0.5) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  est.lo = lo;
  est.hi = hi;
  est.alpha = 0.5 * (lo + hi);
  return est;
}

}  // namespace l1lab
