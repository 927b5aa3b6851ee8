#include "l1lab/numerics/minimize.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "l1lab/error.hpp"

namespace l1lab::num {

Vector Box::project(Vector x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
  return x;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Counter {
  const Objective& f;
  const Box& box;
  int evaluations = 0;
  double stop_below;
  bool stopped = false;

  double operator()(Vector& x) {
    x = box.project(std::move(x));
    ++evaluations;
    const double v = f(x);
    if (v < stop_below) stopped = true;
    return std::isfinite(v) ? v : kInf;
  }
};

struct LocalRun {
  Vector x;
  double value;
  bool converged;
};

LocalRun nelder_mead(Counter& eval, const Vector& x0, double fx0, const Vector& width,
                     const MinimizeOptions& opt) {
  const std::size_t n = x0.size();
  std::vector<Vector> pts(n + 1, x0);
  std::vector<double> vals(n + 1, fx0);
  for (std::size_t i = 0; i < n; ++i) {
    double step = opt.initial_step * width[i];
    if (step == 0.0) continue;
    if (x0[i] + step > eval.box.hi[i]) step = -step;
    pts[i + 1][i] += step;
    vals[i + 1] = eval(pts[i + 1]);
  }
  const int budget = eval.evaluations + opt.max_evaluations;
  std::vector<std::size_t> order(n + 1);
  Vector centroid(n), trial(n), trial2(n);

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    if (eval.stopped) return {pts[best], vals[best], true};
    double spread_x = 0.0;
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        spread_x = std::max(spread_x, std::fabs(pts[j][i] - pts[best][i]));
    const double spread_f = vals[worst] - vals[best];
    if (spread_x <= opt.tol && (spread_f <= opt.tol || !std::isfinite(spread_f))) {
      return {pts[best], vals[best], true};
    }
    if (eval.evaluations >= budget) return {pts[best], vals[best], false};

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t j = 0; j <= n; ++j)
      if (j != worst)
        for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[j][i] / static_cast<double>(n);

    for (std::size_t i = 0; i < n; ++i) trial[i] = centroid[i] + (centroid[i] - pts[worst][i]);
    const double fr = eval(trial);
    if (fr < vals[best]) {
      for (std::size_t i = 0; i < n; ++i) trial2[i] = centroid[i] + 2.0 * (centroid[i] - pts[worst][i]);
      const double fe = eval(trial2);
      if (fe < fr) {
        pts[worst] = trial2;
        vals[worst] = fe;
      } else {
        pts[worst] = trial;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = trial;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    for (std::size_t i = 0; i < n; ++i) {
      trial2[i] = outside ? centroid[i] + 0.5 * (trial[i] - centroid[i])
                          : centroid[i] + 0.5 * (pts[worst][i] - centroid[i]);
    }
    const double fc = eval(trial2);
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = trial2;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == best) continue;
      for (std::size_t i = 0; i < n; ++i) pts[j][i] = pts[best][i] + 0.5 * (pts[j][i] - pts[best][i]);
      vals[j] = eval(pts[j]);
    }
  }
}

// Pattern search along coordinates, shrinking the step down to tol.
void coordinate_poll(Counter& eval, Vector& x, double& fx, const Vector& width, double tol, int budget) {
  const std::size_t n = x.size();
  const int stop_at = eval.evaluations + budget;
  double h = 1e-3;
  while (true) {
    bool improved = false;
    for (std::size_t i = 0; i < n && eval.evaluations < stop_at && !eval.stopped; ++i) {
      const double step = std::max(h * width[i], tol);
      for (double sign : {1.0, -1.0}) {
        Vector y = x;
        y[i] += sign * step;
        const double fy = eval(y);
        if (fy < fx) {
          x = std::move(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (eval.evaluations >= stop_at || eval.stopped) return;
    if (!improved) {
      bool at_floor = true;
      for (std::size_t i = 0; i < n; ++i) at_floor = at_floor && h * width[i] <= tol;
      if (at_floor) return;
      h *= 0.25;
    }
  }
}

}  // namespace

MinimizeResult minimize_local(const Objective& f, const Vector& x0, const Box& bounds,
                              const MinimizeOptions& opt) {
  const std::size_t n = x0.size();
  if (n == 0 || bounds.lo.size() != n || bounds.hi.size() != n) {
    throw Error(ErrorCode::DimensionError, "minimize_local: x0 and bounds must share a nonzero dimension");
  }
  Vector width(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(bounds.lo[i] <= bounds.hi[i])) throw Error(ErrorCode::DomainError, "minimize_local: empty box");
    width[i] = bounds.hi[i] - bounds.lo[i];
    if (!std::isfinite(width[i])) width[i] = std::max(1.0, std::fabs(x0[i]));
  }

  Counter eval{f, bounds, 0, opt.stop_below};
  Vector start = x0;
  const double f0 = eval(start);
  MinimizeResult out{start, f0, 0, true};
  if (eval.stopped) {
    out.evaluations = eval.evaluations;
    return out;
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  bool all_converged = true;
  for (int attempt = 0; attempt <= opt.restarts; ++attempt) {
    Vector s = out.x;
    double fs = out.value;
    if (attempt > 0) {
      for (std::size_t i = 0; i < n; ++i) s[i] += opt.initial_step * width[i] * unit(rng);
      fs = eval(s);
    }
    LocalRun run = nelder_mead(eval, s, fs, width, opt);
    all_converged = all_converged && run.converged;
    if (run.value < out.value) {
      out.x = run.x;
      out.value = run.value;
    }
    if (eval.stopped) break;
  }
  if (!eval.stopped) coordinate_poll(eval, out.x, out.value, width, opt.tol, 50 * static_cast<int>(n) + 200);

  out.evaluations = eval.evaluations;
  out.converged = all_converged;
  if (!all_converged && opt.throw_on_budget && !eval.stopped) {
    throw Error(ErrorCode::MaxIterations,
                "minimize_local: no convergence within " + std::to_string(opt.max_evaluations) + " evaluations");
  }
  return out;
}

ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi, int grid_points,
                              double tol) {
  if (!(lo < hi) || grid_points < 3) throw Error(ErrorCode::DomainError, "minimize_scalar: bad interval or grid");
  auto safe = [&](double x) {
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
  };
  int best = 0;
  double best_v = kInf;
  const double h = (hi - lo) / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    const double v = safe(lo + i * h);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  const double a = lo + std::max(best - 1, 0) * h;
  const double b = lo + std::min(best + 1, grid_points - 1) * h;
  const int bits = std::clamp(static_cast<int>(-std::log2(tol)), 10, 26);
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::brent_find_minima(safe, a, b, bits, iters);
  if (r.second <= best_v) return {r.first, r.second};
  return {lo + best * h, best_v};
}

}  // namespace l1lab::num
