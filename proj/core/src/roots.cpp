#include "l1lab/numerics/roots.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "l1lab/error.hpp"

namespace l1lab::num {

double find_root(const std::function<double(double)>& f, Bracket bracket, double tol,
                 int max_iterations) {
  if (!(bracket.lo < bracket.hi) || !(tol > 0)) {
    throw Error(ErrorCode::DomainError, "find_root needs lo < hi and tol > 0");
  }
  const double flo = f(bracket.lo);
  const double fhi = f(bracket.hi);
  if (std::isnan(flo) || std::isnan(fhi)) {
    throw Error(ErrorCode::DomainError, "find_root: objective is NaN at a bracket end");
  }
  if (flo == 0.0) return bracket.lo;
  if (fhi == 0.0) return bracket.hi;
  if ((flo > 0) == (fhi > 0)) {
    throw Error(ErrorCode::NoSignChange,
                "f(" + std::to_string(bracket.lo) + ")=" + std::to_string(flo) + ", f(" +
                    std::to_string(bracket.hi) + ")=" + std::to_string(fhi));
  }

  // Remember the best evaluated point so |f| <= tol can end the search early.
  double best_x = std::fabs(flo) < std::fabs(fhi) ? bracket.lo : bracket.hi;
  double best_f = std::min(std::fabs(flo), std::fabs(fhi));
  struct Converged {};
  auto g = [&](double x) {
    const double v = f(x);
    if (std::fabs(v) < best_f) {
      best_f = std::fabs(v);
      best_x = x;
    }
    if (std::fabs(v) <= tol) throw Converged{};
    return v;
  };
  auto narrow = [tol](double a, double b) { return std::fabs(b - a) <= tol; };

  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iterations);
  double x;
  try {
    const auto r = boost::math::tools::toms748_solve(g, bracket.lo, bracket.hi, flo, fhi, narrow, iters);
    if (!narrow(r.first, r.second) && iters >= static_cast<std::uintmax_t>(max_iterations)) {
      throw Error(ErrorCode::MaxIterations, "find_root exceeded " + std::to_string(max_iterations) + " iterations");
    }
    x = 0.5 * (r.first + r.second);
  } catch (const Converged&) {
    x = best_x;
  }
  return std::clamp(x, bracket.lo, bracket.hi);
}

Bracket scan_for_sign_change(const std::function<double(double)>& f, Bracket range, int points) {
  if (points < 2 || !(range.lo < range.hi)) {
    throw Error(ErrorCode::DomainError, "scan_for_sign_change needs >= 2 points and lo < hi");
  }
  double x_prev = range.lo;
  double f_prev = f(x_prev);
  for (int i = 1; i < points; ++i) {
    const double x = range.lo + (range.hi - range.lo) * i / (points - 1);
    const double fx = f(x);
    if (f_prev == 0.0 || fx == 0.0 || (f_prev > 0) != (fx > 0)) return {x_prev, x};
    x_prev = x;
    f_prev = fx;
  }
  throw Error(ErrorCode::NoSignChange, "no sign change on [" + std::to_string(range.lo) + ", " +
                                           std::to_string(range.hi) + "] with " + std::to_string(points) +
                                           " samples");
}

}  // namespace l1lab::num
