#pragma once

#include <functional>

namespace l1lab::num {

struct Bracket {
  double lo;
  double hi;
};

inline constexpr double kDefaultRootTol = 1e-10;

// Bracketed root finder (TOMS 748). The result always lies in [lo, hi].
// Stops when |f(x)| <= tol or the bracket is narrower than tol.
// Throws NoSignChange when f(lo) and f(hi) have the same strict sign,
// DomainError for an invalid bracket, MaxIterations if the budget runs out.
double find_root(const std::function<double(double)>& f, Bracket bracket,
                 double tol = kDefaultRootTol, int max_iterations = 200);

// Scans [lo, hi] on `points` equally spaced abscissae and returns the first
// sub-interval showing a sign change. Throws NoSignChange if none is found.
Bracket scan_for_sign_change(const std::function<double(double)>& f, Bracket range, int points);

}  // namespace l1lab::num
