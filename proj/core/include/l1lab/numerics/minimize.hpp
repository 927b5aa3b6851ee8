#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace l1lab::num {

using Vector = std::vector<double>;
using Objective = std::function<double(const Vector&)>;

struct Box {
  Vector lo;
  Vector hi;

  std::size_t size() const { return lo.size(); }
  Vector project(Vector x) const;
};

struct MinimizeOptions {
  double tol = 1e-8;
  // Objective-evaluation budget per local run.
  int max_evaluations = 20000;
  // Extra jittered restarts from the incumbent.
  int restarts = 3;
  // Relative size of the initial simplex with respect to the box width.
  double initial_step = 0.1;
  std::uint64_t seed = 0x5eed;
  // When false a budget overrun returns the incumbent instead of throwing.
  bool throw_on_budget = true;
  // Stop as soon as an objective value below this is seen.
  double stop_below = -std::numeric_limits<double>::infinity();
};

struct MinimizeResult {
  Vector x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Bounded Nelder-Mead with projection onto the box, jittered restarts and a
// final coordinate poll. Non-finite objective values are treated as +inf.
// The returned value never exceeds f(project(x0)).
MinimizeResult minimize_local(const Objective& f, const Vector& x0, const Box& bounds,
                              const MinimizeOptions& options = {});

// One-dimensional bounded minimization: grid scan followed by Brent refinement.
struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};
ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              int grid_points = 64, double tol = 1e-10);

}  // namespace l1lab::num
