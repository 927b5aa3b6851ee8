#include "l1lab/lift/threshold.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "l1lab/error.hpp"
#include "l1lab/general/sectional.hpp"
#include "l1lab/general/strong.hpp"
#include "l1lab/general/weak.hpp"
#include "l1lab/lift/sphere.hpp"
#include "l1lab/nonneg/strong.hpp"
#include "l1lab/nonneg/weak.hpp"
#include "l1lab/numerics/minimize.hpp"
#include "l1lab/numerics/special.hpp"

namespace l1lab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinSlack = 1e-8;  // lower bound on gamma - c3/2
constexpr double kMaxSlack = 1e3;
constexpr double kNuMax = 10.0;
// nu2 is on the scale of nu1^2 / (4 gamma), which is large for small beta.
constexpr double kNu2Max = 1e4;

void require_lifted_kind(ThresholdKind kind) {
  if (is_weak(kind)) throw Error(ErrorCode::DomainError, "weak kinds have no lifted/direct set term");
}

double set_term(ThresholdKind kind, double beta, const LiftParams& p) {
  switch (kind) {
    case ThresholdKind::sectional: return sectional_set_term_lifted(beta, p);
    case ThresholdKind::strong: return strong_set_term_lifted(beta, p);
    case ThresholdKind::strong_nonneg: return strong_nonneg_set_term_lifted(beta, p);
    default: break;
  }
  throw Error(ErrorCode::DomainError, "no lifted set term for kind " + std::string(to_string(kind)));
}

// Search coordinates: (log c3, log(gamma - c3/2), nu1[, nu2]).
class Coordinates {
 public:
  Coordinates(ThresholdKind kind, const ThresholdOptions& o)
      : dims_(kind == ThresholdKind::sectional ? 3 : 4) {
    box_.lo = {std::log(o.c3_min), std::log(kMinSlack), 0.0};
    box_.hi = {std::log(o.c3_max), std::log(kMaxSlack), kNuMax};
    if (dims_ == 4) {
      box_.lo.push_back(0.0);
      box_.hi.push_back(kNu2Max);
    }
  }

  const num::Box& box() const { return box_; }
  std::size_t dims() const { return dims_; }

  LiftParams params(const num::Vector& u) const {
    LiftParams p;
    p.c3 = std::exp(u[0]);
    p.gamma = 0.5 * p.c3 + std::exp(u[1]);
    p.nu1 = u[2];
    p.nu2 = dims_ == 4 ? u[3] : 0.0;
    return p;
  }

  num::Vector coords(const LiftParams& p) const {
    num::Vector u{std::log(p.c3), std::log(std::max(p.gamma - 0.5 * p.c3, kMinSlack)), p.nu1};
    if (dims_ == 4) u.push_back(p.nu2);
    return box_.project(u);
  }

 private:
  std::size_t dims_;
  num::Box box_;
};

double direct_scale(ThresholdKind kind, double beta) {
  switch (kind) {
    case ThresholdKind::sectional: return sectional_direct_minimum(beta).value;
    case ThresholdKind::strong: return strong_direct_minimum(beta).value;
    case ThresholdKind::strong_nonneg: return std::sqrt(strong_nonneg_direct_minimum(beta).value);
    default: return 1.0;
  }
}

}  // namespace

BoundEvaluation lifted_evaluation(ThresholdKind kind, double alpha, double beta, const LiftParams& params) {
  require_lifted_kind(kind);
  return master_condition(set_term(kind, beta, params), params.c3, alpha);
}

FeasibilityCheck lifted_feasibility(ThresholdKind kind, double alpha, double beta, const ThresholdOptions& o,
                                    const std::vector<LiftParams>& warm_starts) {
  require_lifted_kind(kind);
  const Coordinates cs(kind, o);
  const double target = -o.feasibility_margin;
  auto objective = [&](const num::Vector& u) {
    try {
      return lifted_evaluation(kind, alpha, beta, cs.params(u)).total;
    } catch (const Error&) {
      return kInf;
    }
  };

  num::MinimizeOptions mo;
  mo.tol = 1e-9;
  mo.max_evaluations = o.local_evaluations;
  mo.restarts = 0;
  mo.throw_on_budget = false;
  mo.stop_below = target;

  FeasibilityCheck best{false, kInf, {}};
  auto consider = [&](const num::MinimizeResult& r) {
    if (r.value < best.margin) {
      best.margin = r.value;
      best.params = cs.params(r.x);
    }
    best.feasible = best.margin < target;
    return best.feasible;
  };

  for (const LiftParams& w : warm_starts) {
    if (!(w.c3 > 0.0)) continue;
    if (consider(num::minimize_local(objective, cs.coords(w), cs.box(), mo))) return best;
  }

  // The direct optimum, mapped to lifted parameters, seeds the small-c3 end.
  try {
    LiftParams d = direct_feasibility(kind, alpha, beta, o).params;
    d.c3 = o.c3_min;
    d.gamma += 0.5 * d.c3;
    if (consider(num::minimize_local(objective, cs.coords(d), cs.box(), mo))) return best;
  } catch (const Error&) {
  }

  // Gamma seed: at c3 -> 0 the optimal gamma is half the direct set term.
  const double slack_seed = std::max(0.5 * direct_scale(kind, beta), 1e-3);
  for (int i = 0; i < o.c3_starts; ++i) {
    const double t = o.c3_starts == 1 ? 0.5 : static_cast<double>(i) / (o.c3_starts - 1);
    const double c3 = std::exp(std::log(o.c3_min) + t * (std::log(o.c3_max) - std::log(o.c3_min)));
    for (double nu : o.nu_seeds) {
      for (double nu2 : {0.1 * nu, nu * nu / (4.0 * slack_seed)}) {
        LiftParams seed{c3, 0.5 * c3 + slack_seed, nu, nu2};
        if (consider(num::minimize_local(objective, cs.coords(seed), cs.box(), mo))) return best;
        if (cs.dims() == 3) break;
      }
    }
  }

  if (o.nested_route && std::isfinite(best.margin)) {
    // Inner search over (gamma, nu) at fixed c3, outer Brent search over log c3.
    num::Vector inner_seed = cs.coords(best.params);
    inner_seed.erase(inner_seed.begin());
    num::Box inner_box{{cs.box().lo.begin() + 1, cs.box().lo.end()}, {cs.box().hi.begin() + 1, cs.box().hi.end()}};
    num::MinimizeOptions io = mo;
    io.max_evaluations = std::max(500, o.local_evaluations / 4);
    auto inner = [&](double log_c3) {
      auto f = [&](const num::Vector& v) {
        num::Vector u{log_c3};
        u.insert(u.end(), v.begin(), v.end());
        return objective(u);
      };
      const auto r = num::minimize_local(f, inner_seed, inner_box, io);
      num::Vector u{log_c3};
      u.insert(u.end(), r.x.begin(), r.x.end());
      if (r.value < best.margin) {
        best.margin = r.value;
        best.params = cs.params(u);
        inner_seed = r.x;
      }
      best.feasible = best.margin < target;
      return r.value;
    };
    const double lo = cs.box().lo[0], hi = cs.box().hi[0];
    int best_i = 0;
    double best_v = kInf;
    for (int i = 0; i < o.c3_starts && !best.feasible; ++i) {
      const double x = lo + (hi - lo) * i / std::max(o.c3_starts - 1, 1);
      const double v = inner(x);
      if (v < best_v) {
        best_v = v;
        best_i = i;
      }
    }
    if (!best.feasible) {
      const double step = (hi - lo) / std::max(o.c3_starts - 1, 1);
      const double a = std::max(lo, lo + (best_i - 1) * step);
      const double b = std::min(hi, lo + (best_i + 1) * step);
      std::uintmax_t iters = 40;
      struct Done {};
      try {
        boost::math::tools::brent_find_minima(
            [&](double x) {
              const double v = inner(x);
              if (best.feasible) throw Done{};
              return v;
            },
            a, b, 20, iters);
      } catch (const Done&) {
      }
    }
  }
  return best;
}

FeasibilityCheck direct_feasibility(ThresholdKind kind, double alpha, double beta, const ThresholdOptions& o) {
  FeasibilityCheck out;
  DirectMinimum m;
  switch (kind) {
    case ThresholdKind::sectional:
      m = sectional_direct_minimum(beta);
      out.margin = m.value - std::sqrt(alpha);
      out.params = {0.0, 0.5 * m.value, m.nu, 0.0};
      break;
    case ThresholdKind::strong: {
      m = strong_direct_minimum(beta);
      out.margin = m.value - std::sqrt(alpha);
      const double gamma = 0.5 * m.value;
      const double c = std::sqrt(2.0) * num::erfinv(1.0 - beta);
      out.params = {0.0, gamma, m.nu, c * m.nu / (2.0 * gamma)};
      break;
    }
    case ThresholdKind::strong_nonneg: {
      m = strong_nonneg_direct_minimum(beta);
      out.margin = m.value - alpha;
      const double gamma = 0.5 * std::sqrt(m.value);
      const double c = -std::sqrt(2.0) * num::erfinv(1.0 - 2.0 * beta);
      out.params = {0.0, gamma, m.nu, (c - m.nu) * (c - m.nu) / (8.0 * gamma)};
      break;
    }
    default: throw Error(ErrorCode::DomainError, "direct condition undefined for weak kinds");
  }
  out.feasible = out.margin < -o.feasibility_margin;
  return out;
}

namespace {

ThresholdResult weak_threshold(double alpha, ThresholdKind kind, BoundMethod method) {
  ThresholdResult r;
  r.alpha = alpha;
  r.kind = kind;
  r.method = method;
  const bool nonneg = kind == ThresholdKind::weak_nonneg;
  r.beta = nonneg ? weak_nonneg_beta_of_alpha(alpha) : weak_beta_of_alpha(alpha);
  r.condition_margin = (nonneg ? weak_nonneg_alpha_of_beta(r.beta) : weak_alpha_of_beta(r.beta)) - alpha;
  r.feasibility_checks = 0;
  return r;
}

class Bisection {
 public:
  Bisection(double alpha, ThresholdKind kind, BoundMethod method, const ThresholdOptions& o)
      : alpha_(alpha), kind_(kind), method_(method), o_(o) {}

  FeasibilityCheck check(double beta) {
    ++checks_;
    if (method_ == BoundMethod::direct) return direct_feasibility(kind_, alpha_, beta, o_);
    std::vector<LiftParams> warm;
    if (have_feasible_) warm.push_back(feasible_params_);
    if (have_infeasible_) warm.push_back(infeasible_params_);
    FeasibilityCheck c = lifted_feasibility(kind_, alpha_, beta, o_, warm);
    if (c.feasible) {
      feasible_params_ = c.params;
      have_feasible_ = true;
    } else if (std::isfinite(c.margin)) {
      infeasible_params_ = c.params;
      have_infeasible_ = true;
    }
    return c;
  }

  // Bisects [lo, hi] where lo is feasible (with check `at_lo`) and hi is not.
  FeasibilityCheck run(double lo, double hi, FeasibilityCheck at_lo) {
    while (hi - lo > o_.tol_beta) {
      const double mid = 0.5 * (lo + hi);
      FeasibilityCheck c = check(mid);
      if (c.feasible) {
        lo = mid;
        at_lo = c;
      } else {
        hi = mid;
      }
    }
    lo_ = lo;
    hi_ = hi;
    return at_lo;
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int checks() const { return checks_; }

 private:
  double alpha_;
  ThresholdKind kind_;
  BoundMethod method_;
  const ThresholdOptions& o_;
  int checks_ = 0;
  double lo_ = 0.0, hi_ = 0.0;
  bool have_feasible_ = false, have_infeasible_ = false;
  LiftParams feasible_params_, infeasible_params_;
};

}  // namespace

ThresholdResult threshold_bisect(double alpha, ThresholdKind kind, BoundMethod method, const ThresholdOptions& o) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::DomainError, "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!(o.tol_beta >= 1e-5)) throw Error(ErrorCode::DomainError, "tol_beta must be >= 1e-5");
  if (is_weak(kind)) return weak_threshold(alpha, kind, method);

  ThresholdResult r;
  r.alpha = alpha;
  r.kind = kind;
  r.method = method;
  const double cap = is_strong(kind) ? std::min(o.strong_beta_max, o.beta_max) : o.beta_max;

  Bisection bis(alpha, kind, method, o);
  FeasibilityCheck at_lo = bis.check(o.beta_min);
  if (!at_lo.feasible) {
    throw Error(ErrorCode::NoFeasibleBeta, "condition fails already at beta = " + std::to_string(o.beta_min) +
                                               " for alpha = " + std::to_string(alpha));
  }
  FeasibilityCheck at_cap = bis.check(cap);
  if (at_cap.feasible) {
    r.beta = cap;
    r.params_at_optimum = at_cap.params;
    r.condition_margin = at_cap.margin;
    r.feasibility_checks = bis.checks();
    r.warnings.push_back("condition holds at the beta cap " + std::to_string(cap));
    return r;
  }
  at_lo = bis.run(o.beta_min, cap, at_lo);

  // Feasibility is expected to be monotone in beta; probe below the result.
  for (int i = 1; i <= o.monotonicity_probes; ++i) {
    const double probe = o.beta_min + (bis.lo() - o.beta_min) * i / (o.monotonicity_probes + 1);
    if (probe >= bis.lo()) break;
    FeasibilityCheck c = bis.check(probe);
    if (!c.feasible) {
      r.monotone = false;
      r.warnings.push_back(std::string(to_string(ErrorCode::NonMonotone)) + ": infeasible at beta = " +
                           std::to_string(probe) + " below feasible beta = " + std::to_string(bis.lo()));
      const double prev = i == 1 ? o.beta_min : o.beta_min + (bis.lo() - o.beta_min) * (i - 1) /
                                                                (o.monotonicity_probes + 1);
      at_lo = bis.run(prev, probe, bis.check(prev));
      break;
    }
  }

  r.beta = bis.lo();
  r.params_at_optimum = at_lo.params;
  r.condition_margin = at_lo.margin;
  r.feasibility_checks = bis.checks();
  return r;
}

}  // namespace l1lab
