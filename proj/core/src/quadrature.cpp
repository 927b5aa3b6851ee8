#include "l1lab/numerics/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "l1lab/error.hpp"
#include "l1lab/numerics/special.hpp"

namespace l1lab::num {

void QuadratureSpec::validate() const {
  if (!(half_width >= 6.0)) throw Error(ErrorCode::DomainError, "QuadratureSpec.half_width must be >= 6");
  if (panels < 64) throw Error(ErrorCode::DomainError, "QuadratureSpec.panels must be >= 64");
  if (!(rel_tol > 0.0)) throw Error(ErrorCode::DomainError, "QuadratureSpec.rel_tol must be > 0");
  if (max_panels < panels) throw Error(ErrorCode::DomainError, "QuadratureSpec.max_panels must be >= panels");
}

namespace {

using Rule = boost::math::quadrature::gauss<double, 15>;

std::vector<double> panel_edges(double lo, double hi, int panels, const std::vector<double>& breakpoints) {
  std::vector<double> edges;
  edges.reserve(panels + 1 + breakpoints.size());
  for (int i = 0; i <= panels; ++i) edges.push_back(lo + (hi - lo) * i / panels);
  for (double b : breakpoints)
    if (b > lo && b < hi && std::isfinite(b)) edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [&](double a, double b) { return std::fabs(a - b) <= 1e-14 * (hi - lo); }),
              edges.end());
  return edges;
}

template <class F>
double composite(const F& f, const std::vector<double>& edges, double* l1 = nullptr) {
  double sum = 0.0, abs_sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double panel_l1 = 0.0;
    sum += Rule::integrate(f, edges[i], edges[i + 1], &panel_l1);
    abs_sum += panel_l1;
  }
  if (l1) *l1 = abs_sum;
  return sum;
}

template <class F>
double doubling(const F& f, double lo, double hi, const QuadratureSpec& spec, const std::vector<double>& bps) {
  int n = spec.panels;
  double prev = composite(f, panel_edges(lo, hi, n, bps));
  while (true) {
    if (2 * n > spec.max_panels) {
      throw Error(ErrorCode::NonConvergent, "gauss_expectation: panel cap " + std::to_string(spec.max_panels) +
                                                " reached without meeting rel_tol");
    }
    n *= 2;
    double l1 = 0.0;
    const double next = composite(f, panel_edges(lo, hi, n, bps), &l1);
    // Cancelling integrands (odd moments) can only reach eps * integral of |f|.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * l1;
    if (std::fabs(next - prev) <= std::max(spec.rel_tol * std::fabs(next), floor)) return next;
    prev = next;
  }
}

}  // namespace

double gauss_expectation(const std::function<double(double)>& g, const QuadratureSpec& spec,
                         const std::vector<double>& breakpoints) {
  spec.validate();
  auto f = [&](double h) { return g(h) * normal_pdf(h); };
  return doubling(f, -spec.half_width, spec.half_width, spec, breakpoints);
}

double log_gauss_integral(const std::function<double(double)>& log_g, double lo, double hi,
                          const QuadratureSpec& spec, const std::vector<double>& breakpoints) {
  spec.validate();
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::DomainError, "log_gauss_integral needs a finite interval lo < hi");
  }
  double shift = -std::numeric_limits<double>::infinity();
  auto scan = [&](double h) { shift = std::max(shift, log_g(h) - 0.5 * h * h); };
  for (int i = 0; i <= 4 * spec.panels; ++i) scan(lo + (hi - lo) * i / (4 * spec.panels));
  for (double b : breakpoints)
    if (b > lo && b < hi) scan(b);
  if (!std::isfinite(shift)) throw Error(ErrorCode::NonConvergent, "log_gauss_integral: integrand not finite");
  auto f = [&](double h) { return std::exp(log_g(h) - 0.5 * h * h - shift) / kSqrt2Pi; };
  return shift + std::log(doubling(f, lo, hi, spec, breakpoints));
}

double log_gauss_expectation(const std::function<double(double)>& log_g, const QuadratureSpec& spec,
                             const std::vector<double>& breakpoints, double center) {
  return log_gauss_integral(log_g, center - spec.half_width, center + spec.half_width, spec, breakpoints);
}

}  // namespace l1lab::num
