#include "l1lab/lift/gaussian_piece.hpp"

#include <cmath>
#include <limits>

#include "l1lab/error.hpp"
#include "l1lab/numerics/special.hpp"

namespace l1lab {

double log_gauss_exp_piece(double p, double q, double r, double lo, double hi) {
  if (!(p < 0.5)) throw Error(ErrorCode::ConstraintViolated, "Gaussian piece needs p < 1/2");
  const double a = 0.5 - p;
  const double sa = std::sqrt(a);
  const double d = q / (2.0 * sa);
  const double base = d * d + r - 0.5 * std::log(a) - std::log(2.0 * num::kSqrt2);
  return base + num::log_erfc_diff(sa * lo - d, sa * hi - d);
}

double log_normal_mass(double lo, double hi) {
  return num::log_erfc_diff(lo / num::kSqrt2, hi / num::kSqrt2) - std::log(2.0);
}

double shifted_second_moment(double lo, double hi, double shift) {
  if (!(lo < hi)) return 0.0;
  const double m0 = std::exp(log_normal_mass(lo, hi));
  const double pdf_lo = std::isfinite(lo) ? num::normal_pdf(lo) : 0.0;
  const double pdf_hi = std::isfinite(hi) ? num::normal_pdf(hi) : 0.0;
  const double m1 = pdf_lo - pdf_hi;
  const double xpdf_lo = std::isfinite(lo) ? lo * pdf_lo : 0.0;
  const double xpdf_hi = std::isfinite(hi) ? hi * pdf_hi : 0.0;
  const double m2 = m0 + xpdf_lo - xpdf_hi;
  return m2 + 2.0 * shift * m1 + shift * shift * m0;
}

}  // namespace l1lab
