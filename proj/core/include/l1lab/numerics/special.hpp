#pragma once

namespace l1lab::num {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrtPi = 1.77245385090551602730;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

double erf(double x) noexcept;
double erfc(double x) noexcept;

// exp(x^2) * erfc(x), finite for all x >= -26.
double erfcx(double x) noexcept;

// log(erfc(x)) without underflow for large positive x.
double log_erfc(double x) noexcept;

// log(erfc(lo) - erfc(hi)) for lo < hi; either end may be infinite.
// Returns -inf when lo >= hi.
double log_erfc_diff(double lo, double hi) noexcept;

// Throws Error(DomainError) for |p| >= 1 or NaN.
double erfinv(double p);

double normal_pdf(double x) noexcept;
double normal_cdf(double x) noexcept;

// log(exp(a) + exp(b)), tolerant of -inf arguments.
double log_add(double a, double b) noexcept;

}  // namespace l1lab::num
