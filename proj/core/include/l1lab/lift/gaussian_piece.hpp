#pragma once

namespace l1lab {

// log of (1/sqrt(2 pi)) * integral_L^U exp(-(1/2 - p) h^2 + q h + r) dh, for p < 1/2.
// L may be -inf and U may be +inf. Evaluated as
//   C/(2 sqrt 2) * (erfc(sqrt(a) L - d) - erfc(sqrt(a) U - d)),
// a = 1/2 - p, d = q / sqrt(2(1 - 2p)), C = exp(d^2 + r) / sqrt(a), in log space.
double log_gauss_exp_piece(double p, double q, double r, double lo, double hi);

// log P(lo <= h <= hi) for standard normal h.
double log_normal_mass(double lo, double hi);

// Truncated second moment about -shift: integral_lo^hi (h + shift)^2 phi(h) dh.
double shifted_second_moment(double lo, double hi, double shift);

}  // namespace l1lab
