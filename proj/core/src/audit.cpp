#include "l1lab/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "l1lab/error.hpp"
#include "l1lab/general/sectional.hpp"
#include "l1lab/general/strong.hpp"
#include "l1lab/lift/oracle.hpp"
#include "l1lab/nonneg/strong.hpp"
#include "l1lab/numerics/quadrature.hpp"
#include "l1lab/numerics/special.hpp"

namespace l1lab {

double AuditReport::max_unwarned_deviation() const {
  double m = 0.0;
  for (const auto& e : entries)
    if (!e.warned) m = std::max(m, e.max_rel_dev);
  return m;
}

bool AuditReport::passed() const { return max_unwarned_deviation() <= tolerance; }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Collector {
 public:
  void add(const std::string& label, double dev) {
    auto& e = entry(label);
    ++e.samples;
    e.max_rel_dev = std::max(e.max_rel_dev, std::isfinite(dev) ? dev : kInf);
  }
  void warn(const std::string& label, const std::string& note) {
    auto& e = entry(label);
    e.warned = true;
    e.note = note;
  }
  std::vector<ParityEntry> take() { return std::move(entries_); }

 private:
  ParityEntry& entry(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return entries_[it->second];
    index_[label] = entries_.size();
    entries_.push_back({label, 0, 0.0, false, {}});
    return entries_.back();
  }
  std::vector<ParityEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

// Relative deviation of a linear-space value from exp(log_ref).
double rel_linear(double value, double log_ref) { return std::fabs(value * std::exp(-log_ref) - 1.0); }
double rel_log(double log_value, double log_ref) { return std::fabs(std::expm1(log_value - log_ref)); }
double rel(double value, double ref) { return std::fabs(value - ref) / std::max(std::fabs(ref), 1e-300); }
double rel_scaled(double value, double ref) { return std::fabs(value - ref) / std::max(std::fabs(ref), 1.0); }

const num::QuadratureSpec kSpec{10.0, 64, 1e-11, 1 << 14};

double oracle_piece(const std::function<double(double)>& t, double c3, double p, double lo, double hi,
                    std::vector<double> bps, std::vector<double> modes) {
  return log_exp_moment_oracle(t, c3, p, lo, hi, bps, modes, kSpec);
}

}  // namespace

AuditReport run_parity_audit(int samples, std::uint64_t seed, double tolerance) {
  if (samples < 1) throw Error(ErrorCode::DomainError, "audit needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uni = [&](double a, double b) { return a + (b - a) * unit(rng); };
  auto log_uni = [&](double a, double b) { return std::exp(uni(std::log(a), std::log(b))); };
  Collector c;

  // Sectional: I1, I2 and the assembled set term.
  for (int i = 0; i < samples; ++i) {
    const double c3 = log_uni(0.01, 5.0), b = uni(0.01, 0.45), nu = uni(0.0, 3.0), beta = uni(0.01, 0.99);
    const LiftParams lp{c3, c3 / (4.0 * b), nu, 0.0};
    const double g = lp.gamma;
    const double mode = 2.0 * b * nu / (1.0 - 2.0 * b);
    const auto lin = sectional_integrals(b, nu);
    const auto logs = sectional_log_integrals(b, nu);
    const double o1 = oracle_piece([&](double h) { return (std::fabs(h) + nu) * (std::fabs(h) + nu) / (4 * g); }, c3, b,
                                   -kInf, kInf, {0.0}, {-mode, mode});
    const double o2 = oracle_piece(
        [&](double h) {
          const double e = std::fmax(std::fabs(h) - nu, 0.0);
          return e * e / (4 * g);
        },
        c3, b, -kInf, kInf, {-nu, nu}, {0.0});
    c.add("sectional.I1", rel_linear(lin.i1, o1));
    c.add("sectional.I2", rel_linear(lin.i2, o2));
    c.add("sectional.I1.log", rel_log(logs.log_i1, o1));
    c.add("sectional.I2.log", rel_log(logs.log_i2, o2));
    c.add("sectional.set_term",
          rel_scaled(sectional_set_term_lifted(beta, lp), exp_set_term_oracle(sectional_integrand(beta, lp), lp, kSpec)));
  }

  // General strong: each regime separately.
  for (int regime = 1; regime <= 3; ++regime) {
    const std::string tag = "strong.regime" + std::to_string(regime);
    for (int i = 0; i < samples; ++i) {
      const double c3 = log_uni(0.01, 3.0), p = uni(0.01, 0.4), nu1 = uni(0.05, 3.0), beta = uni(0.01, 0.5);
      const double gamma = c3 / (4.0 * p);
      double ratio;  // nu1^2 / (gamma nu2)
      if (regime == 1) ratio = uni(0.2, 1.9);
      else if (regime == 2) ratio = uni(2.1, 7.9);
      else ratio = uni(8.1, 50.0);
      double nu2 = nu1 * nu1 / (gamma * ratio);
      if (regime == 3 && i % 5 == 0) nu2 = 0.0;
      nu2 = std::min(nu2, 30.0 / c3);
      const LiftParams lp{c3, gamma, nu1, nu2};
      if (make_strong_integrand(lp).regime != regime) continue;
      const SetTermIntegrand si = strong_integrand(beta, lp);
      const ExpTerm& term = si.terms.front();
      const double o = oracle_piece(term.t, c3, p, -kInf, kInf, term.breakpoints, term.modes);
      c.add(tag, rel_log(strong_log_moment(lp), o));
      c.add(tag + ".printed", rel_linear(strong_moment_printed(lp), o));
      c.add("strong.set_term", rel_scaled(strong_set_term_lifted(beta, lp), si.linear + o / c3));
    }
  }
  c.warn("strong.regime3.printed",
         "printed sum keeps the constant-region term e^{c3 nu2} erf((sqrt(8 gamma nu2) - nu1)/sqrt 2)/2, whose "
         "interval is empty in this regime; corrected form: strong.regime3");

  // Nonnegative strong pieces.
  for (int i = 0; i < samples; ++i) {
    const double c3 = log_uni(0.01, 3.0), p = uni(0.01, 0.4), nu1 = uni(0.0, 3.0), beta = uni(0.01, 0.5);
    const double gamma = c3 / (4.0 * p);
    const double nu2 = std::min(uni(0.0, 2.0), 30.0 / c3);
    const LiftParams lp{c3, gamma, nu1, nu2};
    const NonnegStrongParams s = make_nonneg_params(lp);
    const auto t = [&](double h) { return nonneg_t_integrand(h, s); };
    const double mode = s.q_plus / (1.0 - 2.0 * s.p_plus);
    const double lb = s.left_break();
    const double o1 = oracle_piece(t, c3, p, -kInf, lb, {}, {mode});
    const double o2 = oracle_piece(t, c3, p, lb, nu1, {}, {0.5 * (lb + nu1)});
    const double o3 = oracle_piece(t, c3, p, nu1, kInf, {}, {std::max(nu1, mode)});
    const NonnegPieces pc = nonneg_pieces(s);
    const NonnegPieces pp = nonneg_pieces_printed(s);
    c.add("nonneg.I1plus", rel_linear(pc.i1, o1));
    c.add("nonneg.I1plus.printed", rel_linear(pp.i1, o1));
    if (nu2 > 1e-3) c.add("nonneg.I2plus", rel_linear(pc.i2, o2));
    c.add("nonneg.I3plus", rel_linear(pc.i3, o3));
    c.add("nonneg.I3plus.printed", rel_linear(pp.i3, o3));
    const SetTermIntegrand si = strong_nonneg_integrand(beta, lp);
    const double o = oracle_piece(si.terms.front().t, c3, p, -kInf, kInf, si.terms.front().breakpoints,
                                  si.terms.front().modes);
    c.add("nonneg.moment", rel_log(strong_nonneg_log_moment(s), o));
    c.add("nonneg.set_term", rel_scaled(strong_nonneg_set_term_lifted(beta, lp), si.linear + o / c3));
  }
  c.warn("nonneg.I1plus.printed", "printed left-tail piece lacks the factor 1/(2 sqrt 2); corrected form: nonneg.I1plus");
  c.warn("nonneg.I3plus.printed", "printed right-tail piece lacks the factor 1/(2 sqrt 2); corrected form: nonneg.I3plus");

  // Direct (c3 -> 0) quantities against plain Gaussian quadrature.
  for (int i = 0; i < samples; ++i) {
    const double beta = uni(0.01, 0.5), nu = uni(0.0, 3.0);
    const double cut = num::kSqrt2 * num::erfinv(1.0 - beta);
    const double sec = num::gauss_expectation(
        [&](double h) {
          const double a = std::fabs(h);
          const double m = std::fmax(a - nu, 0.0);
          return beta * (a + nu) * (a + nu) + (1.0 - beta) * m * m;
        },
        kSpec, {0.0, -nu, nu});
    const double sd = sectional_set_term_direct(beta, nu);
    c.add("sectional_direct", rel(sd * sd, sec));

    const double str = num::gauss_expectation(
        [&](double h) {
          const double a = std::fabs(h);
          if (a >= cut) return (a + nu) * (a + nu);
          if (a >= nu) return (a - nu) * (a - nu);
          return 0.0;
        },
        kSpec, {-cut, cut, -nu, nu});
    c.add("strong_direct.integral", rel(strong_direct_value(beta, nu), str));
    if (nu <= cut) {
      c.add("strong_direct.closed_form", rel(strong_direct_closed_form(beta, nu), str));
      c.add("strong_direct.closed_form.printed", rel(strong_direct_closed_form_printed(beta, nu), str));
    }

    const double cp = -num::kSqrt2 * num::erfinv(1.0 - 2.0 * beta);
    const double non = num::gauss_expectation(
        [&](double h) { return (h <= cp || h >= nu) ? (h - nu) * (h - nu) : 0.0; }, kSpec, {cp, nu});
    c.add("nonneg_direct.integral", rel(strong_nonneg_direct_value(beta, nu), non));
    c.add("nonneg_direct.S123", rel(strong_nonneg_direct_terms(beta, nu).sum(), non));
    c.add("nonneg_direct.S123.printed", rel(strong_nonneg_direct_terms_printed(beta, nu).sum(), non));
  }
  c.warn("strong_direct.closed_form.printed",
         "printed exponent e^{-nu/2} should read e^{-nu^2/2}; corrected form: strong_direct.closed_form");
  c.warn("nonneg_direct.S123.printed",
         "printed S1 exponent e^{-nu/2} should read e^{-nu^2/2}; corrected form: nonneg_direct.S123");

  AuditReport report;
  report.seed = seed;
  report.samples = samples;
  report.tolerance = tolerance;
  report.entries = c.take();
  return report;
}

}  // namespace l1lab
