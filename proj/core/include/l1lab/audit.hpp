#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace l1lab {

// Closed form vs quadrature agreement for one family of expressions.
struct ParityEntry {
  std::string label;
  int samples = 0;
  double max_rel_dev = 0.0;
  // Printed forms known to deviate; excluded from the pass/fail decision.
  bool warned = false;
  std::string note;
};

struct AuditReport {
  std::uint64_t seed = 0;
  int samples = 0;
  double tolerance = 1e-6;
  std::vector<ParityEntry> entries;

  // Largest deviation among entries that are not warned.
  double max_unwarned_deviation() const;
  bool passed() const;
};

// Samples `samples` random valid parameter tuples per family and compares
// every closed form (as implemented, and as printed where the printed version
// differs) with the quadrature oracle. Deterministic in `seed`.
// Throws DomainError for samples < 1.
AuditReport run_parity_audit(int samples, std::uint64_t seed, double tolerance = 1e-6);

}  // namespace l1lab
