#include "l1lab/error.hpp"

namespace l1lab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MaxIterations: return "MaxIterations";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::SolverStalled: return "SolverStalled";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NoFeasibleBeta: return "NoFeasibleBeta";
  }
  return "Unknown";
}

}  // namespace l1lab
