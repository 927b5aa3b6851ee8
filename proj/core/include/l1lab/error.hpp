#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace l1lab {

enum class ErrorCode {
  NoSignChange,
  MaxIterations,
  NonConvergent,
  DomainError,
  ConstraintViolated,
  NegativeRadicand,
  NonMonotone,
  DimensionError,
  SolverStalled,
  RankDeficient,
  NoFeasibleBeta,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace l1lab
