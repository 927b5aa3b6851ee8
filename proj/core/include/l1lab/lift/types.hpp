#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l1lab {

enum class ThresholdKind { weak, sectional, strong, weak_nonneg, strong_nonneg };
enum class BoundMethod { direct, lifted };

std::string_view to_string(ThresholdKind kind) noexcept;
std::string_view to_string(BoundMethod method) noexcept;
// Accepts both "weak-nonneg" and "weak_nonneg" spellings.
std::optional<ThresholdKind> parse_kind(std::string_view text) noexcept;
std::optional<BoundMethod> parse_method(std::string_view text) noexcept;

bool is_weak(ThresholdKind kind) noexcept;
// Strong kinds restrict beta to (0, 0.5].
bool is_strong(ThresholdKind kind) noexcept;

// Free variables of the lifted bound. nu2 is unused by the sectional kind.
struct LiftParams {
  double c3 = 0.0;
  double gamma = 0.0;
  double nu1 = 0.0;
  double nu2 = 0.0;
};

struct SphereTerm {
  double c3 = 0.0;
  double alpha = 0.0;
  double gamma_hat = 0.0;
  double value = 0.0;
};

struct BoundEvaluation {
  double c3 = 0.0;
  double i_set = 0.0;
  double i_sph = 0.0;
  double total = 0.0;

  bool feasible() const noexcept { return total < 0.0; }
};

struct ThresholdResult {
  double alpha = 0.0;
  double beta = 0.0;
  BoundMethod method = BoundMethod::direct;
  ThresholdKind kind = ThresholdKind::weak;
  LiftParams params_at_optimum;
  // Value of the kind's condition at beta; negative means satisfied.
  double condition_margin = 0.0;
  int feasibility_checks = 0;
  bool monotone = true;
  std::vector<std::string> warnings;
};

}  // namespace l1lab
