#include "l1lab/lift/types.hpp"

namespace l1lab {

std::string_view to_string(ThresholdKind kind) noexcept {
  switch (kind) {
    case ThresholdKind::weak: return "weak";
    case ThresholdKind::sectional: return "sectional";
    case ThresholdKind::strong: return "strong";
    case ThresholdKind::weak_nonneg: return "weak-nonneg";
    case ThresholdKind::strong_nonneg: return "strong-nonneg";
  }
  return "unknown";
}

std::string_view to_string(BoundMethod method) noexcept {
  return method == BoundMethod::direct ? "direct" : "lifted";
}

std::optional<ThresholdKind> parse_kind(std::string_view text) noexcept {
  if (text == "weak") return ThresholdKind::weak;
  if (text == "sectional") return ThresholdKind::sectional;
  if (text == "strong") return ThresholdKind::strong;
  if (text == "weak-nonneg" || text == "weak_nonneg") return ThresholdKind::weak_nonneg;
  if (text == "strong-nonneg" || text == "strong_nonneg") return ThresholdKind::strong_nonneg;
  return std::nullopt;
}

std::optional<BoundMethod> parse_method(std::string_view text) noexcept {
  if (text == "direct") return BoundMethod::direct;
  if (text == "lifted") return BoundMethod::lifted;
  return std::nullopt;
}

bool is_weak(ThresholdKind kind) noexcept {
  return kind == ThresholdKind::weak || kind == ThresholdKind::weak_nonneg;
}

bool is_strong(ThresholdKind kind) noexcept {
  return kind == ThresholdKind::strong || kind == ThresholdKind::strong_nonneg;
}

}  // namespace l1lab
