#include "l1lab/reference_tables.hpp"

#include <string>

#include "l1lab/error.hpp"

namespace l1lab {

TableLayout table_layout(int id) {
  using namespace tables;
  switch (id) {
    case 1: return {1, ThresholdKind::sectional, kLowAlphas, {}, ""};
    case 2: return {2, ThresholdKind::sectional, kHighAlphas, {}, ""};
    case 3: return {3, ThresholdKind::strong, kLowAlphas, kDonohoStrongLow, "donoho"};
    case 4: return {4, ThresholdKind::strong, kHighAlphas, kDonohoStrongHigh, "donoho"};
    case 5: return {5, ThresholdKind::strong_nonneg, kLowAlphas, kDonohoTannerLow, "donoho_tanner"};
    case 6: return {6, ThresholdKind::strong_nonneg, kHighAlphas, kDonohoTannerHigh, "donoho_tanner"};
    default: break;
  }
  throw Error(ErrorCode::DomainError, "table id must be 1..6, got " + std::to_string(id));
}

}  // namespace l1lab
