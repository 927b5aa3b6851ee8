#pragma once

#include <array>
#include <span>

#include "l1lab/lift/types.hpp"

namespace l1lab {

// Layout of the six threshold tables: which kind they cover, the alpha grid,
// and any literature column shipped as constants (never recomputed here).
struct TableLayout {
  int id = 0;
  ThresholdKind kind = ThresholdKind::sectional;
  std::span<const double> alphas;
  // Empty when the table has no literature column.
  std::span<const double> literature;
  const char* literature_label = "";
};

namespace tables {

inline constexpr std::array<double, 7> kLowAlphas{0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
inline constexpr std::array<double, 8> kHighAlphas{0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999, 0.9999};

// Strong thresholds from Donoho's neighborliness analysis of projected
// cross-polytopes ("High-dimensional centrally symmetric polytopes with
// neighborliness proportional to dimension", Discrete Comput. Geom. 2006).
inline constexpr std::array<double, 7> kDonohoStrongLow{0.00031, 0.00205, 0.00488, 0.01250,
                                                        0.02109, 0.03192, 0.04471};
inline constexpr std::array<double, 8> kDonohoStrongHigh{0.05977, 0.07760, 0.1000, 0.1264,
                                                         0.1438,  0.1620,  0.1677, 0.1685};

// Nonnegative strong thresholds from Donoho and Tanner's neighborliness of
// randomly projected simplices (PNAS 2005).
inline constexpr std::array<double, 7> kDonohoTannerLow{0.00033, 0.0024, 0.0060, 0.0157, 0.0287, 0.0455, 0.0667};
inline constexpr std::array<double, 8> kDonohoTannerHigh{0.0935, 0.1280, 0.1739, 0.2399,
                                                         0.2881, 0.3463, 0.3675, 0.3750};

}  // namespace tables

// Returns the layout for table 1..6; throws DomainError otherwise.
TableLayout table_layout(int id);

}  // namespace l1lab
