#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l1lab/lift/types.hpp"

namespace l1lab::cli {

// Rounds to 9 significant digits; every float the CLI writes goes through this.
double round_sig(double x);
// "%.9g", with "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double x);

// start:stop:step, expanded to the alphas start + i step <= stop (+1e-9 slack).
struct AlphaGrid {
  std::string text;
  std::vector<double> alphas;
};
// Returns nullopt for malformed text, a non-positive step, an empty grid or
// alphas outside (0, 1).
std::optional<AlphaGrid> parse_alpha_grid(const std::string& text);

struct CurvePoint {
  double alpha = 0.0;
  double beta = 0.0;
  double condition_margin = 0.0;
  LiftParams params;
};

struct CurveHeader {
  std::string kind;
  std::string method;
  std::string version;
  std::string grid;
  double tol = 0.0;
  bool operator==(const CurveHeader&) const = default;
};

struct CurveFile {
  CurveHeader header;
  std::vector<CurvePoint> points;
};

inline constexpr const char* kCurveCsvHeader = "kind,method,version,grid,tol,alpha,beta,condition_margin,c3,gamma,nu1,nu2";

// Canonical encodings: reading either back and re-emitting it is byte-identical.
// CSV repeats the header fields on every row under one header line.
std::string curve_to_csv(const CurveFile& file);
std::string curve_to_json(const CurveFile& file);
std::optional<CurveFile> curve_from_csv(const std::string& text);
std::optional<CurveFile> curve_from_json(const std::string& text);

}  // namespace l1lab::cli
