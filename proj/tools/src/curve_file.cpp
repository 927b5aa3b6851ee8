#include "l1lab_cli/curve_file.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace l1lab::cli {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x);
}

double from_json_number(const json& j) { return j.is_null() ? kNaN : j.get<double>(); }

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

double round_sig(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::optional<AlphaGrid> parse_alpha_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) return std::nullopt;
  const auto start = parse_double(parts[0]), stop = parse_double(parts[1]), step = parse_double(parts[2]);
  if (!start || !stop || !step || !(*step > 0.0) || !(*stop >= *start)) return std::nullopt;
  const double span = (*stop - *start) / *step;
  if (span > 1e6) return std::nullopt;
  AlphaGrid grid{text, {}};
  const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  for (long i = 0; i < count; ++i) {
    // Rounding removes the drift of start + i * step (0.30000000000000004 etc).
    const double a = round_sig(*start + static_cast<double>(i) * *step);
    if (!(a > 0.0 && a < 1.0)) return std::nullopt;
    if (!grid.alphas.empty() && !(a > grid.alphas.back())) return std::nullopt;
    grid.alphas.push_back(a);
  }
  if (grid.alphas.empty()) return std::nullopt;
  return grid;
}

std::string curve_to_csv(const CurveFile& file) {
  std::ostringstream os;
  os << kCurveCsvHeader << '\n';
  const auto& h = file.header;
  for (const auto& p : file.points) {
    os << h.kind << ',' << h.method << ',' << h.version << ',' << h.grid << ',' << format_number(h.tol) << ','
       << format_number(p.alpha) << ',' << format_number(p.beta) << ',' << format_number(p.condition_margin) << ','
       << format_number(p.params.c3) << ',' << format_number(p.params.gamma) << ',' << format_number(p.params.nu1)
       << ',' << format_number(p.params.nu2) << '\n';
  }
  return os.str();
}

std::string curve_to_json(const CurveFile& file) {
  json points = json::array();
  for (const auto& p : file.points) {
    points.push_back({{"alpha", number(p.alpha)},
                      {"beta", number(p.beta)},
                      {"condition_margin", number(p.condition_margin)},
                      {"c3", number(p.params.c3)},
                      {"gamma", number(p.params.gamma)},
                      {"nu1", number(p.params.nu1)},
                      {"nu2", number(p.params.nu2)}});
  }
  json j{{"kind", file.header.kind},     {"method", file.header.method}, {"version", file.header.version},
         {"grid", file.header.grid},     {"tol", number(file.header.tol)}, {"points", points}};
  return j.dump(2) + "\n";
}

std::optional<CurveFile> curve_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCurveCsvHeader) return std::nullopt;
  CurveFile file;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 12) return std::nullopt;
    double v[7];
    for (int i = 0; i < 7; ++i) {
      const auto d = parse_double(f[5 + i]);
      if (!d) return std::nullopt;
      v[i] = *d;
    }
    const auto tol = parse_double(f[4]);
    if (!tol) return std::nullopt;
    CurveHeader h{f[0], f[1], f[2], f[3], *tol};
    if (first) {
      file.header = h;
      first = false;
    } else if (!(h == file.header)) {
      return std::nullopt;
    }
    file.points.push_back({v[0], v[1], v[2], {v[3], v[4], v[5], v[6]}});
  }
  if (first) return std::nullopt;
  return file;
}

std::optional<CurveFile> curve_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    CurveFile file;
    file.header = {j.at("kind").get<std::string>(), j.at("method").get<std::string>(),
                   j.at("version").get<std::string>(), j.at("grid").get<std::string>(), from_json_number(j.at("tol"))};
    for (const auto& p : j.at("points")) {
      file.points.push_back({from_json_number(p.at("alpha")),
                             from_json_number(p.at("beta")),
                             from_json_number(p.at("condition_margin")),
                             {from_json_number(p.at("c3")), from_json_number(p.at("gamma")),
                              from_json_number(p.at("nu1")), from_json_number(p.at("nu2"))}});
    }
    return file;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

}  // namespace l1lab::cli
