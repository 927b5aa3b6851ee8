#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"
#include "l1lab/audit.hpp"
#include "l1lab/empirical/instance.hpp"
#include "l1lab/empirical/monte_carlo.hpp"
#include "l1lab/empirical/nullspace.hpp"
#include "l1lab/error.hpp"
#include "l1lab/lift/threshold.hpp"
#include "l1lab/reference_tables.hpp"
#include "l1lab_cli/app.hpp"
#include "l1lab_cli/curve_file.hpp"

namespace l1lab::cli {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs fn(0..count-1) on up to `jobs` threads. Each index writes its own slot,
// so results do not depend on scheduling.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min(jobs, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x);
}

std::string method_label(ThresholdKind kind, BoundMethod method) {
  return is_weak(kind) ? "none" : std::string(to_string(method));
}

ThresholdOptions options_for(double tol) {
  ThresholdOptions o;
  o.tol_beta = tol;
  return o;
}

// Outcome of one threshold computation; `error` is empty on success.
struct PointOutcome {
  ThresholdResult result;
  std::string error;
};

PointOutcome compute_point(double alpha, ThresholdKind kind, BoundMethod method, double tol) {
  PointOutcome o;
  try {
    o.result = threshold_bisect(alpha, kind, method, options_for(tol));
  } catch (const Error& e) {
    o.error = e.what();
    o.result.alpha = alpha;
    o.result.kind = kind;
    o.result.method = method;
    o.result.beta = o.result.condition_margin = kNaN;
    o.result.params_at_optimum = {kNaN, kNaN, kNaN, kNaN};
  }
  return o;
}

CurvePoint to_point(const ThresholdResult& r) { return {r.alpha, r.beta, r.condition_margin, r.params_at_optimum}; }

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    if (!out) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

}  // namespace

int cmd_threshold(const ThresholdArgs& args, std::ostream& out, std::ostream& err) {
  const ThresholdKind kind = *parse_kind(args.kind);
  const BoundMethod method = *parse_method(args.method);
  const PointOutcome o = compute_point(args.alpha, kind, method, args.tol);
  if (!o.error.empty()) {
    err << "error: " << o.error << '\n';
    return kExitNumerical;
  }
  const ThresholdResult& r = o.result;
  const std::string mlabel = method_label(kind, method);
  if (args.out == "json") {
    json warnings = json::array();
    for (const auto& w : r.warnings) warnings.push_back(w);
    json j{{"kind", std::string(to_string(kind))},
           {"method", mlabel},
           {"version", version()},
           {"tol", number(args.tol)},
           {"alpha", number(r.alpha)},
           {"beta", number(r.beta)},
           {"condition_margin", number(r.condition_margin)},
           {"params",
            {{"c3", number(r.params_at_optimum.c3)},
             {"gamma", number(r.params_at_optimum.gamma)},
             {"nu1", number(r.params_at_optimum.nu1)},
             {"nu2", number(r.params_at_optimum.nu2)}}},
           {"feasibility_checks", r.feasibility_checks},
           {"monotone", r.monotone},
           {"warnings", warnings}};
    out << j.dump(2) << '\n';
  } else if (args.out == "csv") {
    CurveFile f{{std::string(to_string(kind)), mlabel, version(), format_number(args.alpha), round_sig(args.tol)},
                {to_point(r)}};
    out << curve_to_csv(f);
  } else {
    out << "kind              " << to_string(kind) << '\n'
        << "method            " << mlabel << '\n'
        << "alpha             " << format_number(r.alpha) << '\n'
        << "beta              " << format_number(r.beta) << '\n'
        << "condition_margin  " << format_number(r.condition_margin) << '\n'
        << "c3                " << format_number(r.params_at_optimum.c3) << '\n'
        << "gamma             " << format_number(r.params_at_optimum.gamma) << '\n'
        << "nu1               " << format_number(r.params_at_optimum.nu1) << '\n'
        << "nu2               " << format_number(r.params_at_optimum.nu2) << '\n'
        << "checks            " << r.feasibility_checks << '\n';
    for (const auto& w : r.warnings) out << "warning           " << w << '\n';
  }
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  return kExitOk;
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  const TableLayout layout = table_layout(args.which);
  const int rows = static_cast<int>(layout.alphas.size());
  std::vector<PointOutcome> cells(2 * rows);
  parallel_for(2 * rows, args.jobs, [&](int i) {
    const BoundMethod m = i % 2 == 0 ? BoundMethod::direct : BoundMethod::lifted;
    cells[i] = compute_point(layout.alphas[i / 2], layout.kind, m, ThresholdOptions{}.tol_beta);
  });
  int code = kExitOk;
  for (const auto& c : cells) {
    if (!c.error.empty()) {
      err << "error: alpha " << format_number(c.result.alpha) << " " << to_string(c.result.method) << ": " << c.error
          << '\n';
      code = kExitNumerical;
    }
  }
  const bool lit = !layout.literature.empty();
  auto direct = [&](int r) { return cells[2 * r].result.beta; };
  auto lifted = [&](int r) { return cells[2 * r + 1].result.beta; };

  if (args.out == "json") {
    json rows_j = json::array();
    for (int r = 0; r < rows; ++r) {
      json row{{"alpha", number(layout.alphas[r])}, {"direct", number(direct(r))}, {"lifted", number(lifted(r))}};
      if (lit) row["literature"] = number(layout.literature[r]);
      rows_j.push_back(row);
    }
    json j{{"table", layout.id}, {"kind", std::string(to_string(layout.kind))}, {"rows", rows_j}};
    if (lit) j["literature_label"] = layout.literature_label;
    out << j.dump(2) << '\n';
  } else if (args.out == "csv") {
    out << "table,kind,alpha,direct,lifted,literature\n";
    for (int r = 0; r < rows; ++r) {
      out << layout.id << ',' << to_string(layout.kind) << ',' << format_number(layout.alphas[r]) << ','
          << format_number(direct(r)) << ',' << format_number(lifted(r)) << ','
          << (lit ? format_number(layout.literature[r]) : std::string()) << '\n';
    }
  } else {
    char line[160];
    out << "table " << layout.id << " (" << to_string(layout.kind) << ")\n";
    std::snprintf(line, sizeof line, "%-10s %-14s %-14s %s\n", "alpha", "direct", "lifted",
                  lit ? layout.literature_label : "");
    out << line;
    for (int r = 0; r < rows; ++r) {
      std::snprintf(line, sizeof line, "%-10s %-14s %-14s %s\n", format_number(layout.alphas[r]).c_str(),
                    format_number(direct(r)).c_str(), format_number(lifted(r)).c_str(),
                    lit ? format_number(layout.literature[r]).c_str() : "");
      out << line;
    }
    if (lit) out << "(" << layout.literature_label << ": literature values, not recomputed)\n";
  }
  return code;
}

int cmd_curve(const CurveArgs& args, std::ostream& out, std::ostream& err) {
  const auto grid = parse_alpha_grid(args.grid);
  if (!grid) {
    err << "error: --alpha-grid '" << args.grid << "' is malformed, empty or leaves (0, 1)\n";
    return kExitUsage;
  }
  const ThresholdKind kind = *parse_kind(args.kind);
  const BoundMethod method = *parse_method(args.method);
  const CurveHeader header{std::string(to_string(kind)), method_label(kind, method), version(), grid->text,
                           round_sig(args.tol)};
  const bool json_format = args.format == "json";
  const int count = static_cast<int>(grid->alphas.size());
  std::vector<std::optional<CurvePoint>> points(count);

  if (!args.out_file.empty() && std::filesystem::exists(args.out_file)) {
    const auto text = read_file(args.out_file);
    if (text && !text->empty()) {
      const auto prior = json_format ? curve_from_json(*text) : curve_from_csv(*text);
      if (!prior) {
        err << "error: cannot parse existing " << args.out_file << " as " << args.format << '\n';
        return kExitUsage;
      }
      if (!(prior->header == header)) {
        err << "error: " << args.out_file << " was written with different flags; refusing to overwrite\n";
        return kExitUsage;
      }
      std::map<std::string, CurvePoint> by_alpha;
      for (const auto& p : prior->points)
        if (std::isfinite(p.condition_margin)) by_alpha[format_number(p.alpha)] = p;
      for (int i = 0; i < count; ++i) {
        const auto it = by_alpha.find(format_number(grid->alphas[i]));
        if (it != by_alpha.end()) points[i] = it->second;
      }
    }
  }

  auto assemble = [&] {
    CurveFile f{header, {}};
    for (const auto& p : points)
      if (p) f.points.push_back(*p);
    return json_format ? curve_to_json(f) : curve_to_csv(f);
  };

  std::vector<int> todo;
  for (int i = 0; i < count; ++i)
    if (!points[i]) todo.push_back(i);

  int code = kExitOk;
  const int chunk = std::max(1, args.jobs);
  for (std::size_t start = 0; start < todo.size(); start += chunk) {
    const int n = static_cast<int>(std::min<std::size_t>(chunk, todo.size() - start));
    std::vector<PointOutcome> done(n);
    parallel_for(n, args.jobs, [&](int j) {
      done[j] = compute_point(grid->alphas[todo[start + j]], kind, method, args.tol);
    });
    for (int j = 0; j < n; ++j) {
      points[todo[start + j]] = to_point(done[j].result);
      if (!done[j].error.empty()) {
        err << "error: alpha " << format_number(done[j].result.alpha) << ": " << done[j].error << '\n';
        code = kExitNumerical;
      }
    }
    // Checkpoint so an interrupted sweep resumes from here.
    if (!args.out_file.empty() && !write_file(args.out_file, assemble())) {
      err << "error: cannot write " << args.out_file << '\n';
      return kExitUsage;
    }
  }
  if (args.out_file.empty()) {
    out << assemble();
  } else if (todo.empty() && !write_file(args.out_file, assemble())) {
    err << "error: cannot write " << args.out_file << '\n';
    return kExitUsage;
  }
  return code;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const int n = args.n;
  const int m = static_cast<int>(std::lround(args.alpha * n));
  const int k = static_cast<int>(std::lround(args.beta * n));
  const bool exhaustive = args.mode != "weak";
  if (args.mode == "sectional" && (n > kSectionalMaxN || k > kSectionalMaxK)) {
    err << "error: sectional mode is exhaustive and capped at n <= " << kSectionalMaxN << ", k <= " << kSectionalMaxK
        << " (got n = " << n << ", k = " << k << ")\n";
    return kExitUsage;
  }
  if (args.mode == "strong" && (n > kStrongMaxN || k > kStrongMaxK)) {
    err << "error: strong mode is exhaustive and capped at n <= " << kStrongMaxN << ", k <= " << kStrongMaxK
        << " (got n = " << n << ", k = " << k << ")\n";
    return kExitUsage;
  }
  if (!(k <= m && m < n && m >= 1 && (exhaustive || k >= 1))) {
    err << "error: need " << (exhaustive ? "0" : "1") << " <= k <= m < n, got n = " << n << ", m = round(alpha n) = "
        << m << ", k = round(beta n) = " << k << '\n';
    return kExitUsage;
  }

  json j{{"mode", args.mode}, {"alpha", number(args.alpha)}, {"beta", number(args.beta)}, {"n", n},   {"m", m},
         {"k", k},           {"trials", args.trials},        {"seed", args.seed},           {"nonneg", args.nonneg}};

  if (!exhaustive) {
    try {
      const RecoveryRate r = weak_recovery_stats(args.alpha, args.beta, n, args.trials, args.nonneg, args.seed, args.jobs);
      j["rate"] = number(r.rate);
      j["successes"] = r.successes;
      j["solver_errors"] = r.solver_errors;
      j["mean_solver_iterations"] = number(static_cast<double>(r.solver_iterations) / r.trials);
      if (r.solver_errors > 0) err << "warning: " << r.solver_errors << " solver errors counted as failures\n";
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitNumerical;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  struct MatrixOutcome {
    std::uint64_t seed = 0;
    bool holds = false;
    std::vector<int> support;
    std::string error;
  };
  std::vector<MatrixOutcome> outcomes(args.trials);
  parallel_for(args.trials, args.jobs, [&](int i) {
    MatrixOutcome& o = outcomes[i];
    const std::uint64_t base = derive_seed(args.seed, static_cast<std::uint64_t>(i));
    // Gaussian matrices are full rank almost surely; redraw on the rare failure.
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
      o.seed = attempt == 0 ? base : derive_seed(base, attempt);
      try {
        o.error.clear();
        if (args.mode == "strong") {
          o.holds = strong_nullspace_holds(gaussian_matrix(m, n, o.seed), k, args.nonneg);
        } else {
          const ProblemInstance inst = generate_instance(n, m, k, args.nonneg, o.seed);
          o.support = inst.support;
          o.holds = args.nonneg ? nonneg_nullspace_holds(inst.A, inst.support)
                                : sectional_nullspace_holds(inst.A, inst.support);
        }
        return;
      } catch (const Error& e) {
        o.error = e.what();
        if (e.code() != ErrorCode::RankDeficient) return;
      }
    }
  });

  json matrices = json::array();
  int holds = 0;
  for (int i = 0; i < args.trials; ++i) {
    const auto& o = outcomes[i];
    if (!o.error.empty()) {
      err << "error: matrix " << i << ": " << o.error << '\n';
      return kExitNumerical;
    }
    holds += o.holds ? 1 : 0;
    json row{{"index", i}, {"seed", o.seed}, {"holds", o.holds}};
    if (args.mode == "sectional") row["support"] = o.support;
    matrices.push_back(row);
  }
  j["holds"] = holds;
  j["fraction"] = number(static_cast<double>(holds) / args.trials);
  j["matrices"] = matrices;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_audit(const AuditArgs& args, std::ostream& out, std::ostream& err) {
  AuditReport report;
  try {
    report = run_parity_audit(args.samples, args.seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  const bool ok = report.passed();
  if (args.out == "json") {
    json entries = json::array();
    for (const auto& e : report.entries) {
      json row{{"label", e.label}, {"samples", e.samples}, {"max_rel_dev", number(e.max_rel_dev)}, {"warned", e.warned}};
      if (e.warned) row["note"] = e.note;
      entries.push_back(row);
    }
    json j{{"seed", report.seed},
           {"samples", report.samples},
           {"tolerance", number(report.tolerance)},
           {"max_unwarned_deviation", number(report.max_unwarned_deviation())},
           {"passed", ok},
           {"entries", entries}};
    out << j.dump(2) << '\n';
  } else {
    char line[160];
    out << "parity audit: " << report.samples << " samples per family, seed " << report.seed << ", tolerance "
        << format_number(report.tolerance) << '\n';
    for (const auto& e : report.entries) {
      const char* status = e.warned ? "warned" : (e.max_rel_dev <= report.tolerance ? "ok" : "FAIL");
      std::snprintf(line, sizeof line, "  %-36s %6d  %-12s %s\n", e.label.c_str(), e.samples,
                    format_number(round_sig(e.max_rel_dev)).c_str(), status);
      out << line;
    }
    for (const auto& e : report.entries)
      if (e.warned) out << "warning: " << e.label << ": " << e.note << '\n';
    out << (ok ? "PASS" : "FAIL") << " max unwarned deviation " << format_number(report.max_unwarned_deviation())
        << '\n';
  }
  return ok ? kExitOk : kExitAuditFailed;
}

}  // namespace l1lab::cli
