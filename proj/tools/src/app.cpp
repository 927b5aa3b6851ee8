#include "l1lab_cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include "CLI11.hpp"
#include "commands.hpp"
#include "l1lab/lift/types.hpp"

namespace l1lab::cli {

namespace {

const CLI::Validator kOpenUnit(
    [](std::string& s) -> std::string {
      const double v = std::strtod(s.c_str(), nullptr);
      return (v > 0.0 && v < 1.0) ? std::string() : "must lie in (0, 1), got " + s;
    },
    "(0,1)");

const CLI::Validator kKind(
    [](std::string& s) -> std::string {
      return parse_kind(s) ? std::string() : "unknown kind '" + s + "'";
    },
    "{weak|sectional|strong|weak-nonneg|strong-nonneg}");

int default_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

}  // namespace

const char* version() noexcept { return L1LAB_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds on l1 recovery thresholds and their empirical checks", "l1lab"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  const char* config = std::getenv("L1LAB_CONFIG");
  if (config && *config && !std::filesystem::exists(config)) {
    err << "error: L1LAB_CONFIG names a missing file: " << config << '\n';
    return kExitUsage;
  }
  app.set_config("--config", config ? config : "", "key=value defaults (also read from L1LAB_CONFIG)");

  const int jobs = default_jobs();

  ThresholdArgs th;
  auto* threshold = app.add_subcommand("threshold", "Largest beta certified at one alpha");
  threshold->add_option("--alpha", th.alpha, "m/n")->required()->check(kOpenUnit);
  threshold->add_option("--kind", th.kind)->check(kKind)->capture_default_str();
  threshold->add_option("--method", th.method)->check(CLI::IsMember({"direct", "lifted"}))->capture_default_str();
  threshold->add_option("--tol", th.tol, "bisection tolerance on beta")->check(CLI::Range(1e-5, 0.1))
      ->capture_default_str();
  threshold->add_option("--out", th.out)->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();

  TableArgs tb;
  tb.jobs = jobs;
  auto* table = app.add_subcommand("table", "Recompute one of the six threshold tables");
  table->add_option("--which", tb.which)->required()->check(CLI::Range(1, 6));
  table->add_option("--out", tb.out)->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  table->add_option("--jobs", tb.jobs)->check(CLI::PositiveNumber);

  CurveArgs cv;
  cv.jobs = jobs;
  auto* curve = app.add_subcommand("curve", "Threshold curve over an alpha grid (resumable)");
  curve->add_option("--kind", cv.kind)->check(kKind)->capture_default_str();
  curve->add_option("--method", cv.method)->check(CLI::IsMember({"direct", "lifted"}))->capture_default_str();
  curve->add_option("--alpha-grid", cv.grid, "start:stop:step")->required();
  curve->add_option("--tol", cv.tol)->check(CLI::Range(1e-5, 0.1))->capture_default_str();
  curve->add_option("--out-file", cv.out_file, "write here; an existing partial file is completed");
  curve->add_option("--format", cv.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  curve->add_option("--jobs", cv.jobs)->check(CLI::PositiveNumber);

  VerifyArgs vf;
  vf.jobs = jobs;
  auto* verify = app.add_subcommand("verify", "Monte Carlo or exhaustive null-space checks on random matrices");
  verify->add_option("--mode", vf.mode)->check(CLI::IsMember({"weak", "sectional", "strong"}))->capture_default_str();
  verify->add_option("--alpha", vf.alpha)->required()->check(kOpenUnit);
  verify->add_option("--beta", vf.beta)->required()->check(kOpenUnit);
  verify->add_option("--n", vf.n)->required()->check(CLI::Range(2, 100000));
  verify->add_option("--trials", vf.trials, "instances (weak) or matrices (sectional, strong)")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  verify->add_option("--seed", vf.seed)->capture_default_str();
  verify->add_flag("--nonneg", vf.nonneg);
  verify->add_option("--jobs", vf.jobs)->check(CLI::PositiveNumber);

  AuditArgs au;
  auto* audit = app.add_subcommand("audit", "Closed forms against quadrature");
  audit->add_option("--samples", au.samples, "random tuples per family")->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  audit->add_option("--seed", au.seed)->capture_default_str();
  audit->add_option("--out", au.out)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  try {
    // CLI11 parses a reversed argument vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (threshold->parsed()) return cmd_threshold(th, out, err);
  if (table->parsed()) return cmd_table(tb, out, err);
  if (curve->parsed()) return cmd_curve(cv, out, err);
  if (verify->parsed()) return cmd_verify(vf, out, err);
  return cmd_audit(au, out, err);
}

}  // namespace l1lab::cli
