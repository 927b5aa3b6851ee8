#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "l1lab/general/weak.hpp"
#include "l1lab/lift/threshold.hpp"
#include "l1lab_cli/app.hpp"
#include "l1lab_cli/curve_file.hpp"

namespace cli = l1lab::cli;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("l1lab_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& f) const { return path_ / f; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(CliThreshold, SectionalAndStrongExamples) {
  const CliRun a = run({"threshold", "--alpha", "0.5", "--kind", "sectional", "--method", "lifted", "--out", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NEAR(json::parse(a.out)["beta"].get<double>(), 0.1045, 5e-4);
  const CliRun b = run({"threshold", "--alpha", "0.7", "--kind", "strong", "--method", "lifted", "--out", "json"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NEAR(json::parse(b.out)["beta"].get<double>(), 0.08298, 5e-4);
}

TEST(CliThreshold, InvalidFlagsExitTwo) {
  EXPECT_EQ(run({"threshold", "--alpha", "1.5"}).code, 2);
  EXPECT_EQ(run({"threshold", "--alpha", "0.5", "--kind", "diagonal"}).code, 2);
  EXPECT_EQ(run({"threshold", "--alpha", "0.5", "--tol", "1e-7"}).code, 2);
  EXPECT_EQ(run({"threshold"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliThreshold, WeakIgnoresMethod) {
  const CliRun a = run({"threshold", "--alpha", "0.4", "--kind", "weak", "--method", "direct", "--out", "csv"});
  const CliRun b = run({"threshold", "--alpha", "0.4", "--kind", "weak", "--method", "lifted", "--out", "csv"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("weak,none,"), std::string::npos);
}

TEST(CliThreshold, MatchesLibraryToSerializedPrecision) {
  const CliRun a = run({"threshold", "--alpha", "0.3", "--kind", "strong-nonneg", "--method", "direct", "--out", "json"});
  ASSERT_EQ(a.code, 0);
  const double lib = l1lab::threshold_bisect(0.3, l1lab::ThresholdKind::strong_nonneg, l1lab::BoundMethod::direct).beta;
  EXPECT_EQ(json::parse(a.out)["beta"].get<double>(), cli::round_sig(lib));
}

TEST(CliTable, RowsAndValidation) {
  const CliRun t2 = run({"table", "--which", "2", "--out", "json", "--jobs", "2"});
  ASSERT_EQ(t2.code, 0) << t2.err;
  const json j = json::parse(t2.out);
  bool seen = false;
  for (const auto& r : j["rows"]) {
    if (r["alpha"].get<double>() == 0.9) {
      EXPECT_NEAR(r["direct"].get<double>(), 0.3079, 5e-4);
      EXPECT_NEAR(r["lifted"].get<double>(), 0.3113, 5e-4);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
  EXPECT_EQ(run({"table", "--which", "7"}).code, 2);
  EXPECT_EQ(run({"table", "--which", "0"}).code, 2);
}

TEST(CliTable, LiteratureColumnAndThresholdAgreement) {
  const CliRun t6 = run({"table", "--which", "6", "--out", "json"});
  ASSERT_EQ(t6.code, 0) << t6.err;
  const json j = json::parse(t6.out);
  EXPECT_EQ(j["literature_label"], "donoho_tanner");
  for (const auto& r : j["rows"]) {
    if (r["alpha"].get<double>() == 0.999) {
      EXPECT_NEAR(r["lifted"].get<double>(), 0.4694, 5e-4);
      EXPECT_EQ(r["literature"].get<double>(), 0.3675);
      const CliRun th = run({"threshold", "--alpha", "0.999", "--kind", "strong-nonneg", "--out", "json"});
      EXPECT_NEAR(json::parse(th.out)["beta"].get<double>(), r["lifted"].get<double>(), 1e-6);
    }
  }
  EXPECT_FALSE(json::parse(run({"table", "--which", "1", "--out", "json"}).out).contains("literature_label"));
}

TEST(CliCurve, StrongLiftedIsMonotone) {
  const CliRun r = run({"curve", "--kind", "strong", "--method", "lifted", "--alpha-grid", "0.1:0.9:0.1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = cli::curve_from_json(r.out);
  ASSERT_TRUE(f);
  ASSERT_EQ(f->points.size(), 9u);
  for (std::size_t i = 1; i < f->points.size(); ++i) {
    EXPECT_GT(f->points[i].alpha, f->points[i - 1].alpha);
    EXPECT_GE(f->points[i].beta, f->points[i - 1].beta);
  }
}

TEST(CliCurve, WeakRoundTripsThroughCharacterization) {
  const CliRun r = run({"curve", "--kind", "weak", "--alpha-grid", "0.05:0.95:0.05"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = cli::curve_from_csv(r.out);
  ASSERT_TRUE(f);
  ASSERT_EQ(f->points.size(), 19u);
  for (const auto& p : f->points) EXPECT_NEAR(l1lab::weak_alpha_of_beta(p.beta), p.alpha, 1e-4);
}

TEST(CliCurve, EmptyOrBadGridExitsTwo) {
  EXPECT_EQ(run({"curve", "--alpha-grid", "0.5:0.1:0.1"}).code, 2);
  EXPECT_EQ(run({"curve", "--alpha-grid", "0.1:0.5"}).code, 2);
  EXPECT_EQ(run({"curve", "--alpha-grid", "0.5:1.2:0.1"}).code, 2);
  EXPECT_EQ(run({"curve", "--alpha-grid", "0.1:0.5:0"}).code, 2);
}

TEST(CliCurve, CsvAndJsonCarryIdenticalValues) {
  const CliRun c = run({"curve", "--kind", "sectional", "--method", "direct", "--alpha-grid", "0.2:0.6:0.2"});
  const CliRun j = run({"curve", "--kind", "sectional", "--method", "direct", "--alpha-grid", "0.2:0.6:0.2", "--format", "json"});
  ASSERT_EQ(c.code, 0);
  ASSERT_EQ(j.code, 0);
  const auto fc = cli::curve_from_csv(c.out);
  const auto fj = cli::curve_from_json(j.out);
  ASSERT_TRUE(fc && fj);
  EXPECT_EQ(fc->header, fj->header);
  ASSERT_EQ(fc->points.size(), fj->points.size());
  for (std::size_t i = 0; i < fc->points.size(); ++i) {
    EXPECT_EQ(fc->points[i].beta, fj->points[i].beta);
    EXPECT_EQ(fc->points[i].params.nu1, fj->points[i].params.nu1);
  }
  // Canonical encodings re-emit byte-identically.
  EXPECT_EQ(cli::curve_to_csv(*fc), c.out);
  EXPECT_EQ(cli::curve_to_json(*fj), j.out);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), cli::kCurveCsvHeader);
}

TEST(CliCurve, ResumesPartialFile) {
  TempDir dir;
  const std::string path = (dir / "curve.csv").string();
  const std::vector<std::string> args{"curve", "--kind", "strong-nonneg", "--method", "direct",
                                      "--alpha-grid", "0.1:0.5:0.1", "--out-file", path, "--jobs", "2"};
  ASSERT_EQ(run(args).code, 0);
  const std::string full = slurp(path);
  // Keep the header and the first two rows, then resume.
  std::istringstream in(full);
  std::string line, partial;
  for (int i = 0; i < 3 && std::getline(in, line); ++i) partial += line + "\n";
  std::ofstream(path, std::ios::trunc) << partial;
  ASSERT_EQ(run(args).code, 0);
  EXPECT_EQ(slurp(path), full);
  // Rerun on a complete file leaves it unchanged.
  ASSERT_EQ(run(args).code, 0);
  EXPECT_EQ(slurp(path), full);
  // Different flags refuse to clobber the file.
  std::vector<std::string> other = args;
  other[2] = "strong";
  EXPECT_EQ(run(other).code, 2);
  EXPECT_EQ(slurp(path), full);
}

TEST(CliCurve, NaNSerializesAsNull) {
  cli::CurveFile f{{"strong", "lifted", "x", "0.5", 1e-5}, {{0.5, NAN, NAN, {NAN, NAN, NAN, NAN}}}};
  const std::string j = cli::curve_to_json(f);
  EXPECT_NE(j.find("\"beta\": null"), std::string::npos);
  const auto back = cli::curve_from_json(j);
  ASSERT_TRUE(back);
  EXPECT_TRUE(std::isnan(back->points[0].beta));
  EXPECT_EQ(cli::curve_to_json(*back), j);
  const std::string c = cli::curve_to_csv(f);
  EXPECT_EQ(cli::curve_to_csv(*cli::curve_from_csv(c)), c);
}

TEST(CliCurve, NineSignificantDigits) {
  EXPECT_EQ(cli::format_number(0.1234567891234), "0.123456789");
  EXPECT_EQ(cli::round_sig(1.0 / 3.0), 0.333333333);
  const auto g = cli::parse_alpha_grid("0.1:0.3:0.1");
  ASSERT_TRUE(g);
  EXPECT_EQ(g->alphas, (std::vector<double>{0.1, 0.2, 0.3}));
}

TEST(CliVerify, WeakDeepRecovery) {
  const CliRun r = run({"verify", "--mode", "weak", "--alpha", "0.99", "--beta", "0.01", "--n", "200", "--trials", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(json::parse(r.out)["rate"].get<double>(), 0.98);
}

TEST(CliVerify, StrongSmallMatrices) {
  const CliRun r = run({"verify", "--mode", "strong", "--n", "16", "--alpha", "0.75", "--beta", "0.0625", "--trials", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["k"], 1);
  EXPECT_GT(j["holds"].get<int>(), 10);
  EXPECT_EQ(j["matrices"].size(), 20u);
}

TEST(CliVerify, CapsAndDimensions) {
  const CliRun r = run({"verify", "--mode", "strong", "--n", "40", "--alpha", "0.5", "--beta", "0.05"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n <= 18"), std::string::npos);
  const CliRun s = run({"verify", "--mode", "sectional", "--n", "30", "--alpha", "0.5", "--beta", "0.1"});
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find("n <= 24"), std::string::npos);
  EXPECT_EQ(run({"verify", "--mode", "weak", "--n", "100", "--alpha", "0.5", "--beta", "0.001"}).code, 2);
}

TEST(CliVerify, DeterministicAcrossJobCounts) {
  const std::vector<std::string> base{"verify", "--mode", "sectional", "--n", "14", "--alpha", "0.6", "--beta", "0.15",
                                      "--trials", "6", "--seed", "9"};
  auto with_jobs = [&](const char* j) {
    auto a = base;
    a.push_back("--jobs");
    a.push_back(j);
    return run(a);
  };
  const CliRun a = with_jobs("1"), b = with_jobs("3");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliAudit, PassesAndIsDeterministic) {
  const CliRun a = run({"audit", "--samples", "100", "--seed", "5"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(run({"audit", "--samples", "100", "--seed", "5"}).out, a.out);
  EXPECT_NE(a.out.find("warning: nonneg.I1plus.printed"), std::string::npos);
  EXPECT_EQ(run({"audit", "--samples", "0"}).code, 2);
}

TEST(CliConfig, FileSuppliesDefaultsFlagsWin) {
  TempDir dir;
  const auto cfg = dir / "l1lab.conf";
  std::ofstream(cfg) << "[threshold]\nkind=strong\nout=json\n";
  ::setenv("L1LAB_CONFIG", cfg.c_str(), 1);
  const CliRun a = run({"threshold", "--alpha", "0.5"});
  const CliRun b = run({"threshold", "--alpha", "0.5", "--kind", "sectional"});
  ::setenv("L1LAB_CONFIG", (dir / "missing.conf").c_str(), 1);
  const CliRun c = run({"threshold", "--alpha", "0.5"});
  ::unsetenv("L1LAB_CONFIG");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(json::parse(a.out)["kind"], "strong");
  EXPECT_EQ(json::parse(b.out)["kind"], "sectional");
  EXPECT_EQ(c.code, 2);
}
