#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace l1lab::cli {

struct ThresholdArgs {
  double alpha = 0.0;
  std::string kind = "sectional";
  std::string method = "lifted";
  double tol = 1e-5;
  std::string out = "text";
};

struct TableArgs {
  int which = 0;
  std::string out = "text";
  int jobs = 1;
};

struct CurveArgs {
  std::string kind = "sectional";
  std::string method = "lifted";
  std::string grid;
  double tol = 1e-5;
  std::string out_file;
  std::string format = "csv";
  int jobs = 1;
};

struct VerifyArgs {
  std::string mode = "weak";
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;
  int trials = 20;
  std::uint64_t seed = 1;
  bool nonneg = false;
  int jobs = 1;
};

struct AuditArgs {
  int samples = 100;
  std::uint64_t seed = 42;
  std::string out = "text";
};

int cmd_threshold(const ThresholdArgs& args, std::ostream& out, std::ostream& err);
int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err);
int cmd_curve(const CurveArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditArgs& args, std::ostream& out, std::ostream& err);

}  // namespace l1lab::cli
