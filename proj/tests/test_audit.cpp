#include <gtest/gtest.h>

#include <set>

#include "l1lab/audit.hpp"
#include "l1lab/error.hpp"
#include "l1lab/reference_tables.hpp"

using namespace l1lab;

TEST(Audit, ClosedFormsMatchQuadrature) {
  const AuditReport r = run_parity_audit(100, 42);
  EXPECT_TRUE(r.passed()) << r.max_unwarned_deviation();
  for (const auto& e : r.entries) {
    EXPECT_GT(e.samples, 0) << e.label;
    if (!e.warned) EXPECT_LE(e.max_rel_dev, 1e-6) << e.label;
  }
}

TEST(Audit, EveryWarnedFormHasAPassingCorrection) {
  const AuditReport r = run_parity_audit(100, 7);
  std::set<std::string> clean;
  for (const auto& e : r.entries)
    if (!e.warned && e.max_rel_dev <= 1e-6) clean.insert(e.label);
  int warned = 0;
  for (const auto& e : r.entries) {
    if (!e.warned) continue;
    ++warned;
    EXPECT_GT(e.max_rel_dev, 1e-6) << e.label << " is warned but agrees";
    const auto pos = e.note.find("corrected form: ");
    ASSERT_NE(pos, std::string::npos) << e.label;
    EXPECT_TRUE(clean.count(e.note.substr(pos + 16))) << e.label;
  }
  EXPECT_EQ(warned, 5);
}

TEST(Audit, DeterministicInSeed) {
  const AuditReport a = run_parity_audit(20, 3), b = run_parity_audit(20, 3);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].max_rel_dev, b.entries[i].max_rel_dev);
  EXPECT_THROW(run_parity_audit(0, 1), Error);
}

TEST(ReferenceTables, Layouts) {
  for (int id = 1; id <= 6; ++id) {
    const TableLayout t = table_layout(id);
    EXPECT_EQ(t.id, id);
    EXPECT_EQ(t.alphas.size(), id % 2 ? 7u : 8u);
    if (id > 2) EXPECT_EQ(t.literature.size(), t.alphas.size());
    else EXPECT_TRUE(t.literature.empty());
  }
  EXPECT_THROW(table_layout(7), Error);
}
