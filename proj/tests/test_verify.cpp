#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "gcn/error.hpp"
#include "gcn/verify.hpp"
#include "support.hpp"

using namespace gcn;
using gcn::testing::class_lines;

namespace {

const TheoremReport& report(const ReportBundle& b, std::string_view id) {
  auto it = std::find_if(b.reports.begin(), b.reports.end(), [&](const auto& r) { return r.theorem_id == id; });
  if (it == b.reports.end()) throw std::out_of_range(std::string(id));
  return *it;
}

std::string failures(const ReportBundle& b) {
  std::string out;
  for (const auto& r : b.reports) {
    if (r.status != CheckStatus::Fail) continue;
    out += r.theorem_id + ":";
    for (const auto& w : r.witnesses) out += " " + w.what + ";";
    out += "\n";
  }
  return out;
}

FamilyInstance perturbed(const FamilyInstance& inst, std::size_t idx) {
  std::vector<Point> pts(inst.nodes.nodes().begin(), inst.nodes.nodes().end());
  pts[idx].x += make_rat(1, 1000);
  FamilyInstance bad = inst;
  bad.nodes = NodeSet(inst.nodes.degree(), pts);
  return bad;
}

}  // namespace

TEST(TheoremIds, SortedAndUnique) {
  const auto ids = theorem_ids();
  EXPECT_EQ(ids.size(), 13u);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(Verifier, UnknownIdRejected) {
  const GcContext ctx(chung_yao(3, 0));
  Verifier v(ctx);
  try {
    v.check("thm-0.0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidProvenance);
  }
}

TEST(Verifier, SelectedIdsOnly) {
  const GcContext ctx(principal_lattice(5));
  Verifier v(ctx);
  const std::vector<std::string> ids{"maximal-trace", "census"};
  const ReportBundle b = v.run(ids);
  ASSERT_EQ(b.reports.size(), 2u);
  EXPECT_EQ(b.reports[0].theorem_id, "census");
  EXPECT_EQ(b.reports[1].theorem_id, "maximal-trace");
  EXPECT_TRUE(b.passed());
}

class FullBattery : public ::testing::TestWithParam<std::tuple<Family, unsigned>> {};

TEST_P(FullBattery, Passes) {
  const auto [f, n] = GetParam();
  for (std::uint64_t seed : {0u, 1u}) {
    const FamilyInstance inst = generate(f, n, seed);
    const ReportBundle b = verify_instance(inst);
    EXPECT_TRUE(b.passed()) << describe(inst) << "\n" << failures(b);
    EXPECT_EQ(b.reports.size(), theorem_ids().size());
    EXPECT_EQ(b.gm_conditional, n >= 6);
    for (const auto& r : b.reports) {
      if (r.status == CheckStatus::Skipped) EXPECT_FALSE(r.skip_reason.empty()) << r.theorem_id;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Families, FullBattery,
                         ::testing::Values(std::tuple{Family::ChungYao, 3u}, std::tuple{Family::ChungYao, 5u},
                                           std::tuple{Family::CarnicerGasca, 3u}, std::tuple{Family::CarnicerGasca, 5u},
                                           std::tuple{Family::DefectTwo, 3u}, std::tuple{Family::DefectTwo, 5u},
                                           std::tuple{Family::DefectThree, 4u}, std::tuple{Family::DefectThree, 5u},
                                           std::tuple{Family::Principal, 3u}, std::tuple{Family::Principal, 5u}),
                         [](const auto& info) {
                           std::string name(family_name(std::get<0>(info.param)));
                           std::replace(name.begin(), name.end(), '-', '_');
                           return name + "_n" + std::to_string(std::get<1>(info.param));
                         });

TEST(Checks, CoincidentConfigurationsPass) {
  const auto d2 = gcn::testing::defect_two_with_hat(5, 1);
  EXPECT_TRUE(verify_instance(d2.instance).passed());
  const auto d3 = gcn::testing::defect_three_with_hats(6, 1, 1);
  const ReportBundle b = verify_instance(d3.instance);
  EXPECT_TRUE(b.passed()) << failures(b);
}

TEST(Checks, UsageCardinalityOnChungYao) {
  const TheoremReport r = check_usage_cardinality(chung_yao(3, 2));
  EXPECT_EQ(r.status, CheckStatus::Pass);
  EXPECT_EQ(r.theorem_id, "usage-cardinality");
}

TEST(Checks, FreeFunctionsPass) {
  const NodeSet X = defect_three(5, 6);
  for (const TheoremReport& r : {check_usage_cardinality(X), check_maximal_trace(X), check_proper_sets(X),
                                 check_defect_laws(X), check_node_profile(X), check_census(X)})
    EXPECT_EQ(r.status, CheckStatus::Pass) << r.theorem_id;
}

TEST(Checks, PappusOnSmallestDefectThree) {
  EXPECT_EQ(check_pappus_exclusion(generate(Family::DefectThree, 4, 0)).status, CheckStatus::Pass);
}

TEST(Checks, PappusNeedsProvenance) {
  EXPECT_EQ(check_pappus_exclusion(generate(Family::ChungYao, 4, 0)).status, CheckStatus::Skipped);
}

TEST(Checks, PappusViolationCaughtByConstruction) {
  const FamilyInstance inst = generate(Family::DefectThree, 5, 8);
  auto spec = std::get<Defect3Spec>(inst.provenance);
  const auto l23 = class_lines(inst, "l-ij").back();
  const auto D1 = intersect(l23, spec.maximal_seed_lines.lines[0]);
  ASSERT_TRUE(D1.has_value());
  spec.d_nodes[0] = *D1;
  EXPECT_THROW(defect_three_from_spec(5, spec), Error);
}

TEST(Checks, ProperSetsSkippedBelowFour) {
  const TheoremReport r = check_proper_sets(carnicer_gasca(3, 0));
  EXPECT_EQ(r.status, CheckStatus::Skipped);
  EXPECT_FALSE(r.skip_reason.empty());
}

TEST(Checks, NodeProfileSkippedForLargePrincipal) {
  EXPECT_EQ(check_node_profile(principal_lattice(5)).status, CheckStatus::Skipped);
}

TEST(Checks, DefectThreeAtFourRunsPrincipalChecks) {
  const ReportBundle b = verify_instance(generate(Family::DefectThree, 4, 2));
  EXPECT_EQ(report(b, "principal-lattice").status, CheckStatus::Pass);
  EXPECT_EQ(report(b, "pappus-exclusion").status, CheckStatus::Pass);
}

TEST(NegativeControl, PerturbedNodeIsDetected) {
  const FamilyInstance inst = generate(Family::CarnicerGasca, 4, 3);
  for (std::size_t idx : {0u, 7u}) {
    const FamilyInstance bad = perturbed(inst, idx);
    const ReportBundle b = verify_instance(bad);
    EXPECT_FALSE(b.passed());
  }
}

TEST(NegativeControl, NonGcInputSkipsTheRest) {
  const NodeSet X(2, {{0, 0}, {7, 1}, {2, 9}, {-5, 4}, {3, -8}, {11, 6}});
  const ReportBundle b = verify_set(X);
  EXPECT_FALSE(b.passed());
  const TheoremReport& gc = report(b, "gc-property");
  EXPECT_EQ(gc.status, CheckStatus::Fail);
  EXPECT_FALSE(gc.witnesses.empty());
  EXPECT_LE(gc.witnesses.size(), kWitnessBudget);
  EXPECT_GE(gc.violations, gc.witnesses.size());
  EXPECT_EQ(report(b, "fundamental-delta").status, CheckStatus::Pass);
  for (const auto& r : b.reports) {
    if (r.theorem_id != "gc-property" && r.theorem_id != "fundamental-delta")
      EXPECT_EQ(r.status, CheckStatus::Skipped) << r.theorem_id;
  }
}
