#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gcn/constructors.hpp"
#include "gcn/error.hpp"
#include "gcn/gcset.hpp"
#include "support.hpp"

using namespace gcn;
using gcn::testing::class_lines;

namespace {

unsigned count_class(const AnalysisReport& r, NodeClass c) {
  return static_cast<unsigned>(std::count_if(r.node_classes.begin(), r.node_classes.end(),
                                             [&](const auto& e) { return e.second == c; }));
}

}  // namespace

TEST(NodeSet, ValidatesInput) {
  EXPECT_NO_THROW(NodeSet(1, {{0, 0}, {1, 0}, {0, 1}}));
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidProvenance;
  };
  EXPECT_EQ(kind([] { NodeSet(1, {{0, 0}, {1, 0}}); }), ErrorKind::SizeMismatch);
  EXPECT_EQ(kind([] { NodeSet(1, {{0, 0}, {1, 0}, {0, 0}}); }), ErrorKind::DuplicateNode);
  EXPECT_EQ(kind([] { NodeSet(1, {{0, 0}, {1, 1}, {2, 2}}); }), ErrorKind::TooManyCollinear);
  EXPECT_EQ(kind([] { NodeSet(kMaxDegree + 1, std::vector<Point>(55)); }), ErrorKind::DegreeOutOfRange);
}

TEST(NodeSet, SortsNodes) {
  const NodeSet X(1, {{0, 1}, {1, 0}, {0, 0}});
  EXPECT_EQ(X[0], Point(0, 0));
  EXPECT_EQ(X[1], Point(0, 1));
  EXPECT_EQ(X.index_of({1, 0}), 2u);
  EXPECT_FALSE(X.contains({2, 2}));
}

TEST(MaximalLines, PrincipalLatticeOfDegreeThree) {
  EXPECT_EQ(maximal_lines(principal_lattice(3)), (std::vector<Line>{Line(0, 1, 0), Line(1, 0, 0), Line(1, 1, -3)}));
}

TEST(MaximalLines, ChungYaoRecoversSeedLines) {
  const FamilyInstance inst = generate(Family::ChungYao, 3, 4);
  std::vector<Line> seed = std::get<ChungYaoSpec>(inst.provenance).lines.lines;
  std::sort(seed.begin(), seed.end());
  EXPECT_EQ(maximal_lines(inst.nodes), seed);
}

TEST(MaximalLines, UnitTriangleEdges) {
  EXPECT_EQ(maximal_lines(NodeSet(1, {{0, 0}, {1, 0}, {0, 1}})).size(), 3u);
}

TEST(Analyze, ChungYao) {
  const AnalysisReport r = analyze(chung_yao(3, 2));
  EXPECT_EQ(r.defect, 0u);
  EXPECT_EQ(r.maximal_lines.size(), 5u);
  EXPECT_EQ(count_class(r, NodeClass::TwoM), 10u);
  EXPECT_TRUE(r.n_correct);
  EXPECT_TRUE(r.is_gc);
}

TEST(Analyze, CarnicerGasca) {
  const AnalysisReport r = analyze(carnicer_gasca(3, 2));
  EXPECT_EQ(r.defect, 1u);
  EXPECT_EQ(r.maximal_lines.size(), 4u);
  EXPECT_EQ(count_class(r, NodeClass::TwoM), 6u);
  EXPECT_EQ(count_class(r, NodeClass::OneM), 4u);
}

TEST(Analyze, PrincipalLattice) {
  const AnalysisReport r = analyze(principal_lattice(5));
  EXPECT_EQ(r.defect, 4u);
  EXPECT_EQ(r.maximal_lines.size(), 3u);
  EXPECT_TRUE(r.is_gc);
}

TEST(Analyze, SingularSetIsNeitherCorrectNorGc) {
  const AnalysisReport r = analyze(NodeSet(2, {{0, 0}, {1, 1}, {2, 4}, {3, 9}, {-1, 1}, {-2, 4}}));
  EXPECT_FALSE(r.n_correct);
  EXPECT_FALSE(r.is_gc);
}

TEST(LineProfile, ChungYaoMaximal) {
  const GcContext ctx(chung_yao(3, 9));
  for (const Line& l : ctx.maximal_lines()) {
    const LineProfile p = line_profile(ctx, l);
    EXPECT_EQ(p.node_count, 4u);
    EXPECT_EQ(p.two_m, 4u);
    EXPECT_EQ(p.zero_m + p.one_m, 0u);
  }
}

TEST(LineProfile, CarnicerGascaJoinOfExtras) {
  const FamilyInstance inst = generate(Family::CarnicerGasca, 4, 6);
  const GcContext ctx(inst.nodes);
  const auto& extras = std::get<CarnicerGascaSpec>(inst.provenance).extras;
  bool seen = false;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    for (std::size_t j = i + 1; j < extras.size(); ++j) {
      const LineProfile p = line_profile(ctx, line_through(extras[i], extras[j]));
      if (p.node_count != 2) continue;
      EXPECT_EQ(p.one_m, 2u);
      EXPECT_EQ(p.zero_m + p.two_m, 0u);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(LineProfile, DefectThreeOoLine) {
  const FamilyInstance inst = generate(Family::DefectThree, 5, 1);
  const GcContext ctx(inst.nodes);
  for (const Line& l : class_lines(inst, "oo-line")) {
    const LineProfile p = line_profile(ctx, l);
    EXPECT_EQ(p.node_count, 5u);
    EXPECT_EQ(p.zero_m, 2u);
    EXPECT_EQ(p.one_m, 3u);
    EXPECT_EQ(p.two_m, 0u);
  }
}

TEST(Factor, PrincipalLatticeOfDegreeTwo) {
  const FundamentalFactorization f = factor_fundamental(principal_lattice(2), {0, 0});
  EXPECT_EQ(f.scalar, make_rat(1, 2));
  EXPECT_EQ(f.lines, (std::vector<Line>{Line(1, 1, -2), Line(1, 1, -1)}));
}

TEST(Factor, ChungYaoUsesTheOtherMaximalLines) {
  const NodeSet X = chung_yao(3, 12);
  const auto M = maximal_lines(X);
  for (const Point& A : X.nodes()) {
    const FundamentalFactorization f = factor_fundamental(X, A);
    std::vector<Line> avoiding;
    for (const Line& l : M) {
      if (!incident(l, A)) avoiding.push_back(l);
    }
    EXPECT_EQ(f.lines, avoiding);
    EXPECT_EQ(eval(product_of_lines(f.lines, f.scalar), A), Rat(1));
  }
}

TEST(Factor, UnitTriangle) {
  const FundamentalFactorization f = factor_fundamental(NodeSet(1, {{0, 0}, {1, 0}, {0, 1}}), {0, 0});
  EXPECT_EQ(f.lines, std::vector<Line>{Line(1, 1, -1)});
  EXPECT_EQ(f.scalar, Rat(-1));
}

TEST(Factor, OrderIndependent) {
  const GcContext ctx(defect_two(4, 3));
  std::vector<Line> reversed;
  for (const auto& e : ctx.arrangement().lines()) reversed.push_back(e.line);
  std::reverse(reversed.begin(), reversed.end());
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    std::vector<Line> cands;
    for (const Line& l : reversed) {
      if (!incident(l, ctx.nodes()[a])) cands.push_back(l);
    }
    const FundamentalFactorization f = factor_with_order(ctx.fundamental(a), ctx.nodes()[a], cands);
    EXPECT_EQ(f.lines, ctx.factorization(a).lines);
    EXPECT_EQ(f.scalar, ctx.factorization(a).scalar);
  }
}

TEST(Factor, GenericSetOfDegreeTwoIsNotGc) {
  const NodeSet X(2, {{0, 0}, {7, 1}, {2, 9}, {-5, 4}, {3, -8}, {11, 6}});
  const GcContext ctx(X);
  ASSERT_TRUE(ctx.n_correct());
  EXPECT_FALSE(ctx.is_gc());
  bool residual = false;
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    if (const auto& fail = ctx.factorization_failure(a)) residual |= fail->residual.effective_degree() > 0;
  }
  EXPECT_TRUE(residual);
  try {
    factor_fundamental(X, X[0]);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFullyFactorable);
  }
}

TEST(IsGc, AnyTriangle) {
  EXPECT_TRUE(is_gc(NodeSet(1, {{0, 0}, {5, 1}, {2, 7}})));
}

TEST(GcContext, SubsetsAndMasks) {
  const GcContext ctx(principal_lattice(3));
  const Line bottom(0, 1, 0);
  const NodeMask rest = ctx.all() & ~ctx.arrangement().nodes_on(bottom);
  EXPECT_EQ(ctx.subset_degree(rest), 2u);
  EXPECT_EQ(ctx.subset(rest), principal_lattice(2, AffineMap{1, 0, 0, 1, 0, 1}));
  EXPECT_EQ(ctx.mask_of(ctx.points(rest)), rest);
  EXPECT_THROW(ctx.subset_degree(0b11), Error);
}
