#include <gtest/gtest.h>

#include <set>

#include "gcn/constructors.hpp"
#include "gcn/error.hpp"
#include "gcn/gcset.hpp"
#include "support.hpp"

using namespace gcn;
using gcn::testing::choose2;
using gcn::testing::class_lines;

namespace {

unsigned count_class(const GcContext& ctx, NodeClass c) { return popcount(ctx.class_mask(c)); }

}  // namespace

TEST(Rng, Deterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    const long v = c.uniform(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::ChungYao, Family::CarnicerGasca, Family::DefectTwo, Family::DefectThree, Family::Principal})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("defect-4").has_value());
  EXPECT_EQ(family_min_degree(Family::DefectTwo), 3u);
  EXPECT_EQ(family_min_degree(Family::DefectThree), 4u);
}

TEST(GeneralPosition, NoParallelNoConcurrent) {
  const auto g = general_position_lines(6, 99);
  ASSERT_EQ(g.lines.size(), 6u);
  std::set<Point> meets;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      auto p = intersect(g.lines[i], g.lines[j]);
      ASSERT_TRUE(p.has_value());
      EXPECT_TRUE(meets.insert(*p).second);
    }
  }
}

TEST(ChungYao, Counts) {
  const GcContext ctx(chung_yao(3, 7));
  EXPECT_EQ(ctx.size(), 10u);
  EXPECT_EQ(ctx.maximal_ids().size(), 5u);
  EXPECT_EQ(ctx.defect(), 0u);
  EXPECT_EQ(count_class(ctx, NodeClass::TwoM), 10u);
  EXPECT_EQ(chung_yao(1, 3).size(), 3u);
}

TEST(CarnicerGasca, Counts) {
  for (unsigned n : {2u, 3u}) {
    const GcContext ctx(carnicer_gasca(n, 5));
    EXPECT_EQ(ctx.size(), choose2(n + 1) + n + 1);
    EXPECT_EQ(ctx.maximal_ids().size(), n + 1);
    EXPECT_EQ(count_class(ctx, NodeClass::OneM), n + 1);
    EXPECT_TRUE(ctx.is_gc());
  }
}

TEST(DefectTwo, Counts) {
  const GcContext ctx(defect_two(4, 8));
  EXPECT_EQ(count_class(ctx, NodeClass::TwoM), 6u);
  EXPECT_EQ(count_class(ctx, NodeClass::OneM), 8u);
  EXPECT_EQ(count_class(ctx, NodeClass::ZeroM), 1u);
  EXPECT_EQ(ctx.defect(), 2u);
  const GcContext small(defect_two(3, 8));
  EXPECT_EQ(count_class(small, NodeClass::TwoM), 3u);
  EXPECT_EQ(count_class(small, NodeClass::OneM), 6u);
  EXPECT_EQ(count_class(small, NodeClass::ZeroM), 1u);
}

TEST(DefectTwo, CharacterizationHolds) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FamilyInstance inst = generate(Family::DefectTwo, 5, seed);
    const auto& spec = std::get<Defect2Spec>(inst.provenance);
    const GcContext ctx(inst.nodes);
    ASSERT_TRUE(ctx.nodes().contains(spec.center));
    EXPECT_EQ(ctx.node_class(*ctx.nodes().index_of(spec.center)), NodeClass::ZeroM);
    for (const Line& o : spec.o_lines) {
      EXPECT_TRUE(incident(o, spec.center));
      EXPECT_LT(popcount(ctx.arrangement().nodes_on(o)), 6u);
    }
    for (const Line& l : spec.maximal_seed_lines.lines) {
      unsigned kept = 0;
      for (const Line& o : spec.o_lines) kept += ctx.nodes().contains(*intersect(l, o));
      EXPECT_EQ(kept, 2u);
    }
  }
}

TEST(DefectThree, Counts) {
  const GcContext ctx(defect_three(5, 1));
  EXPECT_EQ(ctx.size(), 21u);
  EXPECT_EQ(ctx.maximal_ids().size(), 4u);
  EXPECT_EQ(ctx.defect(), 3u);
  EXPECT_EQ(defect_three(4, 1).size(), choose2(3) + 9 + 3);
}

TEST(DefectThree, CharacterizationHolds) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FamilyInstance inst = generate(Family::DefectThree, 5, seed);
    const auto& spec = std::get<Defect3Spec>(inst.provenance);
    const auto& lam = spec.maximal_seed_lines.lines;
    const auto& D = spec.d_nodes;
    const auto& O = spec.o_nodes;
    const GcContext ctx(inst.nodes);
    EXPECT_FALSE(collinear(O[0], O[1], O[2]));
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      EXPECT_TRUE(incident(lam[i], D[i]));
      EXPECT_TRUE(collinear(O[i], D[j], D[k]));
      const Line oo = line_through(O[j], O[k]);
      EXPECT_FALSE(ctx.nodes().contains(*intersect(oo, lam[i])));
      EXPECT_EQ(popcount(ctx.arrangement().nodes_on(oo)), 5u);
      for (const Line& l : lam) EXPECT_FALSE(incident(l, O[i]));
    }
  }
}

TEST(Principal, IdentityAndShear) {
  const NodeSet pl5 = principal_lattice(5);
  EXPECT_EQ(pl5.size(), 21u);
  EXPECT_TRUE(pl5.contains({5, 0}));
  EXPECT_EQ(principal_lattice(1), NodeSet(1, {{0, 0}, {1, 0}, {0, 1}}));
  const GcContext sheared(principal_lattice(3, AffineMap{1, 1, 0, 1, 0, 0}));
  EXPECT_EQ(sheared.defect(), 2u);
  EXPECT_EQ(sheared.maximal_ids().size(), 3u);
  EXPECT_TRUE(sheared.nodes().contains({3, 1}));
}

TEST(Principal, SingularTransformRejected) {
  try {
    principal_lattice(3, AffineMap{1, 2, 2, 4, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularTransform);
  }
}

TEST(Principal, FamiliesFollowTheTransform) {
  const FamilyInstance inst = generate(Family::Principal, 4, 3);
  const auto& spec = std::get<GplSpec>(inst.provenance);
  const GcContext ctx(inst.nodes);
  for (const auto& fam : spec.families) {
    ASSERT_EQ(fam.size(), 5u);
    for (unsigned s = 0; s <= 4; ++s)
      EXPECT_EQ(popcount(ctx.arrangement().nodes_on(fam[s])), 5u - s);
  }
}

TEST(Generate, AdvertisedDefects) {
  for (unsigned n = 3; n <= 5; ++n) {
    for (std::uint64_t seed : {0u, 1u}) {
      EXPECT_EQ(GcContext(generate(Family::ChungYao, n, seed).nodes).defect(), 0u);
      EXPECT_EQ(GcContext(generate(Family::CarnicerGasca, n, seed).nodes).defect(), 1u);
      EXPECT_EQ(GcContext(generate(Family::DefectTwo, n, seed).nodes).defect(), 2u);
      if (n >= 4) EXPECT_EQ(GcContext(generate(Family::DefectThree, n, seed).nodes).defect(), 3u);
      EXPECT_EQ(GcContext(generate(Family::Principal, n, seed).nodes).defect(), n - 1);
    }
  }
}

TEST(Generate, Deterministic) {
  for (Family f : {Family::ChungYao, Family::CarnicerGasca, Family::DefectTwo, Family::DefectThree, Family::Principal}) {
    EXPECT_EQ(generate(f, 4, 17).nodes, generate(f, 4, 17).nodes);
  }
  EXPECT_NE(chung_yao(4, 1), chung_yao(4, 2));
}

TEST(Generate, DegreeBelowMinimumRejected) {
  EXPECT_THROW(generate(Family::DefectThree, 3, 0), Error);
  EXPECT_THROW(generate(Family::DefectTwo, 2, 0), Error);
}

TEST(FromSpec, RebuildsSameSet) {
  const FamilyInstance d3 = generate(Family::DefectThree, 5, 4);
  EXPECT_EQ(defect_three_from_spec(5, std::get<Defect3Spec>(d3.provenance)).nodes, d3.nodes);
  const FamilyInstance d2 = generate(Family::DefectTwo, 4, 4);
  EXPECT_EQ(defect_two_from_spec(4, std::get<Defect2Spec>(d2.provenance)).nodes, d2.nodes);
}

TEST(FromSpec, ViolationDetected) {
  FamilyInstance d3 = generate(Family::DefectThree, 5, 2);
  auto spec = std::get<Defect3Spec>(d3.provenance);
  spec.o_nodes[0] = spec.o_nodes[1];
  EXPECT_THROW(defect_three_from_spec(5, spec), Error);
}

TEST(ClassLines, Sizes) {
  const FamilyInstance d3 = generate(Family::DefectThree, 5, 1);
  EXPECT_EQ(class_lines(d3, "maximal").size(), 4u);
  EXPECT_EQ(class_lines(d3, "oo-line").size(), 3u);
  EXPECT_EQ(class_lines(d3, "dd-line").size(), 3u);
  EXPECT_EQ(class_lines(d3, "l-ij").size(), 3u);
  EXPECT_EQ(class_lines(d3, "l-i-j").size(), 3u);
  EXPECT_EQ(class_lines(generate(Family::Principal, 3, 0), "gpl-1").size(), 3u);
}
