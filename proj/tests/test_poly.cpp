#include <gtest/gtest.h>

#include <vector>

#include "gcn/constructors.hpp"
#include "gcn/error.hpp"
#include "gcn/poly.hpp"

using namespace gcn;

namespace {

BivarPoly poly(unsigned bound, std::initializer_list<std::tuple<unsigned, unsigned, long>> terms) {
  BivarPoly p(bound);
  for (auto [i, j, c] : terms) p.set_coeff(i, j, Rat(c));
  return p;
}

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const std::vector<Point> kTriangle{{0, 0}, {1, 0}, {0, 1}};

}  // namespace

TEST(Monomials, GradedOrder) {
  EXPECT_EQ(monomial_index(0, 0), 0u);
  EXPECT_EQ(monomial_index(0, 1), 1u);
  EXPECT_EQ(monomial_index(1, 0), 2u);
  EXPECT_EQ(monomial_index(0, 2), 3u);
  EXPECT_EQ(monomial_index(2, 0), 5u);
  for (std::size_t k = 0; k < 45; ++k) {
    auto [i, j] = monomial_exponents(k);
    EXPECT_EQ(monomial_index(i, j), k);
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(poly(1, {{1, 0, 1}, {0, 1, 1}, {0, 0, -3}}), Point(1, 2)), Rat(0));
  EXPECT_EQ(eval(BivarPoly::constant(Rat(1)), Point(make_rat(7, 3), Rat(-9))), Rat(1));
  // (x-1)(y-2) = xy - 2x - y + 2
  EXPECT_EQ(eval(poly(2, {{1, 1, 1}, {1, 0, -2}, {0, 1, -1}, {0, 0, 2}}), Point(3, 5)), Rat(6));
}

TEST(MulLine, Examples) {
  EXPECT_EQ(mul_line(BivarPoly::constant(Rat(1)), Line(1, 0, 0)), poly(1, {{1, 0, 1}}));
  EXPECT_EQ(mul_line(poly(1, {{1, 0, 1}}), Line(0, 1, 0)), poly(2, {{1, 1, 1}}));
  const BivarPoly got = mul_line(poly(1, {{1, 0, 1}, {0, 1, 1}}), Line(1, 1, -1));
  EXPECT_EQ(got, poly(2, {{2, 0, 1}, {1, 1, 2}, {0, 2, 1}, {1, 0, -1}, {0, 1, -1}}));
  EXPECT_EQ(got.degree_bound(), 2u);
}

TEST(RestrictToLine, Examples) {
  EXPECT_TRUE(restrict_to_line(poly(1, {{1, 0, 1}, {0, 1, -1}}), Line(1, -1, 0)).empty());
  EXPECT_EQ(restrict_to_line(poly(1, {{1, 0, 1}, {0, 1, 1}}), Line(1, -1, 0)), rats({0, 2}));
  EXPECT_EQ(restrict_to_line(poly(2, {{2, 0, 1}, {0, 2, 1}, {0, 0, -1}}), Line(0, 1, 0)), rats({-1, 0, 1}));
}

TEST(DivideByLine, Examples) {
  EXPECT_EQ(divide_by_line(poly(2, {{2, 0, 1}, {0, 2, -1}}), Line(1, -1, 0)), poly(1, {{1, 0, 1}, {0, 1, 1}}));
  try {
    divide_by_line(poly(1, {{1, 0, 1}}), Line(0, 1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
  }
  const Line q(1, 1, -3);
  const BivarPoly p = mul_line(BivarPoly::from_line(q), Line(2, -1, 1));
  EXPECT_EQ(divide_by_line(p, Line(2, -1, 1)), BivarPoly::from_line(q));
}

TEST(DegreeBound, CarriedExplicitly) {
  const BivarPoly p = poly(3, {{1, 0, 2}});
  EXPECT_EQ(p.degree_bound(), 3u);
  EXPECT_EQ(p.effective_degree(), 1);
  EXPECT_EQ(BivarPoly(2).effective_degree(), -1);
  EXPECT_EQ(p.with_degree_bound(1), p);
  EXPECT_THROW(p.with_degree_bound(0), Error);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(correctness_determinant(NodeSet(1, kTriangle)), Rat(1));
  // Rows in the given order against the columns 1, y, x.
  EXPECT_EQ(collocation_determinant(1, kTriangle), Rat(-1));
  const std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_EQ(collocation_determinant(1, line), Rat(0));
  EXPECT_NE(correctness_determinant(chung_yao(3, 11)), Rat(0));
  try {
    collocation_determinant(2, kTriangle);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeMismatch);
  }
}

TEST(Determinant, StableAcrossCalls) {
  const NodeSet X = carnicer_gasca(4, 3);
  EXPECT_EQ(correctness_determinant(X), correctness_determinant(X));
}

TEST(Fundamental, UnitTriangle) {
  const NodeSet X(1, kTriangle);
  EXPECT_EQ(fundamental_polynomial(X, {1, 0}), poly(1, {{1, 0, 1}}));
  EXPECT_EQ(fundamental_polynomial(X, {0, 0}), poly(1, {{0, 0, 1}, {1, 0, -1}, {0, 1, -1}}));
  try {
    fundamental_polynomial(X, {5, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NodeAbsent);
  }
}

TEST(Fundamental, PrincipalLatticeOfDegreeTwo) {
  const NodeSet X = principal_lattice(2);
  const std::vector<Line> lines{Line(1, 1, -2), Line(1, 1, -1)};
  const BivarPoly expected = product_of_lines(lines, make_rat(1, 2));
  EXPECT_EQ(fundamental_polynomial(X, {0, 0}), expected);
  for (const Point& B : X.nodes()) EXPECT_EQ(eval(expected, B), Rat(B == Point(0, 0) ? 1 : 0));
}

TEST(Fundamental, SingularSetRejected) {
  // Six points on y = x^2: no three collinear, yet a conic passes through all.
  const NodeSet X(2, {{0, 0}, {1, 1}, {2, 4}, {3, 9}, {-1, 1}, {-2, 4}});
  EXPECT_EQ(correctness_determinant(X), Rat(0));
  try {
    fundamental_polynomial(X, {0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCorrect);
  }
}

TEST(LagrangeBasis, DeltaAndPartitionOfUnity) {
  const NodeSet X = defect_two(4, 5);
  const LagrangeBasis basis = lagrange_basis(4, X.nodes());
  BivarPoly sum(4);
  for (std::size_t a = 0; a < X.size(); ++a) {
    for (std::size_t b = 0; b < X.size(); ++b) EXPECT_EQ(eval(basis.fundamentals[a], X[b]), Rat(a == b ? 1 : 0));
    sum += basis.fundamentals[a];
  }
  EXPECT_EQ(sum, BivarPoly::constant(Rat(1)));
}

TEST(VanishesOnLine, AgreesWithRestriction) {
  const BivarPoly p = product_of_lines(std::vector<Line>{Line(1, 2, -3), Line(0, 1, 4)}, Rat(5));
  EXPECT_TRUE(vanishes_on_line(p, Line(1, 2, -3)));
  EXPECT_TRUE(vanishes_on_line(p, Line(0, 1, 4)));
  EXPECT_FALSE(vanishes_on_line(p, Line(1, 0, 0)));
  const Point z(3, 0);
  EXPECT_TRUE(vanishes_on_line(p, Line(1, 2, -3), std::vector<Point>{z}));
}
