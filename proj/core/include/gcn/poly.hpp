#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gcn/geom.hpp"
#include "gcn/node_set.hpp"

namespace gcn {

/// Position of x^i y^j in the graded monomial order: by total degree, then by
/// ascending power of x. So the order starts 1, y, x, y^2, xy, x^2, ...
constexpr std::size_t monomial_index(unsigned i, unsigned j) {
  const std::size_t d = i + j;
  return d * (d + 1) / 2 + i;
}

/// (i, j) exponents of the monomial at a graded-order position.
std::pair<unsigned, unsigned> monomial_exponents(std::size_t index);

/// Element of the space of bivariate polynomials of total degree at most
/// degree_bound(), stored densely in the graded monomial order. The bound is
/// carried explicitly, so a polynomial may have lower effective degree.
class BivarPoly {
 public:
  explicit BivarPoly(unsigned degree_bound = 0);

  static BivarPoly constant(const Rat& value, unsigned degree_bound = 0);
  static BivarPoly from_line(const Line& l);

  unsigned degree_bound() const noexcept { return degree_bound_; }
  const Rat& coeff(unsigned i, unsigned j) const;
  void set_coeff(unsigned i, unsigned j, Rat value);
  std::span<const Rat> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Highest i+j with a nonzero coefficient; -1 for the zero polynomial.
  int effective_degree() const;

  /// Same polynomial stored under a different bound; throws SizeMismatch
  /// when shrinking would drop a nonzero coefficient.
  BivarPoly with_degree_bound(unsigned bound) const;

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const Rat& s);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const Rat& s) { return a *= s; }

  /// Coefficient-wise equality, independent of the stored degree bound.
  friend bool operator==(const BivarPoly& a, const BivarPoly& b);

 private:
  unsigned degree_bound_;
  std::vector<Rat> coeffs_;
};

Rat eval(const BivarPoly& p, const Point& pt);

/// p * (a x + b y + c); the result's bound is degree_bound(p) + 1.
BivarPoly mul_line(const BivarPoly& p, const Line& l);

BivarPoly product_of_lines(std::span<const Line> lines, const Rat& scalar = Rat(1));

/// Coefficients (t^0 first) of t -> p(point_on_line(l, t)), trailing zeros
/// removed; empty exactly when l divides p.
std::vector<Rat> restrict_to_line(const BivarPoly& p, const Line& l);

/// True iff p vanishes identically on l. Evaluates p at degree_bound + 1
/// distinct points of l, stopping at the first nonzero value, and skips the
/// points listed in known_zeros (which must lie on l and be roots of p).
bool vanishes_on_line(const BivarPoly& p, const Line& l, std::span<const Point> known_zeros = {});

/// Exact quotient p / (a x + b y + c); throws NotDivisible when l does not
/// divide p. Requires degree_bound(p) >= 1.
BivarPoly divide_by_line(const BivarPoly& p, const Line& l);

/// Determinant of the collocation matrix (rows: nodes in the given order,
/// columns: monomials in graded order) by fraction-free elimination.
/// Throws SizeMismatch when nodes.size() != C(n+2,2).
Rat collocation_determinant(unsigned n, std::span<const Point> nodes);
Rat correctness_determinant(const NodeSet& X);

/// Inverse of the collocation matrix, read off as one polynomial per node.
struct LagrangeBasis {
  Rat determinant;
  std::vector<BivarPoly> fundamentals;  // parallel to the node order
};

/// Fraction-free forward elimination on the collocation matrix augmented with
/// its row scaling, then exact back substitution for all right-hand sides.
/// Throws NotCorrect when the determinant vanishes.
LagrangeBasis lagrange_basis(unsigned n, std::span<const Point> nodes);

/// Throws NodeAbsent when A is not a node, NotCorrect for singular sets.
BivarPoly fundamental_polynomial(const NodeSet& X, const Point& A);

}  // namespace gcn
