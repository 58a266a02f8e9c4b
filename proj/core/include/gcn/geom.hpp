#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace gcn {

using Integer = mpz_class;

/// Exact rational scalar. gmpxx keeps every arithmetic result in lowest
/// terms with a positive denominator; values built from a raw numerator and
/// denominator must go through make_rat().
using Rat = mpq_class;

Rat make_rat(const Integer& num, const Integer& den);
Rat make_rat(long num, long den = 1);

/// "num/den", with "/den" omitted when the denominator is 1.
std::string to_string(const Rat& value);
Rat parse_rat(std::string_view text);

struct Point {
  Rat x;
  Rat y;

  Point() = default;
  Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
  friend std::strong_ordering operator<=>(const Point& p, const Point& q);
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// The locus a*x + b*y + c = 0 with integer coefficients in canonical form:
/// gcd(|a|,|b|,|c|) = 1 and the first nonzero coefficient positive. Two Line
/// values compare equal iff they denote the same locus.
class Line {
 public:
  /// Canonicalizes; throws Error(DegenerateLine) when a = b = 0.
  Line(Integer a, Integer b, Integer c);
  Line(long a, long b, long c) : Line(Integer(a), Integer(b), Integer(c)) {}

  /// Clears denominators of a rational triple before canonicalizing.
  static Line from_rational(const Rat& a, const Rat& b, const Rat& c);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }

  /// a*x + b*y + c at p.
  Rat evaluate(const Point& p) const;

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }
  /// Lexicographic on (a, b, c).
  friend std::strong_ordering operator<=>(const Line& l, const Line& m);

 private:
  Integer a_;
  Integer b_;
  Integer c_;
};

std::ostream& operator<<(std::ostream& os, const Line& l);

/// Throws Error(IdenticalPoints) when p == q.
Line line_through(const Point& p, const Point& q);

/// Unique intersection point, or nullopt when the lines are parallel or equal.
std::optional<Point> intersect(const Line& l1, const Line& l2);

bool incident(const Line& l, const Point& p);

bool parallel_or_equal(const Line& l1, const Line& l2);

/// Three points on a common line (coincident points count as collinear).
bool collinear(const Point& p, const Point& q, const Point& r);

/// Canonical rational parametrization of a line: (t, -(a t + c)/b) when
/// b != 0, otherwise (-c/a, t).
Point point_on_line(const Line& l, const Rat& t);

struct LineHash {
  std::size_t operator()(const Line& l) const noexcept;
};

}  // namespace gcn
