#include <gtest/gtest.h>

#include "gcn/error.hpp"
#include "gcn/geom.hpp"

using namespace gcn;

namespace {

Point pt(long xn, long xd, long yn, long yd) { return {make_rat(xn, xd), make_rat(yn, yd)}; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidProvenance;
}

}  // namespace

TEST(Rat, RoundTripsThroughText) {
  EXPECT_EQ(to_string(make_rat(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rat(8, 4)), "2");
  EXPECT_EQ(parse_rat("-3/2"), make_rat(-3, 2));
  EXPECT_EQ(parse_rat("10/5"), Rat(2));
  EXPECT_EQ(parse_rat("7"), Rat(7));
}

TEST(Rat, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "1//2"})
    EXPECT_EQ(kind_of([&] { parse_rat(bad); }), ErrorKind::MalformedNumber) << bad;
}

TEST(Line, Canonicalizes) {
  const Line l(-4, 2, 6);
  EXPECT_EQ(l.a(), 2);
  EXPECT_EQ(l.b(), -1);
  EXPECT_EQ(l.c(), -3);
  EXPECT_EQ(Line(0, -3, 6), Line(0, 1, -2));
  EXPECT_EQ(kind_of([] { Line(0, 0, 1); }), ErrorKind::DegenerateLine);
}

TEST(Line, FromRationalClearsDenominators) {
  EXPECT_EQ(Line::from_rational(make_rat(1, 2), make_rat(3, 4), Rat(-1)), Line(2, 3, -4));
}

TEST(LineThrough, Examples) {
  EXPECT_EQ(line_through({0, 0}, {1, 1}), Line(1, -1, 0));
  EXPECT_EQ(line_through({0, 0}, {0, 5}), Line(1, 0, 0));
  EXPECT_EQ(line_through(pt(1, 2, 0, 1), pt(0, 1, 1, 3)), Line(2, 3, -1));
  EXPECT_EQ(kind_of([] { line_through({3, 4}, {3, 4}); }), ErrorKind::IdenticalPoints);
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(Line(2, 3, -1), Line(1, 0, 0)), pt(0, 1, 1, 3));
  EXPECT_FALSE(intersect(Line(1, 1, 0), Line(1, 1, -1)).has_value());
  EXPECT_FALSE(intersect(Line(1, 1, 0), Line(2, 2, 0)).has_value());
  EXPECT_TRUE(parallel_or_equal(Line(1, 1, 0), Line(1, 1, 5)));
  EXPECT_FALSE(parallel_or_equal(Line(1, 1, 0), Line(1, -1, 5)));
}

TEST(Incident, Examples) {
  EXPECT_TRUE(incident(Line(2, 3, -1), pt(1, 2, 0, 1)));
  EXPECT_FALSE(incident(Line(2, 3, -1), Point(0, 0)));
  EXPECT_EQ(Line(1, 1, -1).evaluate(Point(2, 3)), Rat(4));
}

TEST(Collinear, CoincidentCounts) {
  EXPECT_TRUE(collinear({0, 0}, {1, 1}, {5, 5}));
  EXPECT_TRUE(collinear({0, 0}, {0, 0}, {5, 1}));
  EXPECT_FALSE(collinear({0, 0}, {1, 0}, {0, 1}));
}

TEST(PointOnLine, LiesOnTheLine) {
  for (const Line& l : {Line(2, 3, -1), Line(1, 0, -7), Line(0, 5, 2)}) {
    for (long t : {-3L, 0L, 4L}) EXPECT_TRUE(incident(l, point_on_line(l, Rat(t))));
  }
  EXPECT_EQ(point_on_line(Line(1, 0, -7), Rat(2)), Point(7, 2));
}

TEST(Ordering, LexicographicOnCoefficients) {
  EXPECT_LT(Line(0, 1, 5), Line(1, -1, 0));
  EXPECT_LT(Line(1, -1, 0), Line(1, 0, -3));
  EXPECT_LT(Point(0, 5), Point(1, 0));
  EXPECT_LT(Point(1, 0), Point(1, 1));
}
