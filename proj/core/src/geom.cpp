#include "gcn/geom.hpp"

#include <functional>

#include "gcn/error.hpp"

namespace gcn {
namespace {

std::strong_ordering compare(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare(const Rat& a, const Rat& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::MalformedNumber, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Integer(num), Integer(den)); }

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  Integer num;
  Integer den = 1;
  auto slash = text.find('/');
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    ok = parse_integer(text.substr(slash + 1), den) && den > 0;
  }
  if (!ok) throw Error(ErrorKind::MalformedNumber, "not a rational: '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::strong_ordering operator<=>(const Point& p, const Point& q) {
  if (auto c = compare(p.x, q.x); c != 0) return c;
  return compare(p.y, q.y);
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
}

Line::Line(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == 0 && b_ == 0) throw Error(ErrorKind::DegenerateLine, "a = b = 0");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (a_ < 0 || (a_ == 0 && b_ < 0)) g = -g;
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
}

Line Line::from_rational(const Rat& a, const Rat& b, const Rat& c) {
  Integer m = lcm_of(lcm_of(a.get_den(), b.get_den()), c.get_den());
  Rat sa = a * m, sb = b * m, sc = c * m;
  return Line(sa.get_num(), sb.get_num(), sc.get_num());
}

Rat Line::evaluate(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }

std::strong_ordering operator<=>(const Line& l, const Line& m) {
  if (auto c = compare(l.a_, m.a_); c != 0) return c;
  if (auto c = compare(l.b_, m.b_); c != 0) return c;
  return compare(l.c_, m.c_);
}

std::ostream& operator<<(std::ostream& os, const Line& l) {
  return os << '[' << l.a() << ',' << l.b() << ',' << l.c() << ']';
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw Error(ErrorKind::IdenticalPoints, "line through identical points");
  Rat a = p.y - q.y;
  Rat b = q.x - p.x;
  Rat c = p.x * q.y - q.x * p.y;
  return Line::from_rational(a, b, c);
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  Integer det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) return std::nullopt;
  Integer xn = l1.b() * l2.c() - l2.b() * l1.c();
  Integer yn = l2.a() * l1.c() - l1.a() * l2.c();
  return Point(make_rat(xn, det), make_rat(yn, det));
}

bool incident(const Line& l, const Point& p) {
  // Cross-multiplied form avoids building an intermediate rational sum.
  const Integer& xd = p.x.get_den();
  const Integer& yd = p.y.get_den();
  Integer s = l.a() * p.x.get_num() * yd + l.b() * p.y.get_num() * xd + l.c() * xd * yd;
  return s == 0;
}

bool parallel_or_equal(const Line& l1, const Line& l2) {
  return l1.a() * l2.b() == l2.a() * l1.b();
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

Point point_on_line(const Line& l, const Rat& t) {
  if (l.b() != 0) {
    Rat y = -(l.a() * t + l.c()) / Rat(l.b());
    return Point(t, y);
  }
  return Point(Rat(-l.c()) / Rat(l.a()), t);
}

std::size_t LineHash::operator()(const Line& l) const noexcept {
  auto h = [](const Integer& v) {
    std::size_t limb = mpz_size(v.get_mpz_t()) ? mpz_getlimbn(v.get_mpz_t(), 0) : 0;
    return std::hash<std::size_t>{}(limb) ^ static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 1);
  };
  std::size_t seed = h(l.a());
  seed ^= h(l.b()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  seed ^= h(l.c()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

}  // namespace gcn
