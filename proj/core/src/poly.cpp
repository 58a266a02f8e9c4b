#include "gcn/poly.hpp"

#include <algorithm>
#include <sstream>

#include "gcn/error.hpp"

namespace gcn {
namespace {

using Univariate = std::vector<Rat>;

void trim(Univariate& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

// Row of the collocation matrix: x^i y^j in graded order.
std::vector<Rat> monomial_row(unsigned n, const Point& p) {
  std::vector<Rat> xp(n + 1), yp(n + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (unsigned e = 1; e <= n; ++e) {
    xp[e] = xp[e - 1] * p.x;
    yp[e] = yp[e - 1] * p.y;
  }
  std::vector<Rat> row(node_count_for_degree(n));
  for (unsigned d = 0; d <= n; ++d) {
    for (unsigned i = 0; i <= d; ++i) row[monomial_index(i, d - i)] = xp[i] * yp[d - i];
  }
  return row;
}

// Integer collocation matrix with each row multiplied by the lcm of its
// denominators; the scales are returned alongside.
struct ScaledMatrix {
  std::vector<std::vector<Integer>> rows;
  std::vector<Integer> scales;
};

ScaledMatrix scaled_collocation(unsigned n, std::span<const Point> nodes, std::size_t extra_columns) {
  const std::size_t N = node_count_for_degree(n);
  ScaledMatrix m;
  m.rows.resize(N);
  m.scales.resize(N);
  for (std::size_t r = 0; r < N; ++r) {
    auto row = monomial_row(n, nodes[r]);
    Integer scale = 1;
    for (const Rat& v : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    m.rows[r].resize(N + extra_columns);
    for (std::size_t c = 0; c < N; ++c) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), scale.get_mpz_t(), row[c].get_den_mpz_t());
      m.rows[r][c] = row[c].get_num() * q;
    }
    m.scales[r] = scale;
  }
  return m;
}

// In-place Bareiss forward elimination over the first `pivot_columns`
// columns; every column of the rows is updated. Returns the row-swap sign,
// or 0 when a pivot column is entirely zero.
int bareiss_forward(std::vector<std::vector<Integer>>& a, std::size_t pivot_columns) {
  const std::size_t rows = a.size();
  int sign = 1;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k < pivot_columns; ++k) {
    std::size_t p = k;
    while (p < rows && a[p][k] == 0) ++p;
    if (p == rows) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    const std::size_t width = a[k].size();
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        // a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        mpz_mul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_mul(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), a[k][k].get_mpz_t());
        mpz_sub(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), t.get_mpz_t());
        if (prev != 1) mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign;
}

// Quotient of p by (lead * v + rest(w)) where v is the "main" variable and
// rest is linear in the other variable w: coefficient lists are indexed
// [power of v][power of w].
BivarPoly divide_linear(const BivarPoly& p, const Line& l, bool main_is_y) {
  const unsigned n = p.degree_bound();
  const Rat lead = main_is_y ? Rat(l.b()) : Rat(l.a());
  const Rat slope = main_is_y ? Rat(l.a()) : Rat(l.b());  // coefficient of w
  const Rat offset(l.c());
  auto coeff = [&](unsigned v, unsigned w) -> const Rat& {
    return main_is_y ? p.coeff(w, v) : p.coeff(v, w);
  };
  // P[v] is a univariate polynomial in w of degree <= n - v.
  std::vector<Univariate> P(n + 1), Q(n);
  for (unsigned v = 0; v <= n; ++v) {
    P[v].resize(n - v + 1);
    for (unsigned w = 0; w + v <= n; ++w) P[v][w] = coeff(v, w);
  }
  // P[v] = lead * Q[v-1] + m * Q[v], m(w) = slope * w + offset.
  auto times_m = [&](const Univariate& q) {
    Univariate out(q.size() + 1);
    for (std::size_t w = 0; w < q.size(); ++w) {
      out[w] += offset * q[w];
      out[w + 1] += slope * q[w];
    }
    return out;
  };
  for (unsigned v = n; v >= 1; --v) {
    Univariate rhs = P[v];
    if (v < n) {
      Univariate mq = times_m(Q[v]);
      rhs.resize(std::max(rhs.size(), mq.size()));
      for (std::size_t w = 0; w < mq.size(); ++w) rhs[w] -= mq[w];
    }
    for (auto& c : rhs) c /= lead;
    trim(rhs);
    if (rhs.size() > n - v + 1) throw Error(ErrorKind::NotDivisible, "quotient exceeds degree bound");
    Q[v - 1] = std::move(rhs);
  }
  Univariate rem = P[0];
  if (n >= 1) {
    Univariate mq = times_m(Q[0]);
    rem.resize(std::max(rem.size(), mq.size()));
    for (std::size_t w = 0; w < mq.size(); ++w) rem[w] -= mq[w];
  }
  trim(rem);
  if (!rem.empty()) {
    std::ostringstream os;
    os << "line " << l << " does not divide the polynomial";
    throw Error(ErrorKind::NotDivisible, os.str());
  }
  BivarPoly q(n - 1);
  for (unsigned v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < Q[v].size(); ++w) {
      if (Q[v][w] == 0) continue;
      if (v + w > n - 1) throw Error(ErrorKind::NotDivisible, "quotient exceeds degree bound");
      if (main_is_y) {
        q.set_coeff(static_cast<unsigned>(w), v, Q[v][w]);
      } else {
        q.set_coeff(v, static_cast<unsigned>(w), Q[v][w]);
      }
    }
  }
  return q;
}

}  // namespace

std::pair<unsigned, unsigned> monomial_exponents(std::size_t index) {
  unsigned d = 0;
  while ((d + 1) * (d + 2) / 2 <= index) ++d;
  const unsigned i = static_cast<unsigned>(index - d * (d + 1) / 2);
  return {i, d - i};
}

BivarPoly::BivarPoly(unsigned degree_bound)
    : degree_bound_(degree_bound), coeffs_(node_count_for_degree(degree_bound)) {}

BivarPoly BivarPoly::constant(const Rat& value, unsigned degree_bound) {
  BivarPoly p(degree_bound);
  p.coeffs_[0] = value;
  return p;
}

BivarPoly BivarPoly::from_line(const Line& l) {
  BivarPoly p(1);
  p.set_coeff(0, 0, Rat(l.c()));
  p.set_coeff(0, 1, Rat(l.b()));
  p.set_coeff(1, 0, Rat(l.a()));
  return p;
}

const Rat& BivarPoly::coeff(unsigned i, unsigned j) const {
  static const Rat zero(0);
  if (i + j > degree_bound_) return zero;
  return coeffs_[monomial_index(i, j)];
}

void BivarPoly::set_coeff(unsigned i, unsigned j, Rat value) {
  if (i + j > degree_bound_) {
    throw Error(ErrorKind::DegreeOutOfRange, "monomial outside the degree bound");
  }
  coeffs_[monomial_index(i, j)] = std::move(value);
}

bool BivarPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

int BivarPoly::effective_degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != 0) {
      auto [i, j] = monomial_exponents(k);
      return static_cast<int>(i + j);
    }
  }
  return -1;
}

BivarPoly BivarPoly::with_degree_bound(unsigned bound) const {
  if (effective_degree() > static_cast<int>(bound)) {
    throw Error(ErrorKind::SizeMismatch, "nonzero terms above the requested degree bound");
  }
  BivarPoly out(bound);
  const std::size_t n = std::min(out.coeffs_.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, out.coeffs_.begin());
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  if (other.degree_bound_ > degree_bound_) *this = with_degree_bound(other.degree_bound_);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  if (other.degree_bound_ > degree_bound_) *this = with_degree_bound(other.degree_bound_);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
  const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
  const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
  for (std::size_t k = 0; k < big.size(); ++k) {
    if (k < small.size() ? big[k] != small[k] : big[k] != 0) return false;
  }
  return true;
}

Rat eval(const BivarPoly& p, const Point& pt) {
  const unsigned n = p.degree_bound();
  // Horner in y inside Horner in x over the triangular coefficient layout.
  Rat result = 0;
  Rat inner;
  for (unsigned i = n + 1; i-- > 0;) {
    inner = 0;
    for (unsigned j = n - i + 1; j-- > 0;) {
      inner *= pt.y;
      inner += p.coeff(i, j);
    }
    result *= pt.x;
    result += inner;
  }
  return result;
}

BivarPoly mul_line(const BivarPoly& p, const Line& l) {
  const unsigned n = p.degree_bound();
  BivarPoly out(n + 1);
  std::vector<Rat> acc(node_count_for_degree(n + 1));
  const Rat a(l.a()), b(l.b()), c(l.c());
  for (unsigned d = 0; d <= n; ++d) {
    for (unsigned i = 0; i <= d; ++i) {
      const Rat& v = p.coeff(i, d - i);
      if (v == 0) continue;
      const unsigned j = d - i;
      acc[monomial_index(i + 1, j)] += v * a;
      acc[monomial_index(i, j + 1)] += v * b;
      acc[monomial_index(i, j)] += v * c;
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) {
    auto [i, j] = monomial_exponents(k);
    out.set_coeff(i, j, std::move(acc[k]));
  }
  return out;
}

BivarPoly product_of_lines(std::span<const Line> lines, const Rat& scalar) {
  BivarPoly p = BivarPoly::constant(scalar);
  for (const auto& l : lines) p = mul_line(p, l);
  return p;
}

std::vector<Rat> restrict_to_line(const BivarPoly& p, const Line& l) {
  const unsigned n = p.degree_bound();
  Univariate out(n + 1);
  if (l.b() != 0) {
    // x = t, y = alpha t + beta
    const Rat alpha = -Rat(l.a()) / Rat(l.b());
    const Rat beta = -Rat(l.c()) / Rat(l.b());
    std::vector<Univariate> ypow(n + 1);
    ypow[0] = {Rat(1)};
    for (unsigned j = 1; j <= n; ++j) {
      ypow[j].assign(j + 1, Rat(0));
      for (std::size_t e = 0; e < ypow[j - 1].size(); ++e) {
        ypow[j][e] += beta * ypow[j - 1][e];
        ypow[j][e + 1] += alpha * ypow[j - 1][e];
      }
    }
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; i + j <= n; ++j) {
        const Rat& c = p.coeff(i, j);
        if (c == 0) continue;
        for (std::size_t e = 0; e < ypow[j].size(); ++e) out[i + e] += c * ypow[j][e];
      }
    }
  } else {
    // x = x0, y = t
    const Rat x0 = -Rat(l.c()) / Rat(l.a());
    std::vector<Rat> xpow(n + 1);
    xpow[0] = 1;
    for (unsigned i = 1; i <= n; ++i) xpow[i] = xpow[i - 1] * x0;
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; i + j <= n; ++j) out[j] += p.coeff(i, j) * xpow[i];
    }
  }
  trim(out);
  return out;
}

bool vanishes_on_line(const BivarPoly& p, const Line& l, std::span<const Point> known_zeros) {
  const std::size_t needed = p.degree_bound() + 1;
  std::size_t zeros = known_zeros.size();
  for (long t = 0; zeros < needed; ++t) {
    Point pt = point_on_line(l, Rat(t));
    if (std::find(known_zeros.begin(), known_zeros.end(), pt) != known_zeros.end()) continue;
    if (eval(p, pt) != 0) return false;
    ++zeros;
  }
  return true;
}

BivarPoly divide_by_line(const BivarPoly& p, const Line& l) {
  if (p.degree_bound() == 0) {
    if (p.is_zero()) return BivarPoly(0);
    throw Error(ErrorKind::NotDivisible, "nonzero constant");
  }
  return divide_linear(p, l, l.b() != 0);
}

Rat collocation_determinant(unsigned n, std::span<const Point> nodes) {
  const std::size_t N = node_count_for_degree(n);
  if (nodes.size() != N) {
    throw Error(ErrorKind::SizeMismatch, "expected " + std::to_string(N) + " nodes, got " +
                                             std::to_string(nodes.size()));
  }
  ScaledMatrix m = scaled_collocation(n, nodes, 0);
  int sign = bareiss_forward(m.rows, N);
  if (sign == 0) return Rat(0);
  Integer scale = 1;
  for (const auto& s : m.scales) scale *= s;
  return make_rat(m.rows[N - 1][N - 1] * sign, scale);
}

Rat correctness_determinant(const NodeSet& X) { return collocation_determinant(X.degree(), X.nodes()); }

LagrangeBasis lagrange_basis(unsigned n, std::span<const Point> nodes) {
  const std::size_t N = node_count_for_degree(n);
  if (nodes.size() != N) {
    throw Error(ErrorKind::SizeMismatch, "expected " + std::to_string(N) + " nodes, got " +
                                             std::to_string(nodes.size()));
  }
  // Solve V' Y = diag(scales) with V' the row-scaled collocation matrix, so
  // that Y = V^{-1}; column r of Y holds the fundamental polynomial of node r.
  ScaledMatrix m = scaled_collocation(n, nodes, N);
  for (std::size_t r = 0; r < N; ++r) m.rows[r][N + r] = m.scales[r];
  int sign = bareiss_forward(m.rows, N);
  if (sign == 0) throw Error(ErrorKind::NotCorrect, "collocation matrix is singular");

  const auto& U = m.rows;
  const Integer& D = U[N - 1][N - 1];
  Integer scale = 1;
  for (const auto& s : m.scales) scale *= s;

  LagrangeBasis out;
  out.determinant = make_rat(D * sign, scale);
  out.fundamentals.assign(N, BivarPoly(n));
  // D * x is integral (adjugate), so back substitution stays in Z.
  std::vector<Integer> y(N);
  Integer acc;
  for (std::size_t col = 0; col < N; ++col) {
    for (std::size_t k = N; k-- > 0;) {
      acc = D * U[k][N + col];
      for (std::size_t j = k + 1; j < N; ++j) {
        if (U[k][j] != 0 && y[j] != 0) acc -= U[k][j] * y[j];
      }
      mpz_divexact(y[k].get_mpz_t(), acc.get_mpz_t(), U[k][k].get_mpz_t());
    }
    BivarPoly& p = out.fundamentals[col];
    for (std::size_t k = 0; k < N; ++k) {
      auto [i, j] = monomial_exponents(k);
      p.set_coeff(i, j, make_rat(y[k], D));
    }
  }
  return out;
}

BivarPoly fundamental_polynomial(const NodeSet& X, const Point& A) {
  auto idx = X.index_of(A);
  if (!idx) {
    std::ostringstream os;
    os << A << " is not a node of the set";
    throw Error(ErrorKind::NodeAbsent, os.str());
  }
  return lagrange_basis(X.degree(), X.nodes()).fundamentals[*idx];
}

}  // namespace gcn
