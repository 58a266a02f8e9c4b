#include "gcn/constructors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gcn/error.hpp"
#include "gcn/gcset.hpp"

namespace gcn {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

namespace {

constexpr std::array<std::string_view, 5> kFamilyNames{"chung-yao", "carnicer-gasca", "defect-2", "defect-3",
                                                        "principal"};

Line random_line(Rng& rng, long bound) {
  for (;;) {
    long a = rng.uniform(-bound, bound);
    long b = rng.uniform(-bound, bound);
    long c = rng.uniform(-bound, bound);
    if (a != 0 || b != 0) return Line(a, b, c);
  }
}

Rat random_rat(Rng& rng, long bound) { return make_rat(rng.uniform(-bound, bound), rng.uniform(1, bound)); }

Point random_point(Rng& rng, long bound) { return Point(random_rat(rng, bound), random_rat(rng, bound)); }

Point random_point_on(Rng& rng, const Line& l, long bound) { return point_on_line(l, random_rat(rng, bound)); }

bool on_any(const std::vector<Line>& lines, const Point& p) {
  return std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return incident(l, p); });
}

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorKind::CharacterizationViolated, what); }

Point meet(const Line& a, const Line& b, const char* what) {
  auto p = intersect(a, b);
  if (!p) violated(std::string(what) + " lines do not meet in a point");
  return *p;
}

std::vector<Point> pairwise_intersections(const std::vector<Line>& lines) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) out.push_back(meet(lines[i], lines[j], "seed"));
  }
  return out;
}

void check_general_position(const std::vector<Line>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto p = intersect(lines[i], lines[j]);
      if (!p) violated("seed lines are not in general position");
      for (std::size_t k = j + 1; k < lines.size(); ++k) {
        if (incident(lines[k], *p)) violated("three seed lines are concurrent");
      }
    }
  }
}

NodeSet make_nodes(unsigned n, std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) violated("construction produced coincident nodes");
  try {
    return NodeSet(n, std::move(pts));
  } catch (const Error& e) {
    violated(e.what());
  }
}

void expect_maximal(const GcContext& ctx, const std::vector<Line>& expected) {
  auto found = ctx.maximal_lines();
  auto want = expected;
  std::sort(want.begin(), want.end());
  if (found != want) {
    violated("maximal lines are " + std::to_string(found.size()) + ", expected exactly the " +
             std::to_string(want.size()) + " seed lines");
  }
}

void expect_correct(const GcContext& ctx) {
  if (!ctx.n_correct()) violated("node set is not n-correct");
}

unsigned count_on(const NodeSet& X, const Line& l) {
  unsigned c = 0;
  for (const auto& p : X.nodes()) c += incident(l, p) ? 1 : 0;
  return c;
}

void need_degree(Family f, unsigned n) {
  if (n < family_min_degree(f) || n > kMaxDegree) {
    throw Error(ErrorKind::DegreeOutOfRange, std::string(family_name(f)) + " needs degree in [" +
                                                 std::to_string(family_min_degree(f)) + ", " +
                                                 std::to_string(kMaxDegree) + "]");
  }
}

template <typename Attempt>
FamilyInstance retry(Family f, unsigned n, const GenerationOptions& opt, Attempt&& attempt) {
  for (unsigned t = 0; t < opt.max_retries; ++t) {
    try {
      if (auto inst = attempt()) return std::move(*inst);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CharacterizationViolated) throw;
    }
  }
  throw Error(ErrorKind::GenerationFailed, std::string(family_name(f)) + " degree " + std::to_string(n) +
                                               ": no valid configuration after " +
                                               std::to_string(opt.max_retries) + " attempts");
}

GeneralPositionLines try_general_lines(Rng& rng, std::size_t count, std::uint64_t seed, const GenerationOptions& opt) {
  GeneralPositionLines out{{}, seed};
  std::vector<Point> meets;
  unsigned budget = opt.max_retries;
  while (out.lines.size() < count) {
    if (budget-- == 0) {
      throw Error(ErrorKind::GenerationFailed, "no lines in general position after " +
                                                   std::to_string(opt.max_retries) + " draws");
    }
    Line l = random_line(rng, opt.coefficient_bound);
    if (std::any_of(out.lines.begin(), out.lines.end(), [&](const Line& m) { return parallel_or_equal(l, m); }))
      continue;
    if (std::any_of(meets.begin(), meets.end(), [&](const Point& p) { return incident(l, p); })) continue;
    for (const auto& m : out.lines) meets.push_back(*intersect(l, m));
    out.lines.push_back(l);
  }
  return out;
}

}  // namespace

std::string_view family_name(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

unsigned family_min_degree(Family f) {
  switch (f) {
    case Family::ChungYao: return 1;
    case Family::CarnicerGasca: return 2;
    case Family::DefectTwo: return 3;
    case Family::DefectThree: return 4;
    case Family::Principal: return 1;
  }
  return 1;
}

Point AffineMap::apply(const Point& p) const {
  return Point(a11 * p.x + a12 * p.y + b1, a21 * p.x + a22 * p.y + b2);
}

Line AffineMap::apply(const Line& l) const {
  const Point p = point_on_line(l, Rat(0));
  const Point q = point_on_line(l, Rat(1));
  return line_through(apply(p), apply(q));
}

GeneralPositionLines general_position_lines(std::size_t count, std::uint64_t seed, const GenerationOptions& opt) {
  Rng rng(seed);
  return try_general_lines(rng, count, seed, opt);
}

FamilyInstance chung_yao_from_spec(unsigned n, const ChungYaoSpec& spec) {
  need_degree(Family::ChungYao, n);
  if (spec.lines.lines.size() != n + 2) violated("Chung-Yao lattice needs n+2 lines");
  check_general_position(spec.lines.lines);
  NodeSet X = make_nodes(n, pairwise_intersections(spec.lines.lines));
  return {Family::ChungYao, std::move(X), spec};
}

FamilyInstance carnicer_gasca_from_spec(unsigned n, const CarnicerGascaSpec& spec) {
  need_degree(Family::CarnicerGasca, n);
  const auto& lines = spec.lines.lines;
  if (lines.size() != n + 1 || spec.extras.size() != n + 1) violated("Carnicer-Gasca lattice needs n+1 lines and extras");
  check_general_position(lines);
  auto pts = pairwise_intersections(lines);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Point& e = spec.extras[i];
    if (!incident(lines[i], e)) violated("extra node off its line");
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j != i && incident(lines[j], e)) violated("extra node on two seed lines");
    }
    pts.push_back(e);
  }
  NodeSet X = make_nodes(n, std::move(pts));
  GcContext ctx(X);
  expect_maximal(ctx, lines);
  expect_correct(ctx);
  return {Family::CarnicerGasca, std::move(X), spec};
}

FamilyInstance defect_two_from_spec(unsigned n, const Defect2Spec& spec) {
  need_degree(Family::DefectTwo, n);
  const auto& lines = spec.maximal_seed_lines.lines;
  if (lines.size() != n || spec.drop_choice.size() != n) violated("defect-2 spec needs n lines and n drop choices");
  check_general_position(lines);
  if (on_any(lines, spec.center)) violated("center O lies on a maximal line");
  for (std::size_t a = 0; a < 3; ++a) {
    if (!incident(spec.o_lines[a], spec.center)) violated("O-line misses the center");
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (spec.o_lines[a] == spec.o_lines[b]) violated("O-lines coincide");
    }
  }
  auto pts = pairwise_intersections(lines);
  pts.push_back(spec.center);
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.drop_choice[i] > 2) violated("drop choice out of range");
    for (unsigned a = 0; a < 3; ++a) {
      if (a != spec.drop_choice[i]) pts.push_back(meet(lines[i], spec.o_lines[a], "O-line and maximal"));
    }
  }
  NodeSet X = make_nodes(n, std::move(pts));
  GcContext ctx(X);
  expect_maximal(ctx, lines);
  for (const auto& o : spec.o_lines) {
    if (count_on(X, o) >= n + 1) violated("an O-line carries n+1 nodes");
  }
  expect_correct(ctx);
  return {Family::DefectTwo, std::move(X), spec};
}

namespace {

// OO-line i joins the two O-nodes other than O_i.
std::array<Line, 3> oo_lines(const Defect3Spec& s) {
  return {line_through(s.o_nodes[1], s.o_nodes[2]), line_through(s.o_nodes[0], s.o_nodes[2]),
          line_through(s.o_nodes[0], s.o_nodes[1])};
}

// DD-line k joins the two D-nodes other than D_k (and passes through O_k).
std::array<Line, 3> dd_lines(const Defect3Spec& s) {
  return {line_through(s.d_nodes[1], s.d_nodes[2]), line_through(s.d_nodes[0], s.d_nodes[2]),
          line_through(s.d_nodes[0], s.d_nodes[1])};
}

}  // namespace

FamilyInstance defect_three_from_spec(unsigned n, const Defect3Spec& spec) {
  need_degree(Family::DefectThree, n);
  const auto& lines = spec.maximal_seed_lines.lines;
  if (lines.size() != n - 1) violated("defect-3 spec needs n-1 lines");
  check_general_position(lines);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!incident(lines[i], spec.d_nodes[i])) violated("D-node off its maximal line");
    if (on_any(lines, spec.o_nodes[i])) violated("O-node on a maximal line");
  }
  if (collinear(spec.o_nodes[0], spec.o_nodes[1], spec.o_nodes[2])) violated("O-nodes are collinear");
  if (collinear(spec.d_nodes[0], spec.d_nodes[1], spec.d_nodes[2])) violated("D-nodes are collinear");
  const auto dd = dd_lines(spec);
  for (std::size_t k = 0; k < 3; ++k) {
    if (!incident(dd[k], spec.o_nodes[k])) violated("O-node off its DD-line");
  }
  const auto oo = oo_lines(spec);
  auto pts = pairwise_intersections(lines);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i < 3) pts.push_back(spec.d_nodes[i]);
    for (std::size_t j = 0; j < 3; ++j) {
      if (i < 3 && i == j) continue;
      pts.push_back(meet(lines[i], oo[j], "OO-line and maximal"));
    }
  }
  for (const auto& o : spec.o_nodes) pts.push_back(o);
  NodeSet X = make_nodes(n, std::move(pts));
  GcContext ctx(X);
  expect_maximal(ctx, lines);
  for (std::size_t i = 0; i < 3; ++i) {
    if (count_on(X, oo[i]) != n) violated("OO-line does not carry exactly n nodes");
    if (auto p = intersect(oo[i], lines[i]); p && X.contains(*p)) violated("OO-line meets its maximal line at a node");
    for (const auto& d : spec.d_nodes) {
      if (incident(oo[i], d)) violated("D-node on an OO-line");
    }
  }
  expect_correct(ctx);
  return {Family::DefectThree, std::move(X), spec};
}

FamilyInstance principal_from_spec(unsigned n, const AffineMap& T) {
  need_degree(Family::Principal, n);
  if (T.determinant() == 0) throw Error(ErrorKind::SingularTransform, "affine map is not invertible");
  GplSpec spec{n, T, {}};
  for (unsigned s = 0; s <= n; ++s) {
    spec.families[0].push_back(T.apply(Line(1, 0, -static_cast<long>(s))));
    spec.families[1].push_back(T.apply(Line(0, 1, -static_cast<long>(s))));
    spec.families[2].push_back(T.apply(Line(1, 1, -static_cast<long>(n - s))));
  }
  std::vector<Point> pts;
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = 0; i + j <= n; ++j) pts.push_back(T.apply(Point(i, j)));
  }
  return {Family::Principal, NodeSet(n, std::move(pts)), std::move(spec)};
}

NodeSet principal_lattice(unsigned n, const std::optional<AffineMap>& transform) {
  return principal_from_spec(n, transform.value_or(AffineMap{})).nodes;
}

namespace {

FamilyInstance generate_unseeded(Family f, unsigned n, std::uint64_t seed, const GenerationOptions& opt) {
  need_degree(f, n);
  Rng rng(seed);
  const long B = opt.coefficient_bound;
  switch (f) {
    case Family::ChungYao:
      return retry(f, n, opt, [&]() -> std::optional<FamilyInstance> {
        return chung_yao_from_spec(n, {try_general_lines(rng, n + 2, seed, opt)});
      });
    case Family::CarnicerGasca:
      return retry(f, n, opt, [&]() -> std::optional<FamilyInstance> {
        CarnicerGascaSpec spec{try_general_lines(rng, n + 1, seed, opt), {}};
        for (const auto& l : spec.lines.lines) spec.extras.push_back(random_point_on(rng, l, B));
        return carnicer_gasca_from_spec(n, spec);
      });
    case Family::DefectTwo:
      return retry(f, n, opt, [&]() -> std::optional<FamilyInstance> {
        Defect2Spec spec;
        spec.maximal_seed_lines = try_general_lines(rng, n, seed, opt);
        const auto& lines = spec.maximal_seed_lines.lines;
        spec.center = random_point(rng, B);
        auto twos = pairwise_intersections(lines);
        for (auto& o : spec.o_lines) {
          Point q = random_point(rng, B);
          if (q == spec.center) return std::nullopt;
          o = line_through(spec.center, q);
          // Keep O-lines off 2m-nodes and transversal to every maximal line.
          if (std::any_of(twos.begin(), twos.end(), [&](const Point& p) { return incident(o, p); }))
            return std::nullopt;
          if (std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return parallel_or_equal(l, o); }))
            return std::nullopt;
        }
        std::set<unsigned> dropped;
        for (std::size_t i = 0; i < n; ++i) {
          spec.drop_choice.push_back(static_cast<unsigned>(rng.uniform(0, 2)));
          dropped.insert(spec.drop_choice.back());
        }
        if (dropped.size() != 3) return std::nullopt;
        return defect_two_from_spec(n, spec);
      });
    case Family::DefectThree:
      return retry(f, n, opt, [&]() -> std::optional<FamilyInstance> {
        Defect3Spec spec;
        spec.maximal_seed_lines = try_general_lines(rng, n - 1, seed, opt);
        const auto& lines = spec.maximal_seed_lines.lines;
        for (std::size_t i = 0; i < 3; ++i) {
          spec.d_nodes[i] = random_point_on(rng, lines[i], B);
          for (std::size_t j = 0; j < lines.size(); ++j) {
            if (j != i && incident(lines[j], spec.d_nodes[i])) return std::nullopt;
          }
        }
        if (collinear(spec.d_nodes[0], spec.d_nodes[1], spec.d_nodes[2])) return std::nullopt;
        const auto dd = dd_lines(spec);
        for (std::size_t k = 0; k < 3; ++k) spec.o_nodes[k] = random_point_on(rng, dd[k], B);
        return defect_three_from_spec(n, spec);
      });
    case Family::Principal: {
      if (seed == 0) return principal_from_spec(n, AffineMap{});
      for (unsigned t = 0; t < opt.max_retries; ++t) {
        AffineMap T;
        T.a11 = rng.uniform(-9, 9);
        T.a12 = rng.uniform(-9, 9);
        T.a21 = rng.uniform(-9, 9);
        T.a22 = rng.uniform(-9, 9);
        T.b1 = random_rat(rng, B);
        T.b2 = random_rat(rng, B);
        if (T.determinant() != 0) return principal_from_spec(n, T);
      }
      throw Error(ErrorKind::GenerationFailed, "no invertible affine map drawn");
    }
  }
  throw Error(ErrorKind::GenerationFailed, "unknown family");
}

}  // namespace

std::string describe(const FamilyInstance& inst) {
  return std::string(family_name(inst.family)) + " n=" + std::to_string(inst.nodes.degree()) +
         " seed=" + std::to_string(inst.seed);
}

FamilyInstance generate(Family f, unsigned n, std::uint64_t seed, const GenerationOptions& opt) {
  FamilyInstance inst = generate_unseeded(f, n, seed, opt);
  inst.seed = seed;
  return inst;
}

NodeSet chung_yao(unsigned n, std::uint64_t seed, const GenerationOptions& opt) {
  return generate(Family::ChungYao, n, seed, opt).nodes;
}
NodeSet carnicer_gasca(unsigned n, std::uint64_t seed, const GenerationOptions& opt) {
  return generate(Family::CarnicerGasca, n, seed, opt).nodes;
}
NodeSet defect_two(unsigned n, std::uint64_t seed, const GenerationOptions& opt) {
  return generate(Family::DefectTwo, n, seed, opt).nodes;
}
NodeSet defect_three(unsigned n, std::uint64_t seed, const GenerationOptions& opt) {
  return generate(Family::DefectThree, n, seed, opt).nodes;
}

std::vector<ClassLine> family_class_lines(const FamilyInstance& inst) {
  std::vector<ClassLine> out;
  auto add = [&](const char* cls, const Line& l) { out.push_back({cls, l}); };
  std::visit(
      [&](const auto& spec) {
        using S = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<S, ChungYaoSpec>) {
          for (const auto& l : spec.lines.lines) add("maximal", l);
        } else if constexpr (std::is_same_v<S, CarnicerGascaSpec>) {
          for (const auto& l : spec.lines.lines) add("maximal", l);
          std::set<Line> joins;
          for (std::size_t i = 0; i < spec.extras.size(); ++i) {
            for (std::size_t j = i + 1; j < spec.extras.size(); ++j)
              joins.insert(line_through(spec.extras[i], spec.extras[j]));
          }
          for (const auto& l : joins) add("one-m-line", l);
        } else if constexpr (std::is_same_v<S, Defect2Spec>) {
          const auto& lines = spec.maximal_seed_lines.lines;
          for (const auto& l : lines) add("maximal", l);
          for (const auto& o : spec.o_lines) add("o-line", o);
          for (std::size_t i = 0; i < lines.size(); ++i) {
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
              const unsigned di = spec.drop_choice[i], dj = spec.drop_choice[j];
              if (di == dj) continue;
              // lambda_i keeps the O-line lambda_j drops, and vice versa.
              add("l-ij", line_through(*intersect(lines[i], spec.o_lines[dj]), *intersect(lines[j], spec.o_lines[di])));
            }
          }
        } else if constexpr (std::is_same_v<S, Defect3Spec>) {
          const auto& lines = spec.maximal_seed_lines.lines;
          const auto oo = oo_lines(spec);
          const auto dd = dd_lines(spec);
          for (const auto& l : lines) add("maximal", l);
          for (const auto& l : oo) add("oo-line", l);
          for (const auto& l : dd) add("dd-line", l);
          for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j)
              add("l-ij", line_through(*intersect(lines[i], oo[j]), *intersect(lines[j], oo[i])));
          }
          for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 3; j < lines.size(); ++j)
              add("l-i-j", line_through(spec.d_nodes[i], *intersect(lines[j], oo[i])));
          }
        } else {
          static constexpr const char* names[3] = {"gpl-0", "gpl-1", "gpl-2"};
          for (std::size_t r = 0; r < 3; ++r) {
            for (unsigned s = 0; s < spec.degree; ++s) add(names[r], spec.families[r][s]);
          }
        }
      },
      inst.provenance);
  return out;
}

}  // namespace gcn
