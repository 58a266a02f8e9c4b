#include "gcn/io.hpp"

#include "gcn/error.hpp"

namespace gcn {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_of(const Json& j, const char* what, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  if (size && j.size() != *size) malformed(std::string(what) + " must have " + std::to_string(*size) + " entries");
  return j;
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::MalformedNumber, "bad integer " + j.dump());
    return v;
  }
  malformed("expected an integer, got " + j.dump());
}

unsigned unsigned_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
    malformed(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<unsigned>();
}

template <class T, class F>
Json list(const T& items, F&& f) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(f(x));
  return out;
}

Json lines_json(const std::vector<Line>& ls) {
  return list(ls, [](const Line& l) { return to_json(l); });
}

Json points_json(std::span<const Point> ps) {
  return list(ps, [](const Point& p) { return to_json(p); });
}

std::vector<Line> lines_from_json(const Json& j, const char* what) {
  std::vector<Line> out;
  for (const auto& e : array_of(j, what)) out.push_back(line_from_json(e));
  return out;
}

std::vector<Point> points_from_json(const Json& j, const char* what) {
  std::vector<Point> out;
  for (const auto& e : array_of(j, what)) out.push_back(point_from_json(e));
  return out;
}

template <std::size_t N, class T, class F>
std::array<T, N> fixed_from_json(const Json& j, const char* what, F&& f) {
  array_of(j, what, N);
  std::vector<T> tmp;
  for (const auto& e : j) tmp.push_back(f(e));
  return [&]<std::size_t... I>(std::index_sequence<I...>) { return std::array<T, N>{tmp[I]...}; }(std::make_index_sequence<N>{});
}

Json gp_json(const GeneralPositionLines& g) {
  return {{"lines", lines_json(g.lines)}, {"seed", g.seed}};
}

GeneralPositionLines gp_from_json(const Json& j) {
  GeneralPositionLines g;
  g.lines = lines_from_json(field(j, "lines"), "lines");
  const Json& s = field(j, "seed");
  if (!s.is_number_unsigned() && !s.is_number_integer()) malformed("seed must be an integer");
  g.seed = s.get<std::uint64_t>();
  return g;
}

Json affine_json(const AffineMap& m) {
  return {{"a11", to_json(m.a11)}, {"a12", to_json(m.a12)}, {"a21", to_json(m.a21)},
          {"a22", to_json(m.a22)}, {"b1", to_json(m.b1)},   {"b2", to_json(m.b2)}};
}

AffineMap affine_from_json(const Json& j) {
  AffineMap m;
  m.a11 = rat_from_json(field(j, "a11"));
  m.a12 = rat_from_json(field(j, "a12"));
  m.a21 = rat_from_json(field(j, "a21"));
  m.a22 = rat_from_json(field(j, "a22"));
  m.b1 = rat_from_json(field(j, "b1"));
  m.b2 = rat_from_json(field(j, "b2"));
  return m;
}

Json spec_json(const Provenance& p) {
  struct Visitor {
    Json operator()(const ChungYaoSpec& s) const { return {{"maximal_lines", gp_json(s.lines)}}; }
    Json operator()(const CarnicerGascaSpec& s) const {
      return {{"maximal_lines", gp_json(s.lines)}, {"extras", points_json(s.extras)}};
    }
    Json operator()(const Defect2Spec& s) const {
      return {{"maximal_lines", gp_json(s.maximal_seed_lines)},
              {"center", to_json(s.center)},
              {"o_lines", lines_json({s.o_lines.begin(), s.o_lines.end()})},
              {"drop_choice", s.drop_choice}};
    }
    Json operator()(const Defect3Spec& s) const {
      return {{"maximal_lines", gp_json(s.maximal_seed_lines)},
              {"d_nodes", points_json(s.d_nodes)},
              {"o_nodes", points_json(s.o_nodes)}};
    }
    Json operator()(const GplSpec& s) const {
      Json fams = Json::array();
      for (const auto& f : s.families) fams.push_back(lines_json(f));
      return {{"degree", s.degree}, {"transform", affine_json(s.transform)}, {"families", fams}};
    }
  };
  return std::visit(Visitor{}, p);
}

Provenance spec_from_json(Family f, const Json& j) {
  switch (f) {
    case Family::ChungYao:
      return ChungYaoSpec{gp_from_json(field(j, "maximal_lines"))};
    case Family::CarnicerGasca:
      return CarnicerGascaSpec{gp_from_json(field(j, "maximal_lines")), points_from_json(field(j, "extras"), "extras")};
    case Family::DefectTwo: {
      Defect2Spec s;
      s.maximal_seed_lines = gp_from_json(field(j, "maximal_lines"));
      s.center = point_from_json(field(j, "center"));
      s.o_lines = fixed_from_json<3, Line>(field(j, "o_lines"), "o_lines", line_from_json);
      for (const auto& d : array_of(field(j, "drop_choice"), "drop_choice")) {
        s.drop_choice.push_back(unsigned_from_json(d, "drop_choice entry"));
      }
      return s;
    }
    case Family::DefectThree: {
      Defect3Spec s;
      s.maximal_seed_lines = gp_from_json(field(j, "maximal_lines"));
      s.d_nodes = fixed_from_json<3, Point>(field(j, "d_nodes"), "d_nodes", point_from_json);
      s.o_nodes = fixed_from_json<3, Point>(field(j, "o_nodes"), "o_nodes", point_from_json);
      return s;
    }
    case Family::Principal: {
      GplSpec s;
      s.degree = unsigned_from_json(field(j, "degree"), "degree");
      s.transform = affine_from_json(field(j, "transform"));
      const Json& fams = array_of(field(j, "families"), "families", 3);
      for (std::size_t r = 0; r < 3; ++r) s.families[r] = lines_from_json(fams[r], "family");
      return s;
    }
  }
  malformed("unknown family");
}

std::string_view class_name(NodeClass c) {
  switch (c) {
    case NodeClass::ZeroM: return "0m";
    case NodeClass::OneM: return "1m";
    case NodeClass::TwoM: return "2m";
  }
  return "0m";
}

std::string_view kind_name(ReductionKind k) { return k == ReductionKind::Disjoint ? "disjoint" : "adjoint"; }

}  // namespace

Json to_json(const Rat& v) { return to_string(v); }

Json to_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json to_json(const Line& l) { return Json::array({integer_json(l.a()), integer_json(l.b()), integer_json(l.c())}); }

Json to_json(const BivarPoly& p) {
  Json terms = Json::array();
  const auto coeffs = p.coefficients();
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    if (coeffs[idx] == 0) continue;
    const auto [i, j] = monomial_exponents(idx);
    terms.push_back(Json::array({i, j, to_string(coeffs[idx])}));
  }
  return {{"degree_bound", p.degree_bound()}, {"terms", terms}};
}

Json to_json(const NodeSet& X) { return {{"degree", X.degree()}, {"nodes", points_json(X.nodes())}}; }

Json to_json(const FamilyInstance& inst) {
  Json j = to_json(inst.nodes);
  j["provenance"] = {{"family", std::string(family_name(inst.family))},
                     {"seed", inst.seed},
                     {"spec", spec_json(inst.provenance)}};
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json classes = Json::array();
  for (const auto& [p, c] : r.node_classes) classes.push_back({{"node", to_json(p)}, {"class", class_name(c)}});
  return {{"degree", r.degree},
          {"maximal_lines", lines_json(r.maximal_lines)},
          {"defect", r.defect},
          {"node_classes", classes},
          {"n_correct", r.n_correct},
          {"is_gc", r.is_gc},
          {"non_gc_nodes", points_json(r.non_gc_nodes)}};
}

Json to_json(const UsageReport& r) {
  const auto& c = r.classification;
  Json trace = Json::array();
  if (c.trace) {
    for (const auto& st : c.trace->steps) trace.push_back({{"kind", kind_name(st.kind)}, {"lines", lines_json(st.lines)}});
  }
  Json j = {{"line", to_json(r.line)},
            {"k", r.k},
            {"r", r.r},
            {"r_hat", r.r_hat},
            {"s", r.s},
            {"delta", r.delta},
            {"users", points_json(r.users)},
            {"class", class_label(c)},
            {"trace", trace},
            {"hat_2m", points_json(c.hat_2m)},
            {"oracle_agrees", r.oracle_agrees}};
  if (c.lowering) {
    Json adj = Json::array();
    for (const auto& [a, b] : c.lowering->u2) adj.push_back(lines_json({a, b}));
    j["lowering"] = {{"degree", c.lowering->lowered_degree}, {"disjoint", lines_json(c.lowering->u1)}, {"adjoint", adj}};
  }
  return j;
}

Json to_json(const UsedLineCatalog& c) {
  Json lines = Json::array();
  for (const auto& e : c.lines) {
    Json x = {{"line", to_json(e.line)}, {"users", e.users}};
    if (c.tagged) x["class"] = e.cls;
    lines.push_back(std::move(x));
  }
  Json j = {{"lines", lines}, {"used_lines", c.lines.size()}};
  if (c.tagged) {
    j["class_sizes"] = c.class_sizes;
    j["classes_disjoint"] = c.classes_disjoint;
    j["untagged"] = lines_json(c.untagged);
    j["unused_class_lines"] = lines_json(c.unused_class_lines);
  }
  return j;
}

Json to_json(const UsageCensus& c) { return {{"total", c.total}, {"used_lines", c.per_line.size()}}; }

Json to_json(const TheoremReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json x = {{"what", w.what}};
    if (w.line) x["line"] = to_json(*w.line);
    if (w.node) x["node"] = to_json(*w.node);
    Json counts = Json::object();
    for (const auto& [k, v] : w.counts) counts[k] = v;
    x["counts"] = counts;
    ws.push_back(std::move(x));
  }
  Json j = {{"theorem_id", r.theorem_id},
            {"instance", r.instance},
            {"status", to_string(r.status)},
            {"cases_checked", r.cases_checked},
            {"violations", r.violations},
            {"witnesses", ws},
            {"notes", r.notes}};
  if (r.status == CheckStatus::Skipped) j["skip_reason"] = r.skip_reason;
  return j;
}

Json to_json(const ReportBundle& b) {
  return {{"instance", b.instance},
          {"reports", list(b.reports, [](const TheoremReport& r) { return to_json(r); })},
          {"gm_conditional", b.gm_conditional},
          {"passed", b.passed()}};
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) malformed("expected a rational string, got " + j.dump());
  return parse_rat(j.get<std::string>());
}

Point point_from_json(const Json& j) {
  array_of(j, "point", 2);
  return Point(rat_from_json(j[0]), rat_from_json(j[1]));
}

Line line_from_json(const Json& j) {
  array_of(j, "line", 3);
  return Line(integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2]));
}

BivarPoly poly_from_json(const Json& j) {
  BivarPoly p(unsigned_from_json(field(j, "degree_bound"), "degree_bound"));
  for (const auto& t : array_of(field(j, "terms"), "terms")) {
    array_of(t, "term", 3);
    const unsigned i = unsigned_from_json(t[0], "exponent"), e = unsigned_from_json(t[1], "exponent");
    if (i + e > p.degree_bound()) malformed("term exceeds the degree bound");
    p.set_coeff(i, e, rat_from_json(t[2]));
  }
  return p;
}

NodeSet node_set_from_json(const Json& j) {
  return NodeSet(unsigned_from_json(field(j, "degree"), "degree"), points_from_json(field(j, "nodes"), "nodes"));
}

std::optional<FamilyInstance> instance_from_json(const Json& j) {
  NodeSet X = node_set_from_json(j);
  if (!j.contains("provenance")) return std::nullopt;
  const Json& p = j["provenance"];
  const Json& name = field(p, "family");
  if (!name.is_string()) malformed("family must be a string");
  const auto f = parse_family(name.get<std::string>());
  if (!f) malformed("unknown family \"" + name.get<std::string>() + "\"");
  const Json& seed = field(p, "seed");
  if (!seed.is_number_integer()) malformed("seed must be an integer");
  return FamilyInstance{*f, std::move(X), spec_from_json(*f, field(p, "spec")), seed.get<std::uint64_t>()};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gcn
