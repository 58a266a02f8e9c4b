#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gcn/error.hpp"
#include "gcn/io.hpp"
#include "svg.hpp"

namespace gcn {

namespace {

// Carries an exit status out of a subcommand.
struct Exit {
  int code;
};

[[noreturn]] void fail(std::ostream& err, int code, const std::string& msg) {
  err << "gcn: " << msg << "\n";
  throw Exit{code};
}

int input_error_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput:
    case ErrorKind::MalformedNumber:
    case ErrorKind::SizeMismatch:
    case ErrorKind::DuplicateNode:
    case ErrorKind::TooManyCollinear:
    case ErrorKind::DegreeOutOfRange:
    case ErrorKind::DegenerateLine:
      return kExitBadInput;
    default:
      return kExitInternal;
  }
}

struct Input {
  NodeSet nodes;
  std::optional<FamilyInstance> instance;
};

Input load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(err, kExitBadInput, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const Json j = parse_json(buf.str());
    auto inst = instance_from_json(j);
    NodeSet X = inst ? inst->nodes : node_set_from_json(j);
    return Input{std::move(X), std::move(inst)};
  } catch (const Error& e) {
    fail(err, kExitBadInput, path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) fail(err, kExitBadInput, "cannot write " + path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Rat> parse_numbers(const std::string& s, std::size_t count, const char* what, std::ostream& err) {
  const auto parts = split(s, ',');
  if (parts.size() != count) fail(err, kExitBadArguments, std::string(what) + " needs " + std::to_string(count) + " comma-separated numbers");
  std::vector<Rat> out;
  try {
    for (const auto& p : parts) out.push_back(parse_rat(p));
  } catch (const Error& e) {
    fail(err, kExitBadArguments, std::string(what) + ": " + e.what());
  }
  return out;
}

std::string summary(const GcContext& ctx) {
  std::ostringstream os;
  os << "N=" << ctx.size() << " #M=" << ctx.maximal_ids().size() << " defect=" << ctx.defect() << "\n";
  return os.str();
}

std::string reports_csv(const std::vector<UsageReport>& reps) {
  std::ostringstream os;
  os << "a,b,c,class,k,r,r_hat,s,users\n";
  for (const auto& r : reps) {
    os << r.line.a() << "," << r.line.b() << "," << r.line.c() << "," << class_label(r.classification) << "," << r.k
       << "," << r.r << "," << r.r_hat << "," << r.s << "," << popcount(r.users_mask) << "\n";
  }
  return os.str();
}

struct GenerateArgs {
  std::string family;
  unsigned degree = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const auto f = parse_family(a.family);
  if (!f) fail(err, kExitBadArguments, "unknown family '" + a.family + "'");
  if (a.degree < family_min_degree(*f) || a.degree > kMaxDegree) {
    fail(err, kExitBadArguments, "degree for " + a.family + " must lie in [" + std::to_string(family_min_degree(*f)) +
                                     ", " + std::to_string(kMaxDegree) + "]");
  }
  std::uint64_t seed = 0;
  if (a.seed) {
    seed = *a.seed;
  } else if (const char* env = std::getenv("GCN_SEED")) {
    char* end = nullptr;
    seed = std::strtoull(env, &end, 10);
    if (!*env || *end) fail(err, kExitBadArguments, "GCN_SEED is not an unsigned integer");
  }
  FamilyInstance inst = [&] {
    try {
      return generate(*f, a.degree, seed);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::GenerationFailed) fail(err, kExitBadInput, e.what());
      throw;
    }
  }();
  emit(dump_json(to_json(inst)), a.out, out, err);
  const GcContext ctx(inst.nodes);
  if (!a.out.empty() && a.out != "-") out << summary(ctx);
  return kExitOk;
}

struct AnalyzeArgs {
  std::string in;
  std::string out;
  std::string format = "json";
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const Input in = load(a.in, err);
  const GcContext ctx(in.nodes);
  if (!ctx.n_correct()) fail(err, kExitNotCorrect, a.in + ": the set is not n-correct");
  if (a.format == "csv") {
    if (!ctx.is_gc()) fail(err, kExitInternal, a.in + ": usage reports need a GC set");
    emit(reports_csv(all_line_reports(ctx)), a.out, out, err);
    return kExitOk;
  }
  Json j;
  j["analysis"] = to_json(analyze(ctx));
  if (ctx.is_gc()) {
    const FamilyInstance* prov = in.instance ? &*in.instance : nullptr;
    j["catalog"] = to_json(used_line_catalog(ctx, prov));
    j["census"] = to_json(usage_census(ctx));
  }
  if (in.instance) j["family"] = describe(*in.instance);
  emit(dump_json(j), a.out, out, err);
  return kExitOk;
}

struct UsageArgs {
  std::string in;
  std::string line;
  std::string through;
  std::string out;
  std::string format = "json";
};

int cmd_usage(const UsageArgs& a, std::ostream& out, std::ostream& err) {
  const Input in = load(a.in, err);
  std::optional<Line> l;
  if (!a.line.empty()) {
    const auto v = parse_numbers(a.line, 3, "--line", err);
    if (v[0] == 0 && v[1] == 0) fail(err, kExitBadArguments, "--line: a and b are both zero");
    l = Line::from_rational(v[0], v[1], v[2]);
  } else {
    const auto v = parse_numbers(a.through, 4, "--through", err);
    const Point p(v[0], v[1]), q(v[2], v[3]);
    if (p == q) fail(err, kExitBadArguments, "--through: the two points coincide");
    l = line_through(p, q);
  }
  const GcContext ctx(in.nodes);
  const unsigned k = popcount(ctx.arrangement().nodes_on(*l));
  if (k < 2) fail(err, kExitTooFewNodes, "the line passes through " + std::to_string(k) + " node(s)");
  if (!ctx.n_correct()) fail(err, kExitNotCorrect, a.in + ": the set is not n-correct");
  const UsageReport rep = run_pipeline(ctx, *l);
  emit(a.format == "csv" ? reports_csv({rep}) : dump_json(to_json(rep)), a.out, out, err);
  return kExitOk;
}

struct VerifyArgs {
  std::string in;
  std::string theorems = "all";
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (a.theorems != "all") {
    for (auto& id : split(a.theorems, ',')) {
      if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end()) {
        std::string known;
        for (auto k : theorem_ids()) known += (known.empty() ? "" : ", ") + std::string(k);
        fail(err, kExitBadArguments, "unknown theorem id '" + id + "' (known: " + known + ")");
      }
      ids.push_back(id);
    }
  }
  const Input in = load(a.in, err);
  const GcContext ctx(in.nodes);
  const FamilyInstance* prov = in.instance ? &*in.instance : nullptr;
  Verifier v(ctx, prov, prov ? describe(*prov) : a.in);
  const ReportBundle b = v.run(ids);
  emit(dump_json(to_json(b)), a.out, out, err);
  if (!b.passed()) {
    for (const auto& r : b.reports) {
      if (r.status == CheckStatus::Fail) err << "gcn: " << r.theorem_id << " failed (" << r.violations << " violations)\n";
    }
    return kExitTheoremFailed;
  }
  return kExitOk;
}

struct ExportArgs {
  std::string in;
  std::string svg;
};

int cmd_export(const ExportArgs& a, std::ostream& out, std::ostream& err) {
  const Input in = load(a.in, err);
  const GcContext ctx(in.nodes);
  emit(render_svg(ctx), a.svg, out, err);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and analysis of GC_n interpolation node sets", "gcn"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Construct a family instance and write it as JSON");
  g->add_option("--family", gen.family, "chung-yao, carnicer-gasca, defect-2, defect-3 or principal")->required();
  g->add_option("--degree", gen.degree, "Degree n")->required();
  g->add_option("--seed", gen.seed, "Seed (default: $GCN_SEED, else 0)");
  g->add_option("--out", gen.out, "Output file")->required();

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Maximal lines, node classes, used-line catalog and census");
  a->add_option("in", an.in, "Node set JSON")->required();
  a->add_option("--out", an.out, "Output file (default: stdout)");
  a->add_option("--format", an.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  UsageArgs us;
  auto* u = app.add_subcommand("usage", "Nodes using a line, with its classification");
  u->add_option("in", us.in, "Node set JSON")->required();
  auto* line_opt = u->add_option("--line", us.line, "Coefficients a,b,c of a*x + b*y + c = 0");
  auto* through_opt = u->add_option("--through", us.through, "Two points x1,y1,x2,y2 on the line");
  line_opt->excludes(through_opt);
  u->add_option("--out", us.out, "Output file (default: stdout)");
  u->add_option("--format", us.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Run the theorem checkers and write a report bundle");
  v->add_option("in", ve.in, "Node set JSON")->required();
  v->add_option("--theorems", ve.theorems, "all, or a comma-separated list of theorem ids");
  v->add_option("--out", ve.out, "Output file (default: stdout)");

  ExportArgs ex;
  auto* e = app.add_subcommand("export", "Render the node set as SVG");
  e->add_option("in", ex.in, "Node set JSON")->required();
  e->add_option("--svg", ex.svg, "Output SVG file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::CallForAllHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::ParseError& pe) {
    app.exit(pe, out, err);
    return kExitBadArguments;
  }

  try {
    if (g->parsed()) return cmd_generate(gen, out, err);
    if (a->parsed()) return cmd_analyze(an, out, err);
    if (u->parsed()) {
      if (us.line.empty() == us.through.empty()) fail(err, kExitBadArguments, "usage needs exactly one of --line and --through");
      return cmd_usage(us, out, err);
    }
    if (v->parsed()) return cmd_verify(ve, out, err);
    if (e->parsed()) return cmd_export(ex, out, err);
  } catch (const Exit& x) {
    return x.code;
  } catch (const Error& x) {
    err << "gcn: " << to_string(x.kind()) << ": " << x.what() << "\n";
    return input_error_code(x.kind());
  }
  return kExitBadArguments;
}

}  // namespace gcn
