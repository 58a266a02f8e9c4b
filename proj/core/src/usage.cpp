#include "gcn/usage.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gcn/error.hpp"

namespace gcn {

namespace {

NodeMask line_mask(const GcContext& ctx, const Line& l) { return ctx.arrangement().nodes_on(l); }

void require_two_nodes(const Line& l, NodeMask on) {
  if (popcount(on) < 2) {
    std::ostringstream os;
    os << "line " << l << " passes through " << popcount(on) << " node(s); at least two are required";
    throw Error(ErrorKind::TooFewNodes, os.str());
  }
}

unsigned s_from_count(std::size_t count) {
  for (unsigned s = 2; binomial2(s) <= count; ++s) {
    if (binomial2(s) == count) return s;
  }
  return 0;
}

// Nodes of `within` lying on exactly two of the given maximal lines.
NodeMask two_m_mask(const GcContext& ctx, const std::vector<std::size_t>& maximal, NodeMask within) {
  NodeMask once = 0, twice = 0;
  for (std::size_t id : maximal) {
    const NodeMask m = ctx.arrangement().lines()[id].nodes & within;
    twice |= once & m;
    once |= m;
  }
  return twice;
}

struct Candidates {
  std::vector<std::size_t> disjoint;
  std::vector<std::pair<std::size_t, std::size_t>> adjoint;
};

Candidates reductions(const GcContext& ctx, NodeMask lmask, NodeMask S, const std::vector<std::size_t>& maximal) {
  Candidates c;
  auto entries = ctx.arrangement().lines();
  const NodeMask on = lmask & S;
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    const NodeMask ma = entries[maximal[a]].nodes & S;
    if ((ma & on) == 0) c.disjoint.push_back(maximal[a]);
    for (std::size_t b = a + 1; b < maximal.size(); ++b) {
      const NodeMask mb = entries[maximal[b]].nodes & S;
      if (ma & mb & on) c.adjoint.emplace_back(maximal[a], maximal[b]);
    }
  }
  return c;
}

LoweringResult lower_impl(const GcContext& ctx, const Line& l, NodeMask lmask, NodeMask from) {
  const unsigned d = ctx.subset_degree(from);
  LoweringResult res{l, from, d, {}, {}};
  if (popcount(lmask & from) == d + 1) return res;
  const auto maximal = ctx.maximal_line_ids(from);
  const auto cand = reductions(ctx, lmask, from, maximal);
  auto entries = ctx.arrangement().lines();
  NodeMask removed = 0;
  for (std::size_t id : cand.disjoint) {
    res.u1.push_back(entries[id].line);
    removed |= entries[id].nodes;
  }
  for (auto [a, b] : cand.adjoint) {
    res.u2.emplace_back(entries[a].line, entries[b].line);
    removed |= entries[a].nodes | entries[b].nodes;
  }
  const unsigned drop = static_cast<unsigned>(res.u1.size() + 2 * res.u2.size());
  if (drop > d) throw Error(ErrorKind::NonTermination, "lowering removes more maximal lines than the degree");
  res.lowered_mask = from & ~removed;
  res.lowered_degree = d - drop;
  if (ctx.subset_degree(res.lowered_mask) != res.lowered_degree) {
    throw Error(ErrorKind::NonTermination, "lowered set has the wrong cardinality");
  }
  return res;
}

LineClassification classify_impl(const GcContext& ctx, const Line& l, NodeMask lmask, NodeMask used,
                                  ReductionPreference pref) {
  LineClassification c;
  const unsigned n = ctx.degree();
  if (popcount(lmask) == n + 1) {
    c.kind = LineKind::Maximal;
    c.terminal_mask = ctx.all();
    return c;
  }
  if (used == 0) {
    c.kind = LineKind::Unused;
    return c;
  }
  c.lowering = lower_impl(ctx, l, lmask, ctx.all());
  NodeMask S = c.lowering->lowered_mask;
  unsigned d = c.lowering->lowered_degree;
  if (popcount(lmask & S) == d + 1) {
    c.kind = LineKind::Proper;
    c.terminal_mask = S;
    return c;
  }

  const NodeMask hat = two_m_mask(ctx, ctx.maximal_line_ids(S), lmask & S);
  c.hat_2m = ctx.points(hat);

  const unsigned s = s_from_count(popcount(used));
  auto entries = ctx.arrangement().lines();
  ReductionTrace trace;
  while (popcount(lmask & S) != d + 1) {
    if (s == 0 || d + 1 < s) {
      std::ostringstream os;
      os << "reduction of " << l << " went below the degree implied by its users";
      throw Error(ErrorKind::NonTermination, os.str());
    }
    const auto cand = reductions(ctx, lmask, S, ctx.maximal_line_ids(S));
    const bool have_d = !cand.disjoint.empty();
    const bool have_a = !cand.adjoint.empty() && d >= 2;
    if (!have_d && !have_a) {
      std::ostringstream os;
      os << "no disjoint or adjoint reduction available for " << l;
      throw Error(ErrorKind::NonTermination, os.str());
    }
    bool take_disjoint = pref == ReductionPreference::DisjointFirstSmallest ? have_d : !have_a;
    ReductionStep step;
    if (take_disjoint) {
      const std::size_t id =
          pref == ReductionPreference::DisjointFirstSmallest ? cand.disjoint.front() : cand.disjoint.back();
      step = {ReductionKind::Disjoint, {entries[id].line}};
      S &= ~entries[id].nodes;
      d -= 1;
    } else {
      const auto [a, b] =
          pref == ReductionPreference::DisjointFirstSmallest ? cand.adjoint.front() : cand.adjoint.back();
      step = {ReductionKind::Adjoint, {entries[a].line, entries[b].line}};
      S &= ~(entries[a].nodes | entries[b].nodes);
      d -= 2;
    }
    trace.steps.push_back(std::move(step));
  }
  trace.terminal_mask = S;
  trace.terminal_degree = d;
  c.kind = LineKind::ProperMinus;
  c.r = trace.depth();
  c.terminal_mask = S;
  c.trace = std::move(trace);
  return c;
}

}  // namespace

NodeMask used_mask_bruteforce(const GcContext& ctx, const Line& l) {
  const NodeMask on = line_mask(ctx, l);
  NodeMask users = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (on & bit(i)) continue;
    if (vanishes_on_line(ctx.fundamental(i), l)) users |= bit(i);
  }
  return users;
}

std::vector<Point> used_nodes_bruteforce(const GcContext& ctx, const Line& l) {
  return ctx.points(used_mask_bruteforce(ctx, l));
}

std::vector<Point> used_nodes_bruteforce(const NodeSet& X, const Line& l) {
  return used_nodes_bruteforce(GcContext(X), l);
}

LoweringResult lowering(const GcContext& ctx, const Line& l) { return lowering(ctx, l, ctx.all()); }

LoweringResult lowering(const GcContext& ctx, const Line& l, NodeMask from) {
  const NodeMask on = line_mask(ctx, l);
  require_two_nodes(l, on & from);
  return lower_impl(ctx, l, on, from);
}

std::string class_label(const LineClassification& c) {
  switch (c.kind) {
    case LineKind::Maximal: return "maximal";
    case LineKind::Proper: return "proper";
    case LineKind::ProperMinus: return "proper_minus_" + std::to_string(c.r);
    case LineKind::Unused: return "unused";
  }
  return "unused";
}

LineClassification classify_line(const GcContext& ctx, const Line& l, ReductionPreference pref) {
  const NodeMask on = line_mask(ctx, l);
  require_two_nodes(l, on);
  const NodeMask used = popcount(on) == ctx.degree() + 1 ? NodeMask{0} : used_mask_bruteforce(ctx, l);
  return classify_impl(ctx, l, on, used, pref);
}

LineClassification classify_line(const NodeSet& X, const Line& l) { return classify_line(GcContext(X), l); }

std::vector<Point> hat_2m_nodes(const GcContext& ctx, const Line& l) { return classify_line(ctx, l).hat_2m; }

UsageReport run_pipeline(const GcContext& ctx, const Line& l, ReductionPreference pref) {
  const NodeMask on = line_mask(ctx, l);
  require_two_nodes(l, on);
  UsageReport rep{l, 0, 0, 0, 0, 0, 0, {}, {}, false};
  rep.k = popcount(on);
  rep.delta = ctx.degree() + 1 - rep.k;
  std::vector<std::size_t> others;
  for (std::size_t id : ctx.maximal_ids()) {
    if (!(ctx.arrangement().lines()[id].line == l)) others.push_back(id);
  }
  rep.r = popcount(two_m_mask(ctx, others, on));
  const NodeMask oracle = used_mask_bruteforce(ctx, l);
  rep.classification = classify_impl(ctx, l, on, oracle, pref);
  if (rep.classification.kind == LineKind::ProperMinus) rep.r_hat = static_cast<unsigned>(rep.classification.hat_2m.size());
  if (rep.classification.kind != LineKind::Unused) rep.users_mask = rep.classification.terminal_mask & ~on;
  rep.users = ctx.points(rep.users_mask);
  rep.s = rep.users_mask ? s_from_count(popcount(rep.users_mask)) : 0;
  rep.oracle_agrees = rep.users_mask == oracle;
  return rep;
}

UsageReport used_nodes_pipeline(const GcContext& ctx, const Line& l) {
  UsageReport rep = run_pipeline(ctx, l);
  if (!rep.oracle_agrees) {
    std::ostringstream os;
    os << "pipeline and direct divisibility disagree on the users of " << l;
    throw Error(ErrorKind::OracleMismatch, os.str());
  }
  return rep;
}

UsageReport used_nodes_pipeline(const NodeSet& X, const Line& l) { return used_nodes_pipeline(GcContext(X), l); }

std::vector<UsageReport> all_line_reports(const GcContext& ctx) {
  std::vector<UsageReport> out;
  for (const auto& e : ctx.arrangement().lines()) out.push_back(run_pipeline(ctx, e.line));
  return out;
}

UsageCensus usage_census(const GcContext& ctx) {
  UsageCensus c;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    for (const auto& l : ctx.factorization(i).lines) {
      ++c.per_line[l];
      ++c.total;
    }
  }
  return c;
}

UsedLineCatalog used_line_catalog(const GcContext& ctx, const FamilyInstance* provenance) {
  UsedLineCatalog cat;
  const UsageCensus census = usage_census(ctx);
  std::map<Line, std::string> tags;
  if (provenance) {
    cat.tagged = true;
    for (auto& cl : family_class_lines(*provenance)) {
      if (!tags.emplace(cl.line, cl.cls).second) cat.classes_disjoint = false;
    }
  }
  for (const auto& [line, count] : census.per_line) {
    CatalogEntry e{line, count, {}};
    if (auto it = tags.find(line); it != tags.end()) {
      e.cls = it->second;
      ++cat.class_sizes[e.cls];
    } else if (cat.tagged) {
      cat.untagged.push_back(line);
    }
    cat.lines.push_back(std::move(e));
  }
  for (const auto& [line, cls] : tags) {
    if (!census.per_line.count(line)) cat.unused_class_lines.push_back(line);
  }
  return cat;
}

std::vector<std::pair<std::string, std::size_t>> family_census_formula(Family f, unsigned n) {
  const std::size_t c1 = binomial2(n + 1);  // C(n+1,2)
  const std::size_t c0 = binomial2(n);      // C(n,2)
  switch (f) {
    case Family::ChungYao:
      return {{"maximal", (n + 2) * c1}};
    case Family::CarnicerGasca:
      return {{"maximal", (n + 1) * c1}, {"one-m-line", c1}};
    case Family::DefectTwo:
      return {{"maximal", n * c1}, {"o-line+l-ij", 2 * c0 + 2 * n}};
    case Family::DefectThree:
      return {{"maximal", (n - 1) * c1}, {"oo-line", 3 * c0}, {"dd-line", 9}, {"l-ij", 3}, {"l-i-j", 3 * (n - 4)}};
    case Family::Principal: {
      const std::size_t c3 = static_cast<std::size_t>(n + 2) * (n + 1) * n / 6;
      return {{"gpl-0", c3}, {"gpl-1", c3}, {"gpl-2", c3}};
    }
  }
  return {};
}

}  // namespace gcn
