#include "gcn/gcset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gcn/error.hpp"

namespace gcn {

Arrangement::Arrangement(const NodeSet& X) : set_(&X) {
  std::map<Line, NodeMask> lines;
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      lines[line_through(X[i], X[j])] |= bit(i) | bit(j);
    }
  }
  entries_.reserve(lines.size());
  for (auto& [line, mask] : lines) entries_.push_back({line, mask});
}

std::optional<std::size_t> Arrangement::find(const Line& l) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), l,
                             [](const Entry& e, const Line& key) { return e.line < key; });
  if (it == entries_.end() || !(it->line == l)) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

NodeMask Arrangement::nodes_on(const Line& l) const {
  if (auto idx = find(l)) return entries_[*idx].nodes;
  for (std::size_t i = 0; i < set_->size(); ++i) {
    if (incident(l, (*set_)[i])) return bit(i);
  }
  return 0;
}

GcContext::GcContext(NodeSet X)
    : set_(std::move(X)), arrangement_(set_), all_(set_.size() == 64 ? ~NodeMask{0} : bit(set_.size()) - 1) {
  maximal_ids_ = maximal_line_ids(all_);
  classes_.assign(set_.size(), NodeClass::ZeroM);
  for (std::size_t id : maximal_ids_) {
    NodeMask m = arrangement_.lines()[id].nodes;
    for (std::size_t i = 0; i < set_.size(); ++i) {
      if (m & bit(i)) classes_[i] = static_cast<NodeClass>(static_cast<unsigned>(classes_[i]) + 1);
    }
  }
  fundamentals_.clear();
  factorizations_.resize(set_.size());
  failures_.resize(set_.size());
  factored_.assign(set_.size(), false);
}

std::vector<Point> GcContext::points(NodeMask subset) const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < set_.size(); ++i) {
    if (subset & bit(i)) out.push_back(set_[i]);
  }
  return out;
}

NodeMask GcContext::mask_of(std::span<const Point> pts) const {
  NodeMask m = 0;
  for (const auto& p : pts) {
    auto idx = set_.index_of(p);
    if (!idx) {
      std::ostringstream os;
      os << p << " is not a node of the set";
      throw Error(ErrorKind::NodeAbsent, os.str());
    }
    m |= bit(*idx);
  }
  return m;
}

unsigned GcContext::subset_degree(NodeMask subset) const {
  const unsigned count = popcount(subset);
  for (unsigned d = 0; d <= kMaxDegree; ++d) {
    if (node_count_for_degree(d) == count) return d;
    if (node_count_for_degree(d) > count) break;
  }
  throw Error(ErrorKind::SizeMismatch, std::to_string(count) + " nodes is not a triangular count");
}

std::vector<std::size_t> GcContext::maximal_line_ids(NodeMask subset) const {
  const unsigned d = subset_degree(subset);
  std::vector<std::size_t> ids;
  if (d == 0) return ids;
  auto entries = arrangement_.lines();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (popcount(entries[k].nodes & subset) == d + 1) ids.push_back(k);
  }
  return ids;
}

NodeSet GcContext::subset(NodeMask subset) const {
  const unsigned d = subset_degree(subset);
  for (const auto& e : arrangement_.lines()) {
    if (popcount(e.nodes & subset) > d + 1) {
      std::ostringstream os;
      os << "line " << e.line << " carries more than " << d + 1 << " nodes of the subset";
      throw Error(ErrorKind::TooManyCollinear, os.str());
    }
  }
  return NodeSet(NodeSet::Trusted{}, d, points(subset));
}

std::vector<Line> GcContext::maximal_lines() const {
  std::vector<Line> out;
  for (std::size_t id : maximal_ids_) out.push_back(arrangement_.lines()[id].line);
  return out;
}

unsigned GcContext::defect() const {
  const std::size_t m = maximal_ids_.size();
  const std::size_t cap = degree() + 2;
  return m >= cap ? 0u : static_cast<unsigned>(cap - m);
}

NodeMask GcContext::class_mask(NodeClass c) const {
  NodeMask m = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i] == c) m |= bit(i);
  }
  return m;
}

void GcContext::ensure_basis() const {
  if (determinant_) return;
  Rat det = collocation_determinant(degree(), set_.nodes());
  if (det != 0) fundamentals_ = lagrange_basis(degree(), set_.nodes()).fundamentals;
  determinant_ = std::move(det);
}

const Rat& GcContext::determinant() const {
  ensure_basis();
  return *determinant_;
}

const BivarPoly& GcContext::fundamental(std::size_t node) const {
  ensure_basis();
  if (*determinant_ == 0) throw Error(ErrorKind::NotCorrect, "node set is not n-correct");
  return fundamentals_.at(node);
}

void GcContext::ensure_factorization(std::size_t node) const {
  if (factored_.at(node)) return;
  const BivarPoly& p = fundamental(node);
  const Point& A = set_[node];
  const NodeMask self = bit(node);

  BivarPoly q = p;
  unsigned deg = degree();
  NodeMask zeros = all_ & ~self;  // nodes where q is known to vanish
  std::vector<Line> peeled;
  for (const auto& e : arrangement_.lines()) {
    if (deg == 0) break;
    if ((e.nodes & self) || popcount(e.nodes & ~self) < 2) continue;
    while (deg > 0) {
      const NodeMask on = e.nodes & zeros;
      // A polynomial of degree <= deg with deg+1 roots on a line vanishes
      // there identically.
      bool divides = popcount(on) >= deg + 1;
      if (!divides) {
        auto known = points(on);
        divides = vanishes_on_line(q, e.line, known);
      }
      if (!divides) break;
      q = divide_by_line(q, e.line);
      --deg;
      peeled.push_back(e.line);
      zeros &= ~e.nodes;
    }
  }
  if (deg == 0 && q.coeff(0, 0) != 0) {
    factorizations_[node] = FundamentalFactorization{A, q.coeff(0, 0), std::move(peeled)};
  } else {
    failures_[node] = FactorizationFailure{A, std::move(peeled), std::move(q), points(zeros)};
  }
  factored_[node] = true;
}

const FundamentalFactorization& GcContext::factorization(std::size_t node) const {
  ensure_factorization(node);
  if (failures_[node]) {
    const auto& f = *failures_[node];
    std::ostringstream os;
    os << "fundamental polynomial of " << f.node << " keeps a residual of degree bound "
       << f.residual.degree_bound() << " after peeling " << f.peeled.size() << " lines; "
       << f.uncovered.size() << " nodes uncovered";
    throw Error(ErrorKind::NotFullyFactorable, os.str());
  }
  return *factorizations_[node];
}

const std::optional<FactorizationFailure>& GcContext::factorization_failure(std::size_t node) const {
  ensure_factorization(node);
  return failures_[node];
}

bool GcContext::is_gc() const {
  if (!n_correct()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (factorization_failure(i)) return false;
  }
  return true;
}

std::vector<Line> maximal_lines(const NodeSet& X) { return GcContext(X).maximal_lines(); }

AnalysisReport analyze(const GcContext& ctx) {
  AnalysisReport r;
  r.degree = ctx.degree();
  r.maximal_lines = ctx.maximal_lines();
  r.defect = ctx.defect();
  for (std::size_t i = 0; i < ctx.size(); ++i) r.node_classes.emplace_back(ctx.nodes()[i], ctx.node_class(i));
  r.n_correct = ctx.n_correct();
  if (r.n_correct) {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (ctx.factorization_failure(i)) r.non_gc_nodes.push_back(ctx.nodes()[i]);
    }
    r.is_gc = r.non_gc_nodes.empty();
  }
  return r;
}

AnalysisReport analyze(const NodeSet& X) { return analyze(GcContext(X)); }

LineProfile line_profile(const GcContext& ctx, const Line& l) {
  LineProfile prof{l};
  const NodeMask on = ctx.arrangement().nodes_on(l);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (!(on & bit(i))) continue;
    ++prof.node_count;
    switch (ctx.node_class(i)) {
      case NodeClass::ZeroM: ++prof.zero_m; break;
      case NodeClass::OneM: ++prof.one_m; break;
      case NodeClass::TwoM: ++prof.two_m; break;
    }
  }
  return prof;
}

FundamentalFactorization factor_fundamental(const GcContext& ctx, const Point& A) {
  auto idx = ctx.nodes().index_of(A);
  if (!idx) {
    std::ostringstream os;
    os << A << " is not a node of the set";
    throw Error(ErrorKind::NodeAbsent, os.str());
  }
  return ctx.factorization(*idx);
}

FundamentalFactorization factor_fundamental(const NodeSet& X, const Point& A) {
  return factor_fundamental(GcContext(X), A);
}

FundamentalFactorization factor_with_order(const BivarPoly& p, const Point& A, std::span<const Line> candidates) {
  BivarPoly q = p;
  std::vector<Line> peeled;
  for (const auto& l : candidates) {
    while (q.degree_bound() > 0 && restrict_to_line(q, l).empty()) {
      q = divide_by_line(q, l);
      peeled.push_back(l);
    }
  }
  if (q.degree_bound() != 0 || q.coeff(0, 0) == 0) {
    std::ostringstream os;
    os << "fundamental polynomial of " << A << " does not split over the candidates";
    throw Error(ErrorKind::NotFullyFactorable, os.str());
  }
  std::sort(peeled.begin(), peeled.end());
  return {A, q.coeff(0, 0), std::move(peeled)};
}

bool is_gc(const NodeSet& X) { return GcContext(X).is_gc(); }

}  // namespace gcn
