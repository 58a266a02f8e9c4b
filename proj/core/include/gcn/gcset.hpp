#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gcn/geom.hpp"
#include "gcn/node_set.hpp"
#include "gcn/poly.hpp"

namespace gcn {

/// Subset of a node set as a bitmask over its canonical node order.
using NodeMask = std::uint64_t;

inline unsigned popcount(NodeMask m) { return static_cast<unsigned>(std::popcount(m)); }
inline NodeMask bit(std::size_t i) { return NodeMask{1} << i; }

/// Number of maximal lines through a node: 0, 1 or 2 in an n-correct set.
enum class NodeClass : unsigned { ZeroM = 0, OneM = 1, TwoM = 2 };

/// All canonical lines through at least two nodes of a set, in Line order,
/// each with the mask of nodes it carries. Any other line meets at most one
/// node, so every incidence question about a subset reduces to masks here.
class Arrangement {
 public:
  struct Entry {
    Line line;
    NodeMask nodes;
  };

  explicit Arrangement(const NodeSet& X);

  std::span<const Entry> lines() const noexcept { return entries_; }
  std::optional<std::size_t> find(const Line& l) const;
  /// Mask of nodes on l; works for lines outside the arrangement too.
  NodeMask nodes_on(const Line& l) const;

 private:
  const NodeSet* set_;
  std::vector<Entry> entries_;
};

struct FundamentalFactorization {
  Point node;
  Rat scalar;
  std::vector<Line> lines;  // canonical order, with multiplicity
};

/// Residual left when peeling line factors off a fundamental polynomial
/// stops early.
struct FactorizationFailure {
  Point node;
  std::vector<Line> peeled;
  BivarPoly residual;
  std::vector<Point> uncovered;  // nodes other than A the peeled lines miss
};

struct LineProfile {
  Line line;
  unsigned node_count = 0;
  unsigned zero_m = 0;
  unsigned one_m = 0;
  unsigned two_m = 0;
};

struct AnalysisReport {
  unsigned degree = 0;
  std::vector<Line> maximal_lines;
  unsigned defect = 0;
  std::vector<std::pair<Point, NodeClass>> node_classes;  // node order
  bool n_correct = false;
  bool is_gc = false;
  std::vector<Point> non_gc_nodes;
};

/// Analysis context for one node set. Fundamental polynomials and their
/// factorizations are computed on first use and cached here; a context is
/// therefore not safe to share between threads, while the NodeSet is.
class GcContext {
 public:
  explicit GcContext(NodeSet X);

  const NodeSet& nodes() const noexcept { return set_; }
  unsigned degree() const noexcept { return set_.degree(); }
  std::size_t size() const noexcept { return set_.size(); }
  NodeMask all() const noexcept { return all_; }
  const Arrangement& arrangement() const noexcept { return arrangement_; }

  std::vector<Point> points(NodeMask subset) const;
  NodeMask mask_of(std::span<const Point> pts) const;

  /// Degree d of a subset with C(d+2,2) elements; throws SizeMismatch when
  /// the cardinality is not of that form.
  unsigned subset_degree(NodeMask subset) const;
  /// Arrangement indices of the maximal lines of a subset of degree >= 1.
  std::vector<std::size_t> maximal_line_ids(NodeMask subset) const;
  /// Materializes a subset as a NodeSet (validated through the arrangement).
  NodeSet subset(NodeMask subset) const;

  const std::vector<std::size_t>& maximal_ids() const { return maximal_ids_; }
  std::vector<Line> maximal_lines() const;
  unsigned defect() const;
  NodeClass node_class(std::size_t node) const { return classes_[node]; }
  NodeMask class_mask(NodeClass c) const;

  const Rat& determinant() const;
  bool n_correct() const { return determinant() != 0; }
  /// Throws NotCorrect for singular sets.
  const BivarPoly& fundamental(std::size_t node) const;
  /// Throws NotFullyFactorable.
  const FundamentalFactorization& factorization(std::size_t node) const;
  /// nullopt when the node's fundamental polynomial factors completely.
  const std::optional<FactorizationFailure>& factorization_failure(std::size_t node) const;
  bool is_gc() const;

 private:
  void ensure_basis() const;
  void ensure_factorization(std::size_t node) const;

  NodeSet set_;
  Arrangement arrangement_;
  NodeMask all_;
  std::vector<std::size_t> maximal_ids_;
  std::vector<NodeClass> classes_;

  mutable std::optional<Rat> determinant_;
  mutable std::vector<BivarPoly> fundamentals_;
  mutable std::vector<std::optional<FundamentalFactorization>> factorizations_;
  mutable std::vector<std::optional<FactorizationFailure>> failures_;
  mutable std::vector<bool> factored_;
};

std::vector<Line> maximal_lines(const NodeSet& X);

AnalysisReport analyze(const GcContext& ctx);
AnalysisReport analyze(const NodeSet& X);

LineProfile line_profile(const GcContext& ctx, const Line& l);

/// Peels line factors off the fundamental polynomial of A, trying the lines
/// through at least two nodes of X \ {A} in canonical order. Throws
/// NotFullyFactorable when a nonconstant residual remains.
FundamentalFactorization factor_fundamental(const GcContext& ctx, const Point& A);
FundamentalFactorization factor_fundamental(const NodeSet& X, const Point& A);

/// Same peeling with an explicit candidate order, used to show that the
/// multiset of factors does not depend on it.
FundamentalFactorization factor_with_order(const BivarPoly& p, const Point& A, std::span<const Line> candidates);

bool is_gc(const NodeSet& X);

}  // namespace gcn
