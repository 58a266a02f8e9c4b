#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcn/constructors.hpp"
#include "gcn/gcset.hpp"

namespace gcn {

/// Nodes whose fundamental polynomial is divisible by l, tested directly on
/// each p*_A. This is the reference the reduction pipeline is checked against.
NodeMask used_mask_bruteforce(const GcContext& ctx, const Line& l);
std::vector<Point> used_nodes_bruteforce(const GcContext& ctx, const Line& l);
std::vector<Point> used_nodes_bruteforce(const NodeSet& X, const Line& l);

struct LoweringResult {
  Line line;
  NodeMask lowered_mask = 0;
  unsigned lowered_degree = 0;
  std::vector<Line> u1;                    // l-disjoint maximal lines
  std::vector<std::pair<Line, Line>> u2;   // l-adjoint pairs
};

/// One-step removal of every l-disjoint maximal line and every l-adjoint pair
/// of the subset `from` of ctx (the whole set by default). Identity when l is
/// maximal there. Throws TooFewNodes when l meets fewer than two nodes.
LoweringResult lowering(const GcContext& ctx, const Line& l);
LoweringResult lowering(const GcContext& ctx, const Line& l, NodeMask from);

enum class ReductionKind { Disjoint, Adjoint };

struct ReductionStep {
  ReductionKind kind;
  std::vector<Line> lines;  // one line, or the two lines of an adjoint pair
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  NodeMask terminal_mask = 0;
  unsigned terminal_degree = 0;

  unsigned depth() const { return static_cast<unsigned>(steps.size()); }
};

/// Order in which single reductions are applied after the lowering.
enum class ReductionPreference {
  DisjointFirstSmallest,  // default
  AdjointFirstLargest,    // used to test that the outcome does not depend on it
};

enum class LineKind { Maximal, Proper, ProperMinus, Unused };

struct LineClassification {
  LineKind kind = LineKind::Unused;
  unsigned r = 0;  // reduction depth for ProperMinus
  std::optional<LoweringResult> lowering;
  std::optional<ReductionTrace> trace;
  std::vector<Point> hat_2m;
  NodeMask terminal_mask = 0;  // set in which l ends up maximal (used lines)
};

/// "maximal", "proper", "proper_minus_<r>" or "unused".
std::string class_label(const LineClassification& c);

LineClassification classify_line(const GcContext& ctx, const Line& l,
                                 ReductionPreference pref = ReductionPreference::DisjointFirstSmallest);
LineClassification classify_line(const NodeSet& X, const Line& l);

/// Nodes of l in the lowered set lying on two of its maximal lines; empty for
/// maximal and proper lines.
std::vector<Point> hat_2m_nodes(const GcContext& ctx, const Line& l);

struct UsageReport {
  Line line;
  unsigned k = 0;
  unsigned r = 0;      // nodes of l on two maximal lines other than l
  unsigned r_hat = 0;  // hat 2m-nodes
  unsigned s = 0;      // #users = C(s,2); 0 when unused
  unsigned delta = 0;  // n + 1 - k
  NodeMask users_mask = 0;
  std::vector<Point> users;
  LineClassification classification;
  bool oracle_agrees = false;
};

/// Classification plus the derived usage quantities; never throws on an
/// oracle disagreement (see oracle_agrees).
UsageReport run_pipeline(const GcContext& ctx, const Line& l,
                         ReductionPreference pref = ReductionPreference::DisjointFirstSmallest);
/// As run_pipeline, but throws OracleMismatch when the two computations differ.
UsageReport used_nodes_pipeline(const GcContext& ctx, const Line& l);
UsageReport used_nodes_pipeline(const NodeSet& X, const Line& l);

/// run_pipeline over every line through at least two nodes, in Line order.
std::vector<UsageReport> all_line_reports(const GcContext& ctx);

struct CatalogEntry {
  Line line;
  std::size_t users = 0;
  std::string cls;  // family class, empty without provenance
};

struct UsedLineCatalog {
  std::vector<CatalogEntry> lines;  // Line order
  std::map<std::string, std::size_t> class_sizes;
  bool tagged = false;
  bool classes_disjoint = true;
  /// Used lines missing from the family classes, and class lines nobody uses.
  std::vector<Line> untagged;
  std::vector<Line> unused_class_lines;
};

UsedLineCatalog used_line_catalog(const GcContext& ctx, const FamilyInstance* provenance = nullptr);

struct UsageCensus {
  std::size_t total = 0;
  std::map<Line, std::size_t> per_line;
};

/// Line usages summed over all nodes, counted with multiplicity.
UsageCensus usage_census(const GcContext& ctx);

/// Closed-form census for a family split into class subtotals, in class order.
std::vector<std::pair<std::string, std::size_t>> family_census_formula(Family f, unsigned n);

}  // namespace gcn
