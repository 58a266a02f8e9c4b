#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcn/constructors.hpp"
#include "gcn/gcset.hpp"
#include "gcn/usage.hpp"

namespace gcn {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct Witness {
  std::string what;
  std::optional<Line> line;
  std::optional<Point> node;
  std::vector<std::pair<std::string, long>> counts;
};

struct TheoremReport {
  std::string theorem_id;
  std::string instance;
  CheckStatus status = CheckStatus::Pass;
  std::size_t cases_checked = 0;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;  // at most kWitnessBudget
  std::string skip_reason;
  std::vector<std::string> notes;  // measurements that are reported, not asserted
};

inline constexpr std::size_t kWitnessBudget = 10;

struct ReportBundle {
  std::string instance;
  std::vector<TheoremReport> reports;  // ordered by theorem id
  bool gm_conditional = false;         // degree above the range where GM is proved

  bool passed() const;
};

/// Ids accepted by Verifier::check, in report order.
std::span<const std::string_view> theorem_ids();

/// Runs theorem checkers against one node set. Line classifications for all
/// lines through two or more nodes are computed once and shared.
class Verifier {
 public:
  explicit Verifier(const GcContext& ctx, const FamilyInstance* provenance = nullptr, std::string instance = "input");
  ~Verifier();

  /// Throws InvalidProvenance for an unknown id.
  TheoremReport check(std::string_view id);
  ReportBundle run(std::span<const std::string> ids = {});

 private:
  struct State;
  std::unique_ptr<State> st_;
};

ReportBundle verify_instance(const FamilyInstance& inst, std::span<const std::string> ids = {});
ReportBundle verify_set(const NodeSet& X, std::span<const std::string> ids = {});

TheoremReport check_usage_cardinality(const NodeSet& X);
TheoremReport check_maximal_trace(const NodeSet& X);
TheoremReport check_proper_sets(const NodeSet& X);
TheoremReport check_defect_laws(const NodeSet& X);
TheoremReport check_node_profile(const NodeSet& X);
TheoremReport check_pappus_exclusion(const FamilyInstance& inst);
TheoremReport check_census(const NodeSet& X);

}  // namespace gcn
