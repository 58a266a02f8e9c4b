#include "gcn/node_set.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gcn/error.hpp"

namespace gcn {

NodeSet::NodeSet(unsigned degree, std::vector<Point> nodes) : degree_(degree), nodes_(std::move(nodes)) {
  if (degree_ > kMaxDegree) {
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(degree_) + " exceeds " +
                                                 std::to_string(kMaxDegree));
  }
  if (nodes_.size() != node_count_for_degree(degree_)) {
    throw Error(ErrorKind::SizeMismatch, "degree " + std::to_string(degree_) + " needs " +
                                             std::to_string(node_count_for_degree(degree_)) +
                                             " nodes, got " + std::to_string(nodes_.size()));
  }
  std::sort(nodes_.begin(), nodes_.end());
  if (auto dup = std::adjacent_find(nodes_.begin(), nodes_.end()); dup != nodes_.end()) {
    std::ostringstream os;
    os << "node " << *dup << " appears twice";
    throw Error(ErrorKind::DuplicateNode, os.str());
  }
  // A line with m nodes is produced by C(m,2) node pairs.
  std::map<Line, std::size_t> pairs;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      ++pairs[line_through(nodes_[i], nodes_[j])];
    }
  }
  const std::size_t limit = binomial2(degree_ + 2);
  for (const auto& [line, count] : pairs) {
    if (count >= limit) {
      std::ostringstream os;
      os << "line " << line << " carries at least " << degree_ + 2 << " nodes";
      throw Error(ErrorKind::TooManyCollinear, os.str());
    }
  }
}

std::optional<std::size_t> NodeSet::index_of(const Point& p) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p);
  if (it == nodes_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

}  // namespace gcn
