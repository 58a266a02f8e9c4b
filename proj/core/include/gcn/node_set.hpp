#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gcn/geom.hpp"

namespace gcn {

/// Largest supported degree. C(10,2) = 45 nodes keeps subsets representable
/// as 64-bit masks and exact determinants at desk scale.
inline constexpr unsigned kMaxDegree = 8;

constexpr std::size_t binomial2(std::size_t m) { return m * (m - 1) / 2; }

/// dim of the space of bivariate polynomials of total degree <= n.
constexpr std::size_t node_count_for_degree(unsigned n) { return binomial2(n + 2); }

/// A degree-tagged node set: C(n+2,2) distinct points, sorted, with no n+2 of
/// them collinear. Construction validates all three conditions.
class NodeSet {
 public:
  NodeSet(unsigned degree, std::vector<Point> nodes);

  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const Point> nodes() const noexcept { return nodes_; }
  const Point& operator[](std::size_t i) const { return nodes_[i]; }

  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  struct Trusted {};
  NodeSet(Trusted, unsigned degree, std::vector<Point> nodes)
      : degree_(degree), nodes_(std::move(nodes)) {}
  friend class GcContext;

  unsigned degree_;
  std::vector<Point> nodes_;
};

}  // namespace gcn
