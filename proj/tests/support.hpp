#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "gcn/constructors.hpp"
#include "gcn/error.hpp"

namespace gcn::testing {

inline std::vector<Line> class_lines(const FamilyInstance& inst, std::string_view cls) {
  std::vector<Line> out;
  for (const auto& cl : family_class_lines(inst)) {
    if (cl.cls == cls) out.push_back(cl.line);
  }
  return out;
}

inline std::size_t choose2(std::size_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

struct Coincident {
  FamilyInstance instance;
  Line line;  // the line carrying the forced extra node(s)
};

// Defect-2 set in which the join of lambda_0 and lambda_1 also passes through
// the node where lambda_2 meets the third O-line.
inline Coincident defect_two_with_hat(unsigned n, std::uint64_t seed) {
  auto spec = std::get<Defect2Spec>(generate(Family::DefectTwo, n, seed).provenance);
  const auto& L = spec.maximal_seed_lines.lines;
  const Line join = line_through(*intersect(L[0], spec.o_lines[1]), *intersect(L[1], spec.o_lines[0]));
  spec.o_lines[2] = line_through(spec.center, *intersect(join, L[2]));
  spec.drop_choice = {0, 1, 1, 2};
  for (unsigned i = 4; i < n; ++i) spec.drop_choice.push_back(i % 3);
  return {defect_two_from_spec(n, spec), join};
}

// Defect-3 set in which extra maximal lines pass through the points where the
// line joining D_0 to lambda_3 on the first OO-line meets the other OO-lines.
inline Coincident defect_three_with_hats(unsigned n, std::uint64_t seed, unsigned hats) {
  auto spec = std::get<Defect3Spec>(generate(Family::DefectThree, n, seed).provenance);
  auto& L = spec.maximal_seed_lines.lines;
  const auto& O = spec.o_nodes;
  const std::array<Line, 3> oo{line_through(O[1], O[2]), line_through(O[0], O[2]), line_through(O[0], O[1])};
  const Line ell = line_through(spec.d_nodes[0], *intersect(L[3], oo[0]));
  static const std::array<Point, 4> anchors{Point(make_rat(17, 3), make_rat(-29, 7)), Point(make_rat(-13, 5), make_rat(31, 11)),
                                            Point(make_rat(41, 9), make_rat(23, 4)), Point(make_rat(-37, 6), make_rat(-19, 13))};
  for (std::size_t shift = 0; shift < anchors.size(); ++shift) {
    for (unsigned h = 0; h < hats; ++h)
      L[4 + h] = line_through(*intersect(ell, oo[1 + h]), anchors[(shift + h) % anchors.size()]);
    try {
      return {defect_three_from_spec(n, spec), ell};
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::GenerationFailed, "no admissible coincident defect-3 configuration");
}

}  // namespace gcn::testing
