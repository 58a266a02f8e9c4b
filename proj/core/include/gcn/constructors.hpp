#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gcn/geom.hpp"
#include "gcn/node_set.hpp"

namespace gcn {

/// SplitMix64. Uniform draws use rejection, so sequences are identical on
/// every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::uint64_t state_;
};

struct GenerationOptions {
  long coefficient_bound = 50;
  unsigned max_retries = 10000;
};

enum class Family { ChungYao, CarnicerGasca, DefectTwo, DefectThree, Principal };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
/// Smallest supported degree of a family.
unsigned family_min_degree(Family f);

struct GeneralPositionLines {
  std::vector<Line> lines;
  std::uint64_t seed = 0;
};

struct ChungYaoSpec {
  GeneralPositionLines lines;
};

struct CarnicerGascaSpec {
  GeneralPositionLines lines;
  std::vector<Point> extras;  // extras[i] lies on lines.lines[i]
};

struct Defect2Spec {
  GeneralPositionLines maximal_seed_lines;
  Point center;
  std::array<Line, 3> o_lines{Line(1, 0, 0), Line(1, 0, 0), Line(1, 0, 0)};
  std::vector<unsigned> drop_choice;  // per maximal line, index into o_lines
};

struct Defect3Spec {
  GeneralPositionLines maximal_seed_lines;  // n-1 lines; D_i sits on the i-th
  std::array<Point, 3> d_nodes;
  std::array<Point, 3> o_nodes;
};

/// (x, y) -> (a11 x + a12 y + b1, a21 x + a22 y + b2).
struct AffineMap {
  Rat a11{1}, a12{0}, a21{0}, a22{1}, b1{0}, b2{0};

  Rat determinant() const { return a11 * a22 - a12 * a21; }
  Point apply(const Point& p) const;
  Line apply(const Line& l) const;
};

struct GplSpec {
  unsigned degree = 0;
  AffineMap transform;
  /// families[r][s]: images of x = s, y = s, x + y = n - s for r = 0, 1, 2.
  std::array<std::vector<Line>, 3> families;
};

using Provenance = std::variant<ChungYaoSpec, CarnicerGascaSpec, Defect2Spec, Defect3Spec, GplSpec>;

struct FamilyInstance {
  Family family;
  NodeSet nodes;
  Provenance provenance;
  std::uint64_t seed = 0;
};

/// "<family> n=<degree> seed=<seed>".
std::string describe(const FamilyInstance& inst);

/// n lines with no two parallel and no three concurrent.
GeneralPositionLines general_position_lines(std::size_t count, std::uint64_t seed,
                                            const GenerationOptions& opt = {});

NodeSet chung_yao(unsigned n, std::uint64_t seed, const GenerationOptions& opt = {});
NodeSet carnicer_gasca(unsigned n, std::uint64_t seed, const GenerationOptions& opt = {});
NodeSet defect_two(unsigned n, std::uint64_t seed, const GenerationOptions& opt = {});
NodeSet defect_three(unsigned n, std::uint64_t seed, const GenerationOptions& opt = {});
/// Throws SingularTransform for a non-invertible map.
NodeSet principal_lattice(unsigned n, const std::optional<AffineMap>& transform = std::nullopt);

/// Seeded generation with provenance. For the principal family a nonzero
/// seed draws a random invertible affine map and seed 0 gives PL_n itself.
FamilyInstance generate(Family f, unsigned n, std::uint64_t seed, const GenerationOptions& opt = {});

/// Builders from explicit specs; they run the same characterization checks
/// as the seeded constructors and throw CharacterizationViolated on failure.
FamilyInstance chung_yao_from_spec(unsigned n, const ChungYaoSpec& spec);
FamilyInstance carnicer_gasca_from_spec(unsigned n, const CarnicerGascaSpec& spec);
FamilyInstance defect_two_from_spec(unsigned n, const Defect2Spec& spec);
FamilyInstance defect_three_from_spec(unsigned n, const Defect3Spec& spec);
FamilyInstance principal_from_spec(unsigned n, const AffineMap& transform);

/// Lines of the family's used-line classes, derived from provenance.
struct ClassLine {
  std::string cls;
  Line line;
};
std::vector<ClassLine> family_class_lines(const FamilyInstance& inst);

}  // namespace gcn
