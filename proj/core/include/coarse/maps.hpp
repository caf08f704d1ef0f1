#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarse/filtration.hpp"

namespace coarse {

/// Total map between windows, by point index: image[x] is f(x).
using PointMap = std::vector<PointId>;

/// The radius assignment of a bornologous map on a tested range:
/// image_radius[r] is the least r' with f(level r) inside level' r'.
struct Modulus {
  std::vector<unsigned> image_radius;

  unsigned at(unsigned r) const { return image_radius.at(r); }
  unsigned range() const { return static_cast<unsigned>(image_radius.size()) - 1; }
  bool monotone() const;
};

struct ModulusFailure {
  unsigned radius = 0;      // source level with no image level
  PointId x = 0, y = 0;     // witness pair in that level
};

/// Least-radius modulus of f on levels r <= range, or a counterexample pair.
/// Failure is a value: at window scale a map may genuinely admit no modulus
/// within the target's tested levels.
struct ModulusResult {
  std::optional<Modulus> modulus;
  std::optional<ModulusFailure> failure;
  bool ok() const { return modulus.has_value(); }
};

ModulusResult coarse_modulus(const PointMap& f, const Filtration& source,
                             const Filtration& target, unsigned range);

struct AsymorphismReport {
  bool pass = false;
  bool bijective = false;
  std::optional<std::pair<PointId, PointId>> collision; // two points, same image
  ModulusResult forward;
  ModulusResult backward;
};

/// Verifies f is a bijection coarse in both directions on the tested range.
AsymorphismReport check_asymorphism(const PointMap& f, const Filtration& source,
                                    const Filtration& target, unsigned range);

struct CoarseEquivalenceReport {
  bool pass = false;
  LargenessResult large_source;
  LargenessResult large_target;
  AsymorphismReport asym; // between the two restricted subspaces
};

/// Witness checker for coarse equivalence: large subsets on both sides plus
/// an asymorphism between the subspaces. Not a decision procedure.
CoarseEquivalenceReport check_coarse_equivalence_witness(
    std::span<const PointId> y_source, std::span<const PointId> y_target,
    const PointMap& f_on_subsets, const Filtration& source, const Filtration& target,
    unsigned range);

} // namespace coarse
