#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coarse/maps.hpp"
#include "coarse/norm.hpp"

namespace coarse {

struct UniversalReport {
  bool pass = false;
  bool premap_coarse = false;            // f itself is a coarse map into the target
  std::optional<std::string> premap_witness;
  /// rows (n, r, n', r'): the target grade found for each source grade
  std::vector<std::array<unsigned, 4>> modulus;
  std::optional<std::string> counterexample;
  Grade source_range, target_range;
};

/// The extension property at window scale: images[i] is f(x_i) in the target
/// group A_p(target window). Extends f to the homomorphism a -> sum of
/// m_i f(x_i), then for every source grade finds a target grade containing
/// the image of the full grade set, scanning radii outward. Counterexamples
/// are values, not errors.
UniversalReport universal_extension_check(const std::vector<ApElement>& images,
                                          std::shared_ptr<ApNormContext> source,
                                          std::shared_ptr<ApNormContext> target,
                                          Grade source_range, Grade target_range);

} // namespace coarse
