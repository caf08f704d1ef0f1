#pragma once

#include <vector>

#include "coarse/norm.hpp"

namespace coarse {

struct GrowthRow {
  unsigned m = 0;                 // half the window size
  unsigned full_support_norm = 0; // matching value of the all-ones element
  unsigned max_norm = 0;          // over the whole group, by oracle
};

/// Norm growth over bounded 2m-point windows in A_2: the full-support
/// element needs m summands even though the space itself is bounded, which
/// is the windowed contrast between a bounded infinite space and the
/// one-point space it is coarsely equivalent to.
std::vector<GrowthRow> boundedness_growth(unsigned m_max, unsigned p = 2);

/// Largest norm in A_p over a single point (expected 0: the whole cyclic
/// group sits in the bottom grade).
unsigned one_point_max_norm(unsigned p);

} // namespace coarse
