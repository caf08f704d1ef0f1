#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coarse/flip_group.hpp"
#include "coarse/graded_base.hpp"
#include "coarse/group_window.hpp"

namespace coarse {

GroupOps<FlipElement> flip_group_ops(int n);

/// Every element of the truncated semidirect product, identity first:
/// non-flipped elements in ascending bit order, then the flipped ones.
std::shared_ptr<const GroupWindow<FlipElement>> flip_group_window(int n);

/// The descending chain H_0 > H_{-1} > ... as an increasing graded base:
/// grade j holds the non-flipped elements with support in [-j, N]. Flip
/// components are never members; positive-m subgroups are subsumed by H_0.
GradedBase<FlipElement> flip_example_base(int n, unsigned max_grade_j);

struct ObstructionReport {
  bool pass = false;
  std::size_t vectors_checked = 0;
  std::size_t splits_found = 0;
  std::vector<std::string> failures;       // vectors with no split
  std::string example_split;               // one rendered nontrivial split
};

/// H_0 + phi H_0 phi covers the whole truncated vector group: every vector
/// splits into a nonnegative-support part plus a nonpositive-support part,
/// verified by scanning all candidates. Consequently any invariant ideal
/// containing H_0 and closed under differences contains every truncated
/// vector, which is the windowed form of the non-extension obstruction.
ObstructionReport flip_obstruction_check(int n);

} // namespace coarse
