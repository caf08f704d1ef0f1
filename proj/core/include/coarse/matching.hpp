#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace coarse {

struct MatchingResult {
  std::int64_t weight = 0;
  std::vector<std::pair<unsigned, unsigned>> pairs;
};

/// Exact minimum-weight perfect matching on a complete graph of k vertices
/// (k even, k <= 20) given a dense distance matrix; entries < 0 mean
/// "no path" and make any pairing using them infeasible. Subset DP, not
/// blossom: the odd sets this library matches are element supports, at most
/// window width wide.
std::optional<MatchingResult> min_weight_perfect_matching(
    const std::vector<std::vector<std::int64_t>>& dist);

} // namespace coarse
