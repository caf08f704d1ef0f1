#include "coarse/matching.hpp"

#include <bit>
#include <limits>

#include "coarse/errors.hpp"

namespace coarse {

std::optional<MatchingResult> min_weight_perfect_matching(
    const std::vector<std::vector<std::int64_t>>& dist) {
  const std::size_t k = dist.size();
  if (k == 0) return MatchingResult{};
  if (k % 2 != 0) return std::nullopt;
  if (k > 20) throw Error("matching instance too large: " + std::to_string(k));

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::size_t full = std::size_t(1) << k;
  std::vector<std::int64_t> best(full, kInf);
  std::vector<unsigned> choice(full, 0); // partner picked for the lowest bit
  best[0] = 0;

  for (std::size_t s = 1; s < full; ++s) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(s));
    if (std::popcount(s) % 2 != 0) continue;
    for (unsigned j = i + 1; j < k; ++j) {
      if (!((s >> j) & 1)) continue;
      if (dist[i][j] < 0) continue;
      const std::size_t rest = s & ~(std::size_t(1) << i) & ~(std::size_t(1) << j);
      if (best[rest] >= kInf) continue;
      const std::int64_t cand = best[rest] + dist[i][j];
      if (cand < best[s]) {
        best[s] = cand;
        choice[s] = j;
      }
    }
  }

  if (best[full - 1] >= kInf) return std::nullopt;

  MatchingResult out;
  out.weight = best[full - 1];
  std::size_t s = full - 1;
  while (s) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(s));
    const unsigned j = choice[s];
    out.pairs.emplace_back(i, j);
    s &= ~(std::size_t(1) << i);
    s &= ~(std::size_t(1) << j);
  }
  return out;
}

} // namespace coarse
