#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// Index into a doubly-graded ideal base. Both components are monotone:
/// enlarging either never removes members. What the components mean is
/// per-kind (summand count and radius for the difference-set bases, prefix
/// bound and inner grade for the extension base, chain position for the
/// flip example, which ignores r).
struct Grade {
  unsigned n = 0;
  unsigned r = 0;

  bool operator==(const Grade&) const = default;
  auto operator<=>(const Grade&) const = default;
  bool dominates(const Grade& g) const { return n >= g.n && r >= g.r; }
  std::string to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(r) + ")";
  }
};

/// Intensional presentation of a group ideal: a membership decision
/// procedure graded by (n, r), never a materialized family. Downward
/// closure under subsets is implicit in the per-element reading. The
/// enumerate hook is set only for kinds whose grade sets fit in memory;
/// checkers fall back to caller-supplied samples otherwise.
template <class G>
struct GradedBase {
  std::string kind;
  std::function<bool(const G&, Grade)> member;
  std::function<std::vector<G>(Grade)> enumerate; // may be empty
  Grade max_grade;                                // declared tested bounds, inclusive

  /// Predicted grade containing a - b for members of the argument grades;
  /// empty means "search the tested grades".
  std::function<std::optional<Grade>(Grade, Grade)> difference_grade;

  bool enumerable() const { return static_cast<bool>(enumerate); }
};

/// Grades (0,0)..(max) in n-major order, r varying fastest.
inline std::vector<Grade> grade_range(Grade max) {
  std::vector<Grade> out;
  for (unsigned n = 0; n <= max.n; ++n)
    for (unsigned r = 0; r <= max.r; ++r) out.push_back({n, r});
  return out;
}

/// First tested grade containing g, scanning by total order n+r then n.
template <class G>
std::optional<Grade> first_containing_grade(const GradedBase<G>& base, const G& g,
                                            Grade max) {
  for (unsigned total = 0; total <= max.n + max.r; ++total)
    for (unsigned n = 0; n <= std::min(total, max.n); ++n) {
      const unsigned r = total - n;
      if (r > max.r) continue;
      if (base.member(g, Grade{n, r})) return Grade{n, r};
    }
  return std::nullopt;
}

} // namespace coarse
