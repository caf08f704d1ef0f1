#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "coarse/entourage.hpp"

namespace coarse {

using CompBoundFn = std::function<unsigned(unsigned, unsigned)>;

/// Countable monotone filtration of entourages: the base of a coarse
/// structure presented level by level. Levels are materialized up to a
/// radius where they stabilize ("saturated"); on a finite window every
/// filtration we construct saturates, so querying past the end is exact.
///
/// comp_bound is carried as data: the declared radius that dominates a
/// composition of two levels. Constructors validate it on the window
/// instead of trusting it (skipped above kValidationWindowLimit points,
/// where the cubic check would dominate the run).
class Filtration {
public:
  static constexpr std::size_t kValidationWindowLimit = 150;

  static Filtration from_levels(std::vector<Entourage> levels, CompBoundFn comp_bound,
                                bool saturated, bool validate = true);

  const Entourage& level(unsigned r) const;
  unsigned materialized_radius() const { return static_cast<unsigned>(levels_.size() - 1); }
  bool saturated() const { return saturated_; }
  bool symmetric() const { return symmetric_; }
  unsigned comp_bound(unsigned r, unsigned s) const { return comp_bound_(r, s); }
  const CompBoundFn& comp_bound_fn() const { return comp_bound_; }
  const WindowPtr& window() const { return levels_.front().window(); }

private:
  Filtration(std::vector<Entourage> levels, CompBoundFn comp_bound, bool saturated);

  std::vector<Entourage> levels_;
  CompBoundFn comp_bound_;
  bool saturated_;
  bool symmetric_;
};

/// Integer metric on a window given as a dense matrix, d[x][y].
using MetricTable = std::vector<std::vector<unsigned>>;

/// Filtration with levels {d <= r}; validates the metric axioms and throws
/// with a witness pair/triple on violation. comp_bound(r,s) = r+s.
Filtration metric_filtration(WindowPtr w, const MetricTable& d);

/// Convenience: |i-j| on an integer path window.
Filtration path_filtration(std::size_t n);

/// L1 metric on a grid window.
Filtration grid_filtration(std::size_t rows, std::size_t cols);

/// One level: the full relation. The bounded connected coarse structure.
Filtration bounded_filtration(WindowPtr w);

/// Constant diagonal levels; disconnected unless the window is a point.
Filtration discrete_filtration(WindowPtr w);

/// Subspace filtration on a nonempty subset of the window (new window made
/// from the selected labels, order induced).
Filtration restrict(const Filtration& f, std::span<const PointId> subset);

/// Product coarse structure: componentwise membership per level, comp_bound
/// the pointwise max of the factors'.
Filtration product(const Filtration& a, const Filtration& b);

struct ConnectivityResult {
  bool connected = false;
  std::optional<unsigned> radius;                       // smallest covering radius
  std::optional<std::pair<PointId, PointId>> witness;   // pair in no tested level
};
ConnectivityResult is_connected(const Filtration& f);

bool is_bounded(const Filtration& f, std::span<const PointId> y);

struct LargenessResult {
  bool large = false;
  std::optional<unsigned> radius;
  std::optional<PointId> uncovered;
};
LargenessResult is_large(const Filtration& f, std::span<const PointId> y);

} // namespace coarse
