#include "coarse/filtration.hpp"

#include <algorithm>
#include <string>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

unsigned additive_bound(unsigned r, unsigned s) { return r + s; }

void validate_levels(const std::vector<Entourage>& levels, const CompBoundFn& cb,
                     bool saturated) {
  const auto& w = levels.front().window();
  for (const auto& e : levels)
    if (!same_window(e.window(), w)) throw Error("filtration levels on mixed windows");
  for (std::size_t r = 0; r + 1 < levels.size(); ++r)
    if (!levels[r].subset_of(levels[r + 1]))
      throw Error("filtration levels not monotone at radius " + std::to_string(r));
  if (w->size() > Filtration::kValidationWindowLimit) return;

  const unsigned rmax = static_cast<unsigned>(levels.size() - 1);
  for (unsigned r = 0; r <= rmax; ++r)
    for (unsigned s = 0; s <= rmax; ++s) {
      unsigned t = cb(r, s);
      if (t > rmax) {
        if (!saturated) continue; // not observable within the materialized range
        t = rmax;
      }
      if (!levels[r].compose(levels[s]).subset_of(levels[t]))
        throw Error("comp_bound violated at radii (" + std::to_string(r) + ", " +
                    std::to_string(s) + ")");
    }
  if (saturated && !levels.back().compose(levels.back()).subset_of(levels.back()))
    throw Error("saturated filtration not closed under composition");
}

} // namespace

Filtration::Filtration(std::vector<Entourage> levels, CompBoundFn comp_bound,
                       bool saturated)
    : levels_(std::move(levels)), comp_bound_(std::move(comp_bound)),
      saturated_(saturated) {
  symmetric_ = std::all_of(levels_.begin(), levels_.end(),
                           [](const Entourage& e) { return e.symmetric(); });
}

Filtration Filtration::from_levels(std::vector<Entourage> levels, CompBoundFn comp_bound,
                                   bool saturated, bool validate) {
  if (levels.empty()) throw Error("filtration needs at least one level");
  if (validate) validate_levels(levels, comp_bound, saturated);
  return Filtration(std::move(levels), std::move(comp_bound), saturated);
}

const Entourage& Filtration::level(unsigned r) const {
  if (r < levels_.size()) return levels_[r];
  if (saturated_) return levels_.back();
  throw Error("filtration level " + std::to_string(r) + " beyond materialized range " +
              std::to_string(materialized_radius()));
}

Filtration metric_filtration(WindowPtr w, const MetricTable& d) {
  const std::size_t n = w->size();
  if (d.size() != n) throw ConfigError("metric table size does not match window");
  unsigned diameter = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) throw ConfigError("metric table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if ((d[i][j] == 0) != (i == j))
        throw ConfigError("metric zero violation at (" + w->label(PointId(i)) + ", " +
                          w->label(PointId(j)) + ")");
      if (d[i][j] != d[j][i])
        throw ConfigError("metric symmetry violation at (" + w->label(PointId(i)) +
                          ", " + w->label(PointId(j)) + ")");
      diameter = std::max(diameter, d[i][j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d[i][j] + d[j][k] < d[i][k])
          throw ConfigError("triangle inequality violation at (" + w->label(PointId(i)) +
                            ", " + w->label(PointId(j)) + ", " + w->label(PointId(k)) +
                            ")");

  std::vector<Entourage> levels;
  levels.reserve(diameter + 1);
  for (unsigned r = 0; r <= diameter; ++r) {
    BitRel rel(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][j] <= r) rel.set(i, j);
    levels.push_back(Entourage::from_rel(w, std::move(rel)));
  }
  return Filtration::from_levels(std::move(levels), additive_bound, /*saturated=*/true);
}

Filtration path_filtration(std::size_t n) {
  auto w = Window::integer_path(n);
  MetricTable d(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = static_cast<unsigned>(i > j ? i - j : j - i);
  return metric_filtration(std::move(w), d);
}

Filtration grid_filtration(std::size_t rows, std::size_t cols) {
  auto w = Window::integer_grid(rows, cols);
  const std::size_t n = rows * cols;
  MetricTable d(n, std::vector<unsigned>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ai = a / cols, aj = a % cols, bi = b / cols, bj = b % cols;
      d[a][b] = static_cast<unsigned>((ai > bi ? ai - bi : bi - ai) +
                                      (aj > bj ? aj - bj : bj - aj));
    }
  return metric_filtration(std::move(w), d);
}

Filtration bounded_filtration(WindowPtr w) {
  std::vector<Entourage> levels{Entourage::full(std::move(w))};
  return Filtration::from_levels(std::move(levels), additive_bound, /*saturated=*/true);
}

Filtration discrete_filtration(WindowPtr w) {
  std::vector<Entourage> levels{Entourage::diagonal(std::move(w))};
  return Filtration::from_levels(std::move(levels), additive_bound, /*saturated=*/true);
}

Filtration restrict(const Filtration& f, std::span<const PointId> subset) {
  if (subset.empty()) throw Error("restrict: empty subset");
  const auto& w = f.window();
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (PointId x : subset) {
    if (x >= w->size()) throw Error("restrict: point outside window");
    labels.push_back(w->label(x));
  }
  auto sub = Window::from_labels(std::move(labels));
  std::vector<Entourage> levels;
  for (unsigned r = 0; r <= f.materialized_radius(); ++r) {
    BitRel rel(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = 0; j < subset.size(); ++j)
        if (f.level(r).contains(subset[i], subset[j])) rel.set(i, j);
    levels.push_back(Entourage::from_rel(sub, std::move(rel)));
  }
  return Filtration::from_levels(std::move(levels), f.comp_bound_fn(), f.saturated(),
                                 /*validate=*/false);
}

Filtration product(const Filtration& a, const Filtration& b) {
  const auto& wa = a.window();
  const auto& wb = b.window();
  std::vector<std::string> labels;
  labels.reserve(wa->size() * wb->size());
  for (const auto& la : wa->labels())
    for (const auto& lb : wb->labels()) labels.push_back("(" + la + "," + lb + ")");
  auto w = Window::from_labels(std::move(labels));

  const unsigned rmax = std::max(a.materialized_radius(), b.materialized_radius());
  const std::size_t nb = wb->size();
  std::vector<Entourage> levels;
  for (unsigned r = 0; r <= rmax; ++r) {
    BitRel rel(wa->size() * nb);
    const Entourage& ea = a.level(r);
    const Entourage& eb = b.level(r);
    for (PointId x1 = 0; x1 < wa->size(); ++x1)
      for (PointId y1 = 0; y1 < wa->size(); ++y1) {
        if (!ea.contains(x1, y1)) continue;
        for (PointId x2 = 0; x2 < nb; ++x2)
          for (PointId y2 = 0; y2 < nb; ++y2)
            if (eb.contains(x2, y2)) rel.set(x1 * nb + x2, y1 * nb + y2);
      }
    levels.push_back(Entourage::from_rel(w, std::move(rel)));
  }
  CompBoundFn cb = [fa = a.comp_bound_fn(), fb = b.comp_bound_fn()](unsigned r, unsigned s) {
    return std::max(fa(r, s), fb(r, s));
  };
  const bool validate = w->size() <= Filtration::kValidationWindowLimit;
  return Filtration::from_levels(std::move(levels), std::move(cb),
                                 a.saturated() && b.saturated(), validate);
}

ConnectivityResult is_connected(const Filtration& f) {
  ConnectivityResult out;
  for (unsigned r = 0; r <= f.materialized_radius(); ++r) {
    if (f.level(r).is_full()) {
      out.connected = true;
      out.radius = r;
      return out;
    }
  }
  const auto& last = f.level(f.materialized_radius());
  const std::size_t n = f.window()->size();
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y)
      if (!last.contains(x, y)) {
        out.witness = std::make_pair(x, y);
        return out;
      }
  return out;
}

bool is_bounded(const Filtration& f, std::span<const PointId> y) {
  if (y.empty()) return true;
  const auto& last = f.level(f.materialized_radius());
  const std::size_t n = f.window()->size();
  for (PointId x = 0; x < n; ++x) {
    bool all = true;
    for (PointId p : y)
      if (!last.contains(x, p)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

LargenessResult is_large(const Filtration& f, std::span<const PointId> y) {
  LargenessResult out;
  const std::size_t n = f.window()->size();
  for (unsigned r = 0; r <= f.materialized_radius(); ++r) {
    const Entourage& e = f.level(r);
    std::optional<PointId> uncovered;
    for (PointId x = 0; x < n && !uncovered; ++x) {
      bool covered = false;
      for (PointId p : y)
        if (e.contains(p, x)) {
          covered = true;
          break;
        }
      if (!covered) uncovered = x;
    }
    if (!uncovered) {
      out.large = true;
      out.radius = r;
      return out;
    }
    if (r == f.materialized_radius()) out.uncovered = uncovered;
  }
  return out;
}

} // namespace coarse
