#pragma once

#include <span>
#include <utility>
#include <vector>

#include "coarse/bitrel.hpp"
#include "coarse/window.hpp"

namespace coarse {

/// Reflexive relation on a window. The diagonal is adjoined on construction
/// and every operation preserves it, so an Entourage is always a legal
/// entourage of the diagonal.
class Entourage {
public:
  static Entourage diagonal(WindowPtr w);
  static Entourage full(WindowPtr w);
  static Entourage from_pairs(WindowPtr w,
                              std::span<const std::pair<PointId, PointId>> pairs);
  static Entourage from_rel(WindowPtr w, BitRel rel); // diagonal adjoined

  bool contains(PointId x, PointId y) const { return rel_.test(x, y); }

  /// {(x,y) : exists z with (x,z) here and (z,y) in d}.
  Entourage compose(const Entourage& d) const;
  Entourage inverse() const;
  Entourage symmetrized() const;           // union with the inverse
  Entourage united(const Entourage& d) const;
  Entourage intersected(const Entourage& d) const;
  Entourage power(unsigned n) const;       // n-fold composition, power(0) = diagonal

  bool subset_of(const Entourage& d) const { return rel_.subset_of(d.rel_); }
  bool symmetric() const;
  bool is_full() const { return pair_count() == window_->size() * window_->size(); }

  /// {y : (x,y) in this}, ascending; always contains x.
  std::vector<PointId> ball(PointId x) const;

  std::vector<std::pair<PointId, PointId>> pairs() const; // lexicographic
  std::size_t pair_count() const { return rel_.count(); }

  const WindowPtr& window() const { return window_; }
  const BitRel& rel() const { return rel_; }

  bool operator==(const Entourage& d) const;

private:
  Entourage(WindowPtr w, BitRel rel) : window_(std::move(w)), rel_(std::move(rel)) {}

  WindowPtr window_;
  BitRel rel_;
};

/// Free-function spellings of the relation algebra.
Entourage compose(const Entourage& e, const Entourage& d);
Entourage inverse(const Entourage& e);
Entourage symmetrize(const Entourage& e);
std::vector<PointId> ball(PointId x, const Entourage& e);

} // namespace coarse
