#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarse/errors.hpp"

namespace coarse {

/// Element of the semidirect product H x| <phi> truncated to coordinates
/// -N..N, where H is a direct sum of order-2 cyclic groups indexed by Z and
/// phi reverses the index sign. The truncation keeps every computation
/// exact: constructing support outside -N..N is an error.
class FlipElement {
public:
  static FlipElement identity(int n) { return FlipElement(n, 0, false); }
  static FlipElement basis(int n, int index);  // e_index
  static FlipElement flip(int n) { return FlipElement(n, 0, true); } // (0, phi)
  static FlipElement from_support(int n, const std::vector<int>& indices, bool flipped);

  /// (v1, a1)(v2, a2) = (v1 + phi^{a1}(v2), a1 xor a2).
  FlipElement multiply(const FlipElement& other) const;
  FlipElement inverse() const;
  FlipElement conjugated_by(const FlipElement& g) const; // g^{-1} * this * g

  bool flipped() const { return flip_; }
  int window_bound() const { return n_; }
  bool is_identity() const { return bits_ == 0 && !flip_; }
  bool has_index(int index) const;
  std::vector<int> support() const; // ascending indices

  /// Smallest m with support contained in [m, N]; for the zero vector this
  /// is N (it lies in every H_m).
  int min_support() const;

  std::string to_string() const;

  bool operator==(const FlipElement&) const = default;
  auto operator<=>(const FlipElement&) const = default;

private:
  FlipElement(int n, std::uint64_t bits, bool flip) : n_(n), bits_(bits), flip_(flip) {}

  std::uint64_t reversed_bits() const;
  std::size_t slot(int index) const;

  int n_;               // coordinates run over [-n_, n_]
  std::uint64_t bits_;  // bit (index + n_) set when the coordinate is 1
  bool flip_;
};

FlipElement flip_multiply(const FlipElement& a, const FlipElement& b);

} // namespace coarse
