#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coarse/ap_element.hpp"
#include "coarse/window.hpp"

namespace coarse {

/// Freely reduced word over the alphabet X u X^{-1}. Reduction is eager, so
/// equality in the free group is sequence comparison.
class ReducedWord {
public:
  struct Letter {
    PointId point;
    std::int8_t sign; // +1 or -1
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
  };

  ReducedWord() = default; // identity
  static ReducedWord identity() { return ReducedWord(); }
  static ReducedWord generator(PointId x, int sign = +1);
  static ReducedWord from_letters(std::span<const Letter> letters); // reduces

  ReducedWord multiply(const ReducedWord& v) const;
  ReducedWord inverse() const;
  /// g^{-1} * this * g.
  ReducedWord conjugated_by(const ReducedWord& g) const;
  ReducedWord cyclically_reduced() const;

  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Image under the homomorphism extending id: X -> X into A_p over the
  /// same window: exponent sums mod p.
  ApElement abelianized(unsigned p) const;

  std::string to_string(const Window& w) const; // "x0 x1^-1", identity "e"

  bool operator==(const ReducedWord&) const = default;
  auto operator<=>(const ReducedWord&) const = default;

private:
  std::vector<Letter> letters_;
};

ReducedWord word_multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord word_invert(const ReducedWord& u);
ApElement abelianize(const ReducedWord& w, unsigned p);

/// length-lex order used wherever words are enumerated deterministically
bool shortlex_less(const ReducedWord& a, const ReducedWord& b);

/// All reduced words of length <= max_len over an n-point alphabet, in
/// shortlex order starting with the identity.
std::vector<ReducedWord> enumerate_reduced_words(std::size_t points, std::size_t max_len);

} // namespace coarse
