#pragma once

#include <string>

#include "coarse/errors.hpp"

namespace coarse {

/// The two group varieties this library computes in: abelian groups of a
/// prime exponent (exactly solvable) and the variety of all groups (norms
/// reported as certified intervals).
struct Variety {
  enum class Kind { AbelianExpP, AllGroups };

  Kind kind = Kind::AbelianExpP;
  unsigned p = 2; // meaningful for AbelianExpP; also the pullback prime for AllGroups

  static Variety abelian_exp(unsigned p) { return {Kind::AbelianExpP, p}; }
  static Variety all_groups(unsigned pullback_p = 2) {
    return {Kind::AllGroups, pullback_p};
  }

  bool abelian() const { return kind == Kind::AbelianExpP; }
  std::string name() const {
    return abelian() ? "abelian-exp-" + std::to_string(p) : "all-groups";
  }

  static Variety parse(const std::string& s);
};

} // namespace coarse
