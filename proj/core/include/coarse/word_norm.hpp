#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "coarse/norm.hpp"
#include "coarse/reduced_word.hpp"

namespace coarse {

struct SearchLimits {
  unsigned max_n = 6;            // largest factor count tried
  unsigned max_conj_len = 3;     // conjugator length bound
  std::uint64_t node_budget = 2'000'000; // per query, expansions
};

/// One certified factor g^{-1} c g with c a difference-set word, possibly
/// times the distinguished point or its inverse.
struct WordFactor {
  ReducedWord conjugator;
  ReducedWord core;
  ReducedWord value() const { return core.conjugated_by(conjugator); }
};

struct WordNormReport {
  NormResult result;                  // method Search
  unsigned lower = 0;                 // abelianization bound
  bool lower_unreachable = false;     // abelian image outside every grade
  std::optional<unsigned> upper;      // least factor count found
  std::vector<WordFactor> certificate;
  bool budget_hit = false;
  std::uint64_t nodes = 0;
};

/// Two-sided norm bounds in the free group over the window. The lower bound
/// is the exact A_p norm of the abelianization (a homomorphic image of any
/// factorization). The upper bound is an iterative-deepening search over
/// products of conjugated difference-set factors with bounded conjugators,
/// admissibly pruned by the abelian bound; a found certificate re-multiplies
/// to the queried word. Exact only when the bounds meet.
class WordNormContext {
public:
  WordNormContext(std::shared_ptr<ApNormContext> ap, SearchLimits limits);

  WordNormReport bounds(const ReducedWord& w, unsigned r);

  /// Deduplicated conjugated factors at radius r, shortlex by value.
  const std::vector<WordFactor>& factor_pool(unsigned r);

  const SearchLimits& limits() const { return limits_; }
  ApNormContext& ap() { return *ap_; }

private:
  unsigned abelian_lower(const ReducedWord& w, unsigned r, bool& unreachable);

  std::shared_ptr<ApNormContext> ap_;
  SearchLimits limits_;
  std::map<unsigned, std::vector<WordFactor>> pools_;
};

} // namespace coarse
