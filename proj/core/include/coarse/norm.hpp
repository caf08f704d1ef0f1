#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coarse/ap_element.hpp"
#include "coarse/filtration.hpp"
#include "coarse/graded_base.hpp"
#include "coarse/matching.hpp"
#include "coarse/reduced_word.hpp"

namespace coarse {

/// Outcome of a norm query: the minimal summand count n at which an element
/// enters the graded base at the queried radius.
struct NormResult {
  enum class Status { Exact, Interval, NotWithinLimits };
  enum class Method { Oracle, TJoin, Search };

  Status status = Status::NotWithinLimits;
  unsigned lo = 0;
  std::optional<unsigned> hi; // set for Exact (== lo) and Interval
  unsigned radius = 0;
  Method method = Method::Oracle;

  static NormResult exact(unsigned n, unsigned r, Method m) {
    return {Status::Exact, n, n, r, m};
  }
  static NormResult interval(unsigned lo, unsigned hi, unsigned r, Method m) {
    return {lo == hi ? Status::Exact : Status::Interval, lo, hi, r, m};
  }
  static NormResult not_within_limits(unsigned r, Method m, unsigned lo = 0) {
    return {Status::NotWithinLimits, lo, std::nullopt, r, m};
  }

  bool exact_value(unsigned& out) const {
    if (status != Status::Exact) return false;
    out = lo;
    return true;
  }
  std::string status_string() const;
  std::string method_string() const;
};

/// a - augmentation(a) * z: the forced shift into the augmentation kernel.
/// Only this shift can witness membership, since every difference-set sum
/// has augmentation zero while i*z does not for 0 < i < p.
ApElement z_shift_adjusted(const ApElement& a, PointId z);

/// The difference-set generators over the window at radius r: x - y over the
/// symmetrized level. Contains 0 (diagonal pairs); deduplicated, code order.
std::vector<ApElement> ap_difference_set(const Filtration& f, unsigned r, unsigned p);

/// Word generators x y^{-1} over the symmetrized level at radius r,
/// deduplicated, shortlex order (contains the identity).
std::vector<ReducedWord> word_difference_set(const Filtration& f, unsigned r);

/// Norm engine for A_p over a windowed coarse space: owns the codec, the
/// breadth-first distance tables over the full group (the ground-truth
/// oracle) and the window-graph shortest paths backing the p = 2 T-join
/// solver. The two routes share nothing past the filtration, so their
/// agreement is a real check.
class ApNormContext {
public:
  ApNormContext(Filtration f, unsigned p, PointId z,
                std::uint64_t enum_budget = UINT64_C(1) << 20);

  const Filtration& filtration() const { return f_; }
  unsigned p() const { return codec_.p(); }
  PointId z() const { return z_; }
  const ApCodec& codec() const { return codec_; }
  const WindowPtr& window() const { return f_.window(); }

  /// Exact minimal n with a in Y_{n, eps_r} + {0, z, .., (p-1)z}, by
  /// breadth-first closure of the whole group under the generators;
  /// NotWithinLimits when the adjusted element is unreachable.
  NormResult oracle(const ApElement& a, unsigned r);

  /// p = 2 solver: minimum-weight perfect matching of the adjusted support
  /// under the eps_r-graph path metric (the unit-weight T-join value).
  /// Falls back to the oracle for p != 2.
  NormResult tjoin(const ApElement& a, unsigned r);

  /// Membership of a in the grade-(n, r) base set, by oracle.
  bool member(const ApElement& a, Grade g);

  /// Distances from 0 over the whole group at radius r (-1 unreachable).
  const std::vector<std::int32_t>& distance_table(unsigned r);

  /// Pairwise point distances in the eps_r graph (-1 disconnected).
  const std::vector<std::vector<std::int32_t>>& point_distances(unsigned r);

private:
  Filtration f_;
  PointId z_;
  ApCodec codec_;
  std::map<unsigned, std::vector<std::int32_t>> dist_tables_;
  std::map<unsigned, std::vector<std::vector<std::int32_t>>> point_dists_;
};

/// Spec surface: membership of a in Y_{n, eps_r} + {0, z, ..., (p-1)z}.
bool ap_ideal_member(ApNormContext& ctx, const ApElement& a, unsigned n, unsigned r);

/// The graded base of Lemma-style difference sets over A_p(window), with the
/// exact composition prediction (n+n', comp_bound(r,r')).
GradedBase<ApElement> ap_y_base(std::shared_ptr<ApNormContext> ctx, Grade max_grade);

/// Pullback of the A_p base through abelianization: the decidable group
/// ideal on the free group over the window.
GradedBase<ReducedWord> pullback_base(std::shared_ptr<ApNormContext> ctx,
                                      Grade max_grade);

/// Prefix sets of the enumeration order: the windowed [G]^{<omega}.
GradedBase<ApElement> finite_sets_base(std::shared_ptr<ApNormContext> ctx);

/// Every subset bounded: the windowed P_G.
GradedBase<ApElement> all_subsets_base(unsigned p, Grade max_grade);

struct RestrictionDiscrepancy {
  unsigned r = 0, n = 0;
  PointId x = 0, y = 0;
  bool in_relation_power = false; // the side that held
};

struct RestrictionReport {
  bool pass = true;
  unsigned rmax = 0, nmax = 0;
  std::size_t pairs_checked = 0;
  std::vector<RestrictionDiscrepancy> discrepancies;
};

/// The restriction theorem at window scale, both directions, exhaustively:
/// norm(x - y) <= n iff (x, y) lies in the n-fold composition of level r.
RestrictionReport restriction_check(ApNormContext& ctx, unsigned rmax, unsigned nmax);

} // namespace coarse
