#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "coarse/graded_base.hpp"
#include "coarse/hom.hpp"

namespace coarse {

/// One failed sub-check with a rendered witness. Reports keep witnesses as
/// strings so they serialize uniformly across element types.
struct CheckFailure {
  std::string what;
  std::string witness;
};

struct GradeSamples {
  Grade grade;
  std::vector<std::size_t> element_ids; // indices into the sample pool
};

/// Elements plus the grades they were drawn from. Suites fill this either by
/// exhaustive enumeration (enumerable kinds) or from a seeded generator; the
/// reports state which.
template <class G>
struct SamplePool {
  std::vector<G> elements;
  std::vector<GradeSamples> by_grade;
  bool exhaustive = false;

  void add(Grade grade, std::vector<G> elems) {
    GradeSamples gs{grade, {}};
    for (auto& e : elems) {
      gs.element_ids.push_back(elements.size());
      elements.push_back(std::move(e));
    }
    by_grade.push_back(std::move(gs));
  }
};

/// Builds an exhaustive pool over all grades up to max (requires enumerate).
template <class G>
SamplePool<G> enumerate_pool(const GradedBase<G>& base, Grade max) {
  SamplePool<G> pool;
  pool.exhaustive = true;
  for (Grade g : grade_range(max)) pool.add(g, base.enumerate(g));
  return pool;
}

struct IdealAxiomReport {
  bool pass = true;
  std::string kind;
  Grade tested_max;
  bool exhaustive = false;
  std::size_t difference_checks = 0;
  std::size_t singleton_checks = 0;
  std::vector<CheckFailure> failures;
};

/// Checks the group-ideal axioms on the sampled grades: the identity lies in
/// the bottom grade, members declared in a grade are members, differences
/// a*b^{-1} land in the predicted grade (or some tested grade when the base
/// has no predictor), and every sampled element lies in some tested grade.
template <class G>
IdealAxiomReport check_ideal_axioms(const GradedBase<G>& base, const GroupOps<G>& ops,
                                    const SamplePool<G>& pool,
                                    const std::function<std::string(const G&)>& show) {
  IdealAxiomReport rep;
  rep.kind = base.kind;
  rep.tested_max = base.max_grade;
  rep.exhaustive = pool.exhaustive;

  if (!base.member(ops.identity, Grade{0, 0}))
    rep.failures.push_back({"identity not in bottom grade", show(ops.identity)});

  for (const auto& gs : pool.by_grade)
    for (std::size_t id : gs.element_ids)
      if (!base.member(pool.elements[id], gs.grade))
        rep.failures.push_back({"sample not a member of its declared grade " +
                                    gs.grade.to_string(),
                                show(pool.elements[id])});

  for (const auto& ga : pool.by_grade)
    for (const auto& gb : pool.by_grade)
      for (std::size_t ia : ga.element_ids)
        for (std::size_t ib : gb.element_ids) {
          const G diff = ops.difference(pool.elements[ia], pool.elements[ib]);
          ++rep.difference_checks;
          std::optional<Grade> predicted;
          if (base.difference_grade) predicted = base.difference_grade(ga.grade, gb.grade);
          if (predicted) {
            // member() is total in the grade, so predictions past the
            // sampled range are still checked
            if (!base.member(diff, *predicted))
              rep.failures.push_back(
                  {"difference escapes predicted grade " + predicted->to_string() +
                       " from " + ga.grade.to_string() + " - " + gb.grade.to_string(),
                   show(pool.elements[ia]) + " minus " + show(pool.elements[ib]) +
                       " = " + show(diff)});
          } else if (!first_containing_grade(base, diff, base.max_grade)) {
            rep.failures.push_back(
                {"difference in no tested grade up to " + base.max_grade.to_string(),
                 show(pool.elements[ia]) + " minus " + show(pool.elements[ib]) + " = " +
                     show(diff)});
          }
        }

  for (const auto& gs : pool.by_grade)
    for (std::size_t id : gs.element_ids) {
      ++rep.singleton_checks;
      if (!first_containing_grade(base, pool.elements[id], base.max_grade))
        rep.failures.push_back({"element in no tested grade (connectedness)",
                                show(pool.elements[id])});
    }

  rep.pass = rep.failures.empty();
  return rep;
}

/// Exhaustive monotonicity over the grade lattice: a member at g stays a
/// member at every dominating grade.
template <class G>
IdealAxiomReport check_monotone(const GradedBase<G>& base, const SamplePool<G>& pool,
                                const std::function<std::string(const G&)>& show) {
  IdealAxiomReport rep;
  rep.kind = base.kind;
  rep.tested_max = base.max_grade;
  rep.exhaustive = pool.exhaustive;
  const auto grades = grade_range(base.max_grade);
  for (const auto& gs : pool.by_grade)
    for (std::size_t id : gs.element_ids)
      for (Grade g : grades) {
        if (!g.dominates(gs.grade)) continue;
        ++rep.difference_checks;
        if (!base.member(pool.elements[id], g))
          rep.failures.push_back({"monotonicity broken: member at " +
                                      gs.grade.to_string() + " but not at " +
                                      g.to_string(),
                                  show(pool.elements[id])});
      }
  rep.pass = rep.failures.empty();
  return rep;
}

struct InvarianceReport {
  bool pass = true;
  std::string kind;
  Grade tested_max;
  std::size_t checks = 0;
  bool all_same_grade = true; // every conjugate stayed in its source grade
  std::vector<CheckFailure> failures;
};

/// Conjugation stability: for each sampled member and conjugator, g^{-1}ag
/// must lie in some tested grade. Abelian carriers trivially keep the same
/// grade; the flip example is the intended counterexample.
template <class G>
InvarianceReport check_invariance(const GradedBase<G>& base, const GroupOps<G>& ops,
                                  const SamplePool<G>& pool,
                                  const std::vector<G>& conjugators,
                                  const std::function<std::string(const G&)>& show) {
  InvarianceReport rep;
  rep.kind = base.kind;
  rep.tested_max = base.max_grade;
  for (const auto& gs : pool.by_grade)
    for (std::size_t id : gs.element_ids)
      for (const G& g : conjugators) {
        const G conj = ops.conjugate(pool.elements[id], g);
        ++rep.checks;
        if (!base.member(conj, gs.grade)) rep.all_same_grade = false;
        if (!first_containing_grade(base, conj, base.max_grade))
          rep.failures.push_back(
              {"conjugate in no tested grade up to " + base.max_grade.to_string(),
               show(pool.elements[id]) + " conjugated by " + show(g) + " = " +
                   show(conj)});
      }
  rep.pass = rep.failures.empty();
  return rep;
}

} // namespace coarse
