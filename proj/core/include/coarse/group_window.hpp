#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coarse/entourage.hpp"
#include "coarse/filtration.hpp"
#include "coarse/graded_base.hpp"
#include "coarse/hom.hpp"

namespace coarse {

/// Enumerated finite sample of a (possibly infinite) group, identity first.
/// The element order is the deterministic order every derived artifact
/// inherits; as_window carries rendered labels so group samples can serve
/// as coarse-space windows.
template <class G>
struct GroupWindow {
  std::vector<G> elements;
  GroupOps<G> ops;
  std::function<std::string(const G&)> show;
  WindowPtr as_window;

  std::optional<PointId> index_of(const G& g) const {
    auto it = index_.find(show(g));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  static GroupWindow make(std::vector<G> elements, GroupOps<G> ops,
                          std::function<std::string(const G&)> show) {
    GroupWindow gw;
    gw.elements = std::move(elements);
    gw.ops = std::move(ops);
    gw.show = std::move(show);
    std::vector<std::string> labels;
    labels.reserve(gw.elements.size());
    for (const auto& g : gw.elements) labels.push_back(gw.show(g));
    gw.as_window = Window::from_labels(labels);
    for (PointId i = 0; i < labels.size(); ++i) gw.index_.emplace(labels[i], i);
    return gw;
  }

private:
  std::map<std::string, PointId> index_;
};

/// The action a group window induces on a coarse window. For the canonical
/// left-shift case the acted window is the group window itself. Actions that
/// leave the sample return nullopt and the pair is dropped, keeping windowed
/// entourages honest subsets of the infinite ones.
template <class G>
struct ActionStructure {
  WindowPtr acted_window;
  std::function<std::optional<PointId>(const G&, PointId)> act;
};

template <class G>
ActionStructure<G> left_shift_action(const GroupWindow<G>& gw) {
  return ActionStructure<G>{
      gw.as_window,
      [&gw](const G& g, PointId x) { return gw.index_of(gw.ops.op(g, gw.elements[x])); }};
}

/// eps_A = {(x, gx) : x in X, g in A} for A the grade's member set within the
/// group window, identity adjoined.
template <class G>
Entourage entourage_from_ideal(const GradedBase<G>& base, Grade grade,
                               const GroupWindow<G>& gw,
                               const ActionStructure<G>& action) {
  BitRel rel(action.acted_window->size());
  for (const G& g : gw.elements) {
    if (!(g == gw.ops.identity) && !base.member(g, grade)) continue;
    for (PointId x = 0; x < action.acted_window->size(); ++x)
      if (auto y = action.act(g, x)) rel.set(x, *y);
  }
  return Entourage::from_rel(action.acted_window, std::move(rel));
}

/// Single-index filtration through the grade lattice along the diagonal
/// k -> (k, k); the diagonal is cofinal in the tested box, and for the
/// difference-set bases grade composition is dominated by index addition.
template <class G>
Filtration filtration_from_ideal(const GradedBase<G>& base, const GroupWindow<G>& gw,
                                 unsigned kmax, bool validate = true) {
  auto action = left_shift_action(gw);
  std::vector<Entourage> levels;
  for (unsigned k = 0; k <= kmax; ++k)
    levels.push_back(entourage_from_ideal(base, Grade{k, k}, gw, action));
  const bool saturated = levels.back().is_full();
  const bool do_validate =
      validate && gw.as_window->size() <= Filtration::kValidationWindowLimit;
  return Filtration::from_levels(
      std::move(levels), [](unsigned r, unsigned s) { return r + s; }, saturated,
      do_validate);
}

/// Extends a group ideal from a subgroup to an abelian ambient group: the
/// ideal with base A + B, A finite, B from the inner base. Grades are
/// (prefix bound m, inner diagonal grade k), where A_m is the first m+1
/// elements of the ambient enumeration; prefixes are cofinal in the finite
/// sets, so the graded presentation generates the same ideal. At m = 0 only
/// the identity is adjoined and the inner base is recovered on the subgroup.
/// Throws when the ambient window is not commutative.
template <class G>
GradedBase<G> extend_ideal_abelian(GradedBase<G> inner,
                                   std::shared_ptr<const GroupWindow<G>> ambient,
                                   std::function<bool(const G&)> in_subgroup,
                                   Grade max_grade) {
  for (std::size_t i = 0; i < ambient->elements.size(); ++i)
    for (std::size_t j = i + 1; j < ambient->elements.size(); ++j) {
      const G ab = ambient->ops.op(ambient->elements[i], ambient->elements[j]);
      const G ba = ambient->ops.op(ambient->elements[j], ambient->elements[i]);
      if (!(ab == ba))
        throw Error("ideal extension requires an abelian ambient group; " +
                    ambient->show(ambient->elements[i]) + " and " +
                    ambient->show(ambient->elements[j]) + " do not commute");
    }

  GradedBase<G> base;
  base.kind = "extension";
  base.max_grade = max_grade;
  auto member = [inner, ambient, in_subgroup](const G& x, Grade g) {
    const std::size_t limit =
        std::min<std::size_t>(g.n, ambient->elements.size() - 1);
    for (std::size_t i = 0; i <= limit; ++i) {
      const G diff = ambient->ops.difference(x, ambient->elements[i]);
      if (in_subgroup(diff) && inner.member(diff, Grade{g.r, g.r})) return true;
    }
    return false;
  };
  base.member = member;
  base.enumerate = [ambient, member](Grade g) {
    std::vector<G> out;
    for (const G& x : ambient->elements)
      if (member(x, g)) out.push_back(x);
    return out;
  };
  return base;
}

struct ShiftCoarseReport {
  bool pass = true;
  bool left = true;
  std::vector<unsigned> modulus_grade;    // per diagonal grade k, the k' found
  bool modulus_equals_input = true;
  std::size_t checks = 0;
  std::string witness;
};

/// The left (right) coarse-group condition over the window: for each
/// diagonal grade k there must be a k' <= kmax with
/// g B(x, eps_k) inside B(gx, eps_k') (resp. B(x, eps_k) g inside B(xg, eps_k')),
/// for all sampled shifts g and all window points x.
template <class G>
ShiftCoarseReport check_shift_coarse(const GradedBase<G>& base, const GroupWindow<G>& gw,
                                     bool left, unsigned kmax,
                                     const std::vector<G>& shifts) {
  ShiftCoarseReport rep;
  rep.left = left;
  auto action = left_shift_action(gw);
  std::vector<Entourage> levels;
  for (unsigned k = 0; k <= kmax; ++k)
    levels.push_back(entourage_from_ideal(base, Grade{k, k}, gw, action));

  const std::size_t n = gw.elements.size();
  for (unsigned k = 0; k <= kmax && rep.pass; ++k) {
    unsigned found = kmax + 1;
    std::string witness;
    for (unsigned kp = k; kp <= kmax; ++kp) {
      bool ok = true;
      for (std::size_t xi = 0; xi < n && ok; ++xi)
        for (const G& g : shifts) {
          for (PointId yi : levels[k].ball(static_cast<PointId>(xi))) {
            ++rep.checks;
            // shifted ball member and shifted center
            const G moved = left ? gw.ops.op(g, gw.elements[yi])
                                 : gw.ops.op(gw.elements[yi], g);
            const G center = left ? gw.ops.op(g, gw.elements[xi])
                                  : gw.ops.op(gw.elements[xi], g);
            const auto mi = gw.index_of(moved);
            const auto ci = gw.index_of(center);
            if (!mi || !ci) continue; // left the sample; not observable
            if (!levels[kp].contains(*ci, *mi)) {
              ok = false;
              witness = "grade " + std::to_string(k) + ": shift " + gw.show(g) +
                        " at " + gw.show(gw.elements[xi]) + " moves " +
                        gw.show(gw.elements[yi]) + " outside grade " +
                        std::to_string(kp);
              break;
            }
          }
          if (!ok) break;
        }
      if (ok) {
        found = kp;
        break;
      }
    }
    if (found > kmax) {
      rep.pass = false;
      rep.witness = witness;
    } else {
      rep.modulus_grade.push_back(found);
      if (found != k) rep.modulus_equals_input = false;
    }
  }
  return rep;
}

} // namespace coarse
