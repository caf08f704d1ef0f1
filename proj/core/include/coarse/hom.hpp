#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "coarse/ap_element.hpp"
#include "coarse/reduced_word.hpp"

namespace coarse {

/// Abstract group operations, supplied wherever machinery is generic over
/// the carrier (A_p elements, reduced words, flip-group elements, codes).
template <class G>
struct GroupOps {
  G identity;
  std::function<G(const G&, const G&)> op;
  std::function<G(const G&)> invert;

  G conjugate(const G& a, const G& g) const { return op(op(invert(g), a), g); }
  G difference(const G& a, const G& b) const { return op(a, invert(b)); }
};

GroupOps<ApElement> ap_group_ops(unsigned p);
GroupOps<ReducedWord> word_group_ops();

/// Image of an A_p element under the homomorphism extending x_i -> images[i]
/// into an abelian exponent-p group: sum of m_i * images[i].
template <class G>
G hom_image(const ApElement& a, std::span<const G> images, const GroupOps<G>& ops) {
  G out = ops.identity;
  for (const auto& [x, m] : a.terms()) {
    const G& g = images[x];
    for (unsigned k = 0; k < m; ++k) out = ops.op(out, g);
  }
  return out;
}

/// Image of a reduced word under the homomorphism extending x_i -> images[i].
template <class G>
G hom_image(const ReducedWord& w, std::span<const G> images, const GroupOps<G>& ops) {
  G out = ops.identity;
  for (const auto& l : w.letters()) {
    const G& g = images[l.point];
    out = ops.op(out, l.sign > 0 ? g : ops.invert(g));
  }
  return out;
}

/// For an AbelianExpP target: p * images[i] must be the identity for every
/// alphabet point. Returns the offending label index if violated.
template <class G>
std::optional<std::size_t> exponent_violation(unsigned p, std::span<const G> images,
                                              const GroupOps<G>& ops) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    G acc = ops.identity;
    for (unsigned k = 0; k < p; ++k) acc = ops.op(acc, images[i]);
    if (!(acc == ops.identity)) return i;
  }
  return std::nullopt;
}

} // namespace coarse
