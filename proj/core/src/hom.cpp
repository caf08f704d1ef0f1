#include "coarse/hom.hpp"

namespace coarse {

GroupOps<ApElement> ap_group_ops(unsigned p) {
  return GroupOps<ApElement>{
      ApElement::zero(p),
      [](const ApElement& a, const ApElement& b) { return a.add(b); },
      [](const ApElement& a) { return a.negated(); },
  };
}

GroupOps<ReducedWord> word_group_ops() {
  return GroupOps<ReducedWord>{
      ReducedWord::identity(),
      [](const ReducedWord& a, const ReducedWord& b) { return a.multiply(b); },
      [](const ReducedWord& a) { return a.inverse(); },
  };
}

} // namespace coarse
