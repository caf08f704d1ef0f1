#include "coarse/flip_group.hpp"

namespace coarse {

namespace {

void check_bound(int n) {
  if (n < 0 || n > 31) throw Error("flip window bound must be in [0, 31]");
}

} // namespace

FlipElement FlipElement::basis(int n, int index) {
  check_bound(n);
  if (index < -n || index > n)
    throw Error("flip index " + std::to_string(index) + " outside window [-" +
                std::to_string(n) + ", " + std::to_string(n) + "]");
  return FlipElement(n, UINT64_C(1) << (index + n), false);
}

FlipElement FlipElement::from_support(int n, const std::vector<int>& indices,
                                      bool flipped) {
  check_bound(n);
  FlipElement out(n, 0, flipped);
  for (int i : indices) {
    if (i < -n || i > n)
      throw Error("flip index " + std::to_string(i) + " outside window");
    out.bits_ ^= UINT64_C(1) << (i + n);
  }
  return out;
}

std::uint64_t FlipElement::reversed_bits() const {
  std::uint64_t out = 0;
  for (int i = -n_; i <= n_; ++i)
    if ((bits_ >> (i + n_)) & 1u) out |= UINT64_C(1) << (-i + n_);
  return out;
}

FlipElement FlipElement::multiply(const FlipElement& other) const {
  if (n_ != other.n_) throw Error("flip window bound mismatch");
  const std::uint64_t moved = flip_ ? other.reversed_bits() : other.bits_;
  return FlipElement(n_, bits_ ^ moved, flip_ != other.flip_);
}

FlipElement FlipElement::inverse() const {
  // (v, a)^{-1} = (phi^a(v), a): check (v,a)(phi^a v, a) = (v + v, 0) = e
  return FlipElement(n_, flip_ ? reversed_bits() : bits_, flip_);
}

FlipElement FlipElement::conjugated_by(const FlipElement& g) const {
  return g.inverse().multiply(*this).multiply(g);
}

bool FlipElement::has_index(int index) const {
  if (index < -n_ || index > n_) return false;
  return (bits_ >> (index + n_)) & 1u;
}

std::vector<int> FlipElement::support() const {
  std::vector<int> out;
  for (int i = -n_; i <= n_; ++i)
    if ((bits_ >> (i + n_)) & 1u) out.push_back(i);
  return out;
}

int FlipElement::min_support() const {
  for (int i = -n_; i <= n_; ++i)
    if ((bits_ >> (i + n_)) & 1u) return i;
  return n_;
}

std::string FlipElement::to_string() const {
  std::string out = "(";
  bool first = true;
  for (int i : support()) {
    if (!first) out += "+";
    out += "e" + std::to_string(i);
    first = false;
  }
  if (first) out += "0";
  out += flip_ ? ", phi)" : ", id)";
  return out;
}

FlipElement flip_multiply(const FlipElement& a, const FlipElement& b) {
  return a.multiply(b);
}

} // namespace coarse
