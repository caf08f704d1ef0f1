#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coarse/window.hpp"

namespace coarse {

/// Element of the free abelian group of exponent p over a window: a finitely
/// supported map point -> nonzero residue mod p, kept sorted by point index.
/// This is the canonical representation; equality is a plain comparison.
class ApElement {
public:
  using Term = std::pair<PointId, unsigned>; // (point, coefficient in [1, p))

  static ApElement zero(unsigned p);
  static ApElement unit(unsigned p, PointId x) { return single(p, x, 1); }
  static ApElement single(unsigned p, PointId x, unsigned coeff);
  static ApElement from_terms(unsigned p, std::vector<Term> terms); // folds duplicates

  ApElement add(const ApElement& other) const;
  ApElement negated() const;
  ApElement subtract(const ApElement& other) const { return add(other.negated()); }
  ApElement scaled(unsigned k) const;

  /// Sum of coefficients mod p; the kernel is the index-p subgroup that the
  /// graded base construction pivots on.
  unsigned augmentation() const;

  unsigned p() const { return p_; }
  bool is_zero() const { return support_.empty(); }
  std::size_t support_size() const { return support_.size(); }
  const std::vector<Term>& terms() const { return support_; }
  unsigned coefficient(PointId x) const;

  std::string to_string(const Window& w) const;

  bool operator==(const ApElement&) const = default;

private:
  ApElement(unsigned p, std::vector<Term> support)
      : p_(p), support_(std::move(support)) {}

  unsigned p_ = 2;
  std::vector<Term> support_;
};

ApElement ap_add(const ApElement& a, const ApElement& b);

/// Dense encoding of A_p over an n-point window: codes are mixed-radix
/// integers with digit i the coefficient of point i. Lets the norm oracle
/// walk the whole group breadth-first.
class ApCodec {
public:
  ApCodec(unsigned p, std::size_t points, std::uint64_t budget = UINT64_C(1) << 20);

  std::uint64_t size() const { return size_; }
  unsigned p() const { return p_; }
  std::size_t points() const { return points_; }

  std::uint64_t encode(const ApElement& a) const;
  ApElement decode(std::uint64_t code) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t negate(std::uint64_t a) const;
  std::uint64_t subtract(std::uint64_t a, std::uint64_t b) const { return add(a, negate(b)); }
  std::uint64_t unit(PointId x, unsigned coeff = 1) const;
  unsigned augmentation(std::uint64_t a) const;

private:
  unsigned p_;
  std::size_t points_;
  std::uint64_t size_;
  std::vector<std::uint64_t> pow_;
};

} // namespace coarse
