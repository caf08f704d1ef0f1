#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace coarse {

/// Square boolean matrix with 64-bit packed rows. Backs every entourage;
/// windows stay small (a few hundred points at most), so dense storage wins.
class BitRel {
public:
  BitRel() = default;
  explicit BitRel(std::size_t n)
      : n_(n), words_(words_per_row(n)), bits_(n * words_per_row(n), 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i, std::size_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }

  void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= UINT64_C(1) << (j & 63); }

  void set_diagonal() {
    for (std::size_t i = 0; i < n_; ++i) set(i, i);
  }

  void fill() {
    for (auto& w : bits_) w = ~UINT64_C(0);
    trim();
  }

  /// Boolean matrix product: out(i,j) = exists k with a(i,k) and b(k,j).
  BitRel compose(const BitRel& b) const {
    BitRel out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint64_t* ri = row(i);
      std::uint64_t* ro = out.row(i);
      for (std::size_t blk = 0; blk < words_; ++blk) {
        std::uint64_t w = ri[blk];
        while (w) {
          const std::size_t k = (blk << 6) + static_cast<std::size_t>(std::countr_zero(w));
          w &= w - 1;
          const std::uint64_t* rk = b.row(k);
          for (std::size_t t = 0; t < words_; ++t) ro[t] |= rk[t];
        }
      }
    }
    return out;
  }

  BitRel transposed() const {
    BitRel out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t blk = 0; blk < words_; ++blk) {
        std::uint64_t w = row(i)[blk];
        while (w) {
          const std::size_t j = (blk << 6) + static_cast<std::size_t>(std::countr_zero(w));
          w &= w - 1;
          out.set(j, i);
        }
      }
    return out;
  }

  BitRel united(const BitRel& b) const {
    BitRel out = *this;
    for (std::size_t t = 0; t < bits_.size(); ++t) out.bits_[t] |= b.bits_[t];
    return out;
  }

  BitRel intersected(const BitRel& b) const {
    BitRel out = *this;
    for (std::size_t t = 0; t < bits_.size(); ++t) out.bits_[t] &= b.bits_[t];
    return out;
  }

  bool subset_of(const BitRel& b) const {
    for (std::size_t t = 0; t < bits_.size(); ++t)
      if (bits_[t] & ~b.bits_[t]) return false;
    return true;
  }

  bool operator==(const BitRel& b) const { return n_ == b.n_ && bits_ == b.bits_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Column indices set in row i, ascending.
  std::vector<std::size_t> row_members(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t blk = 0; blk < words_; ++blk) {
      std::uint64_t w = row(i)[blk];
      while (w) {
        out.push_back((blk << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

private:
  static std::size_t words_per_row(std::size_t n) { return (n + 63) / 64; }

  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

  // clear bits past column n_ so equality and subset tests stay exact
  void trim() {
    if (n_ % 64 == 0 || n_ == 0) return;
    const std::uint64_t mask = (UINT64_C(1) << (n_ % 64)) - 1;
    for (std::size_t i = 0; i < n_; ++i) row(i)[words_ - 1] &= mask;
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

} // namespace coarse
