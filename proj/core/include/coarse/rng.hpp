#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace coarse {

/// Seeded random source for the sampled suites. mt19937_64 has a fully
/// specified output sequence, and the bounded draw below uses rejection
/// sampling instead of std::uniform_int_distribution, whose output is
/// implementation-defined. Reports built from the same seed are therefore
/// byte-identical across platforms.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % bound;
  }

  bool coin() { return (engine_() & 1u) != 0; }

  template <class T>
  const T& pick(std::span<const T> items) {
    return items[static_cast<std::size_t>(below(items.size()))];
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(below(items.size()))];
  }

private:
  std::mt19937_64 engine_;
};

} // namespace coarse
