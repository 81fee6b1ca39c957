#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace lamfam {

/// SplitMix64. Same seed, same sequence; not shared between threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). Takes the top bits of each draw and rejects
  /// values past the bound. bound == 0 returns 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    if (bound <= 1) return 0;
    int const bits = std::bit_width(bound - 1);
    for (;;) {
      std::uint64_t x = next() >> (64 - bits);
      if (x < bound) return x;
    }
  }

  /// Independent stream for a parallel consumer.
  Rng split() noexcept { return Rng(next()); }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// A generator bounded by fuel: fuel 0 must produce a base case.
template <typename T>
using SizedGenerator = std::function<T(unsigned fuel, Rng& rng)>;

}  // namespace lamfam
