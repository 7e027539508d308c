#pragma once

// Small seeded generators for the property tests.

#include "ipr/algebra/numbers.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return range(0, 1) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(xs.size()) - 1))];
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// a/b with |a| <= bound and 1 <= b <= bound.
inline ipr::Rational rational(Rng& rng, std::int64_t bound) {
  return ipr::make_rational(rng.range(-bound, bound), rng.range(1, bound));
}

/// A random subset of {0..n-1} as a sorted list.
inline std::vector<std::uint32_t> subset(Rng& rng, std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i)
    if (rng.coin()) out.push_back(i);
  return out;
}

}  // namespace testgen
