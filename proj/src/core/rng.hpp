#pragma once

#include <cstdint>

#include "core/linalg.hpp"

namespace convexval {

// Deterministic splitmix64 stream. Used instead of <random> distributions, whose
// outputs are not fixed across standard library implementations; report bytes must
// be identical for identical (config, seed).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform integer in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform rational k/den with k/den in [lo, hi].
  Rat rational(long lo, long hi, long den) {
    const long long k = range(static_cast<long long>(lo) * den, static_cast<long long>(hi) * den);
    Rat r = rat(static_cast<long>(k), den);
    r.canonicalize();
    return r;
  }

  Vec rational_vec(int n, long lo, long hi, long den) {
    Vec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = rational(lo, hi, den);
    return v;
  }

  // Deterministic child stream; distinct tags give decorrelated streams.
  Rng fork(std::uint64_t tag) {
    Rng mix(state_ ^ (0xD1B54A32D192ED03ull * (tag + 1)));
    return Rng(mix.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace convexval
