#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "crex/real.hpp"

namespace crex {

// splitmix64; used to derive independent seeds from (seed, stream-id) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ (b + 0x9e3779b97f4a7c15ULL));
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix64(mix64(a, b), c);
}

// Deterministic RNG.  mt19937_64 output is pinned by the standard; the
// distribution helpers are hand-rolled because std::uniform_*_distribution
// is implementation-defined and would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1) with 53-bit resolution
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  real uniform(real lo, real hi) {
    return lo + (hi - lo) * static_cast<real>(next_double());
  }

  bool bernoulli(double p) { return next_double() < p; }

  // uniform integer in [0, n); n > 0
  std::uint64_t below(std::uint64_t n) {
    // multiply-shift; bias is negligible for the n used here (n << 2^64)
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace crex
