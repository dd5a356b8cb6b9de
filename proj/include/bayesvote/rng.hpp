#pragma once

#include <cstdint>

namespace bayesvote {

/// Deterministic 64-bit generator used everywhere randomness is
/// needed. The stream is the splitmix64 sequence of Steele, Lea and
/// Flood (seed walks by the golden-gamma constant, output is the
/// murmur-style finalizer). Identical seeds give identical streams on
/// every platform; the algorithm is part of the artifact's
/// reproducibility contract and must not change between versions.
class RandomState {
 public:
  explicit RandomState(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  /// Uniform integer in [0, bound). Rejection keeps it exactly uniform.
  uint64_t next_below(uint64_t bound) {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

 private:
  uint64_t state_;
};

/// Stateless seed mixing for per-trial generators: the result depends
/// only on (master, cell, trial), never on execution order.
inline uint64_t derive_seed(uint64_t master, uint64_t cell_index,
                            uint64_t trial_index) {
  auto mix = [](uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  uint64_t h = mix(master + 0x9e3779b97f4a7c15ULL);
  h = mix(h ^ (cell_index + 1) * 0xd1b54a32d192ed03ULL);
  h = mix(h ^ (trial_index + 1) * 0x8cb92ba72f3d8dd7ULL);
  return h;
}

}  // namespace bayesvote
