#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include "pinfix/errors.hpp"

namespace pinfix {

// Deterministic splittable counter-based generator (SplitMix64 core).
// Identical seed + identical call sequence gives an identical stream,
// independent of platform and standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix(seed ^ 0x9E3779B97F4A7C15ull)) {}

  // Derived independent stream; deterministic in (current state, k).
  Rng split(uint64_t k) const { return Rng(mix(state_ ^ mix(k))); }

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // [0, n)
  int uniform_int(int n) {
    if (n <= 0) throw IndexError("uniform_int: n must be positive");
    return static_cast<int>(next_u64() % static_cast<uint64_t>(n));
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; consumes exactly two uniforms per call.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return mean + stddev * r * std::cos(6.283185307179586 * u2);
  }

  // Index draw proportional to non-negative weights.
  size_t weighted_choice(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) throw IndexError("weighted_choice: no positive weight");
    double r = uniform() * total;
    double acc = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    return weights.size() - 1;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace pinfix
