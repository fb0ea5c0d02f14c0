#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "tlcp/error.hpp"

namespace tlcp {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded RNG with hand-rolled draw helpers. std:: distributions are
// implementation-defined, so every draw here is spelled out to keep outputs
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  int uniform_int(int n) {
    if (n <= 0) throw InvalidInputError("uniform_int: n must be positive");
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<int>(x % un);
  }

  // Index drawn proportionally to non-negative weights.
  int weighted_index(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) throw InvalidInputError("weighted_index: zero total weight");
    const double r = uniform01() * total;
    double cum = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
      cum += weights[i];
      if (r < cum) return static_cast<int>(i);
    }
    // r landed on the accumulated rounding tail; return the last positive weight.
    for (size_t i = weights.size(); i-- > 0;) {
      if (weights[i] > 0.0) return static_cast<int>(i);
    }
    return 0;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(uniform_int(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

  // First k elements of a seeded permutation of 0..n-1.
  std::vector<int> sample_indices(int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    shuffle(idx);
    idx.resize(k);
    return idx;
  }

  // Independent stream derived from this RNG's seed and a tag.
  Rng fork(uint64_t tag) const { return Rng(splitmix64(seed_ ^ splitmix64(tag + 1))); }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace tlcp
