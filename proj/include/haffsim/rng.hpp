#ifndef HAFFSIM_RNG_HPP
#define HAFFSIM_RNG_HPP

// Deterministic, seedable random generator for the simulator.
//
// The engine is xoshiro256++ seeded through SplitMix64, so results are
// bit-identical for equal seeds independent of platform or standard
// library. Distributions avoid libm trig: normals use the Marsaglia
// polar method, sphere points the Marsaglia (1972) rejection method.

#include <cstdint>
#include <cmath>
#include <vector>

#include "haffsim/vec3.hpp"

namespace haffsim {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Derives the seed of replica `index` from a master seed. Distinct
// replicas get decorrelated streams.
inline std::uint64_t replica_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0xD1B54A32D192ED03ULL * (index + 1));
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
    has_normal_ = false;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n), rejection to avoid modulo bias
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // standard normal, Marsaglia polar method (pairs cached)
  double normal() {
    if (has_normal_) {
      has_normal_ = false;
      return cached_normal_;
    }
    double a, b, q;
    do {
      a = 2.0 * uniform() - 1.0;
      b = 2.0 * uniform() - 1.0;
      q = a * a + b * b;
    } while (q >= 1.0 || q == 0.0);
    const double f = std::sqrt(-2.0 * std::log(q) / q);
    cached_normal_ = b * f;
    has_normal_ = true;
    return a * f;
  }

  // uniform direction on the unit sphere, Marsaglia (1972)
  Vec3 unit_sphere() {
    for (;;) {
      const double a = 2.0 * uniform() - 1.0;
      const double b = 2.0 * uniform() - 1.0;
      const double q = a * a + b * b;
      if (q >= 1.0) continue;
      const double f = 2.0 * std::sqrt(1.0 - q);
      return {a * f, b * f, 1.0 - 2.0 * q};
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::uint64_t s_[4] = {};
  double cached_normal_ = 0.0;
  bool has_normal_ = false;
};

} // namespace haffsim

#endif
