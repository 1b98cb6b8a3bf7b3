#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rblab {

// All randomness flows through this wrapper. std::mt19937_64 is fully
// specified by the standard; the distribution mappings below are fixed
// algorithms, so streams are reproducible across platforms (std::*_distribution
// would not be).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Box-Muller, no cached second value: one call, two uniforms, one normal.
  double normal() {
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // uniform integer in [0, n) by rejection; n >= 1
  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  double sign() { return (eng_() & 1u) ? 1.0 : -1.0; }

 private:
  std::mt19937_64 eng_;
};

inline std::uint64_t split_mix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Independent child seed for stream `stream` of a base seed. Used to keep
// search iterations / MC partitions prefix-stable: iteration i always sees the
// same stream no matter how many iterations run in total.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t s = base ^ (0xD1B54A32D192ED03ull * (stream + 1));
  std::uint64_t out = split_mix64(s);
  return out ^ split_mix64(s);
}

}  // namespace rblab
