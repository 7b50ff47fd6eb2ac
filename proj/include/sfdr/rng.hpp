// Deterministic random number generation with derivable per-stream state.
//
// Simulation replicates draw from streams keyed by (seed, stream_id), so the
// numbers a replicate sees are independent of which worker runs it and of how
// many replicates run in total.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace sfdr::rng {

// SplitMix64 (Steele, Lea & Flood). Used for seeding and stream derivation.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ (Blackman & Vigna), public-domain reference algorithm.
class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  // Stream keyed by (seed, stream_id): state is a pure function of the pair.
  static Xoshiro256PlusPlus stream(std::uint64_t seed, std::uint64_t stream_id) {
    SplitMix64 sm(seed);
    const std::uint64_t base = sm.next();
    return Xoshiro256PlusPlus(base ^ ((stream_id + 1) * 0x9E3779B97F4A7C15ULL));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on [0,b), strictly below b.
  double uniform_below(double b) {
    double x;
    do {
      x = uniform() * b;
    } while (x >= b);  // guards the rare round-up at the top of the range
    return x;
  }

  // Uniform integer in [0,n). Modulo bias is negligible for the small n used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Standard normal via the Marsaglia polar method; the spare value is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Standard normal CDF.
inline double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x * 0.70710678118654752440);
}

}  // namespace sfdr::rng
