#pragma once

#include <cmath>
#include <cstdint>

namespace embedlb {

// Counter-based generator: the value at (seed, stream, counter) is a pure
// function of the key, so sharded sampling is reproducible across thread
// counts and platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = mix(seed_ ^ mix(stream_ ^ 0x6a09e667f3bcc909ULL));
    return mix(z ^ mix(counter));
  }

  // Sequential convenience interface.
  std::uint64_t next() { return at(counter_++); }

  // Uniform in [0,1) with 53 random bits.
  double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
  double unit_at(std::uint64_t counter) const {
    return double(at(counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  // Box-Muller; consumes two counters.
  double next_gaussian() {
    double u1 = next_unit(), u2 = next_unit();
    if (u1 <= 0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  std::uint64_t counter() const { return counter_; }
  void set_counter(std::uint64_t c) { counter_ = c; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

// Two-sided Hoeffding 99% half-width for the mean of n samples in [0, range].
inline double hoeffding_ci99(double range, std::uint64_t n) {
  return range * std::sqrt(std::log(2.0 / 0.01) / (2.0 * double(n)));
}

}  // namespace embedlb
