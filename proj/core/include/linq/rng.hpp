#pragma once

#include <cstdint>
#include <random>

namespace linq {

/// mt19937_64 with hand-rolled bounded draws. The standard distributions are
/// implementation-defined, so generated benchmarks would differ across
/// standard libraries if we used them.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive, via rejection sampling.
  int uniform_int(int lo, int hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi) - lo + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<int>(x % range);
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform_real() < p; }

private:
  std::mt19937_64 engine_;
};

} // namespace linq
