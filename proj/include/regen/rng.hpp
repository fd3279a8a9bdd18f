#pragma once

#include <cstdint>
#include <random>

namespace regen {

// Seedable random stream used everywhere the library consumes randomness.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The derived draws are implemented here instead of with
// std::uniform_*_distribution, whose algorithms are implementation-defined,
// so that a given seed produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t rem = (~std::uint64_t{0}) % bound;
    const std::uint64_t limit = ~std::uint64_t{0} - rem;  // multiple of bound
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  bool next_bit() { return (engine_() >> 63) != 0; }

  // True with probability p.
  bool next_bool(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace regen
