#pragma once

#include <array>
#include <cstdint>

namespace sfg {

/// xoshiro256** seeded through splitmix64.
///
/// The stream is fully determined by the 64-bit seed so that corpora are
/// bit-reproducible across platforms and language ports:
///   - state[i] = splitmix64 outputs 1..4 starting from `seed`
///   - uniform01() = (next() >> 11) * 2^-53, in [0, 1)
///   - normal() = Box-Muller, u1 = 1 - uniform01(), u2 = uniform01(),
///     returns sqrt(-2 ln u1) * cos(2 pi u2); no cached second variate.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  std::uint64_t next() noexcept;
  result_type operator()() noexcept { return next(); }
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  double uniform01() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }
  // Uniform integer in [0, n), n > 0 (Lemire's multiply-shift, no rejection).
  std::uint64_t below(std::uint64_t n) noexcept;
  double normal() noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

}  // namespace sfg
