#pragma once

#include <cstdint>
#include <limits>

namespace kpzlab {

/// Seed of a reproducible random stream. Distinct stream ids give
/// statistically independent sequences for the same value.
struct Seed {
  std::uint64_t value = 0;
  std::uint64_t stream = 0;

  constexpr Seed with_stream(std::uint64_t s) const { return Seed{value, s}; }
};

namespace detail {

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based 64-bit generator: output n is a bijective mix of
/// key + n * gamma, where the key is a pure function of the seed.
/// Satisfies UniformRandomBitGenerator, so it plugs into <random>.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterRng(Seed seed)
      : key_(detail::mix64(seed.value ^ 0x3c6ef372fe94f82bULL) ^
             detail::mix64(seed.stream * 0xd1b54a32d192ed03ULL + 0xa4093822299f31d0ULL)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() { return detail::mix64(key_ + (counter_++) * kGamma); }

  constexpr std::uint64_t counter() const { return counter_; }
  constexpr void discard(std::uint64_t n) { counter_ += n; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace kpzlab
