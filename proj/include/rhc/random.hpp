#pragma once

#include <cstdint>
#include <random>

namespace rhc {

// splitmix64 finalizer; the building block of every derived seed.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(mix64(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

// Counter-based uniform in [0,1): the value depends only on the key, never on
// call order.
inline double counter_uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return static_cast<double>(derive_seed(seed, a, b) >> 11) * 0x1.0p-53;
}

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] that does not depend on the standard library's
// distribution implementation.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename Container>
void shuffle(Container& c, Rng& rng) {
  for (std::int64_t i = static_cast<std::int64_t>(c.size()) - 1; i > 0; --i) {
    std::int64_t j = uniform_int(rng, 0, i);
    using std::swap;
    swap(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
  }
}

} // namespace rhc
