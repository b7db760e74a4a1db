#ifndef FILLIN_RNG_HPP
#define FILLIN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace fillin::rng {

// All randomness in the library flows through mt19937_64 plus the helpers
// below. std::mt19937_64 output is pinned by the standard, but the
// distribution adaptors are not, so we derive uniforms/normals/integers
// ourselves to keep results identical across platforms.
using Engine = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) via rejection sampling.
inline std::uint64_t bounded(Engine& eng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % bound;
}

// Standard normal via Box-Muller (cosine branch only, stateless).
inline double normal(Engine& eng) {
  double u1 = uniform01(eng);
  while (u1 <= 0.0) u1 = uniform01(eng);
  const double u2 = uniform01(eng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

// Fisher-Yates shuffle producing a uniform permutation of 0..n-1.
inline std::vector<int> random_indices(int n, Engine& eng) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(bounded(eng, std::uint64_t(i) + 1));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  return idx;
}

}  // namespace fillin::rng

#endif
