#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parktri {

using BigInt = boost::multiprecision::cpp_int;

/// Integer point in the ambient lattice (one entry per coordinate).
using Coord = std::vector<int>;

/// Permutation in one-line notation: values 1..m, each exactly once.
using Permutation = std::vector<int>;

/// Thrown when a request exceeds a documented size bound.
class capacity_error : public std::length_error {
 public:
  explicit capacity_error(const std::string& what) : std::length_error(what) {}
};

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt ipow(BigInt base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// 64-bit mixing step of the splitmix64 generator.  Fixed published constants,
/// bit-reproducible across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic stream of draws derived from (seed, stream, index).
/// Used for sampling so results are independent of evaluation order.
inline std::uint64_t mix_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) ^ index);
}

} // namespace parktri
