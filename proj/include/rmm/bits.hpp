#pragma once

#include <bit>
#include <cstdint>

// Word kernels for truth tables with at most 64 entries (m <= 6).
namespace rmm::bits {

// kLowHalf[j]: indices x whose bit j is zero.
inline constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};

constexpr std::uint64_t table_mask(int m) {
  return m >= 6 ? ~0ULL : ((1ULL << (1u << m)) - 1);
}

// Truth table of the coordinate function x_{j+1}.
constexpr std::uint64_t var_table(int j, int m) {
  return ~kLowHalf[j] & table_mask(m);
}

// Binary Moebius transform; an involution.
constexpr std::uint64_t moebius(std::uint64_t t, int m) {
  for (int j = 0; j < m; ++j) t ^= (t & kLowHalf[j]) << (1u << j);
  return t;
}

// t'(x) = t(x + c)
constexpr std::uint64_t translate(std::uint64_t t, std::uint32_t c, int m) {
  for (int j = 0; j < m; ++j) {
    if ((c >> j) & 1u) {
      const unsigned s = 1u << j;
      t = ((t & kLowHalf[j]) << s) | ((t >> s) & kLowHalf[j]);
    }
  }
  return t;
}

// Table of the linear function <a, x>.
constexpr std::uint64_t linear_table(std::uint32_t a, int m) {
  std::uint64_t t = 0;
  for (int j = 0; j < m; ++j)
    if ((a >> j) & 1u) t ^= var_table(j, m);
  return t;
}

// Monomials (as ANF coefficient positions) of degree > k.
constexpr std::uint64_t degree_above_mask(int k, int m) {
  std::uint64_t mask = 0;
  for (std::uint32_t u = 0; u < (1u << m); ++u)
    if (std::popcount(u) > k) mask |= 1ULL << u;
  return mask;
}

inline int parity(std::uint64_t x) { return std::popcount(x) & 1; }

}  // namespace rmm::bits
