#pragma once

#include <cstdint>
#include <random>

#include "rmm/bitvec.hpp"
#include "rmm/boolfn.hpp"
#include "rmm/gf2.hpp"

namespace rmt {

using Rng = std::mt19937_64;

inline rmm::BitVec random_bits(Rng& rng, std::size_t n) {
  rmm::BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
  return v;
}

inline rmm::boolfn::BooleanFunction random_function(Rng& rng, int m) {
  return rmm::boolfn::BooleanFunction(m, random_bits(rng, std::size_t{1} << m));
}

inline rmm::gf2::BitMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  rmm::gf2::BitMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a.set(i, j, rng() & 1u);
  return a;
}

inline rmm::gf2::BitMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    auto a = random_matrix(rng, n, n);
    if (rmm::gf2::is_invertible(a)) return a;
  }
}

// Sum of the 2^m table entries, one popcount per input.
inline std::uint64_t brute_weight(const rmm::boolfn::BooleanFunction& f) {
  std::uint64_t w = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) w += f(x);
  return w;
}

}  // namespace rmt
