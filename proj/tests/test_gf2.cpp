#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "common.hpp"
#include "rmm/gf2.hpp"

using namespace rmm;
using gf2::BitMatrix;

namespace {

BitMatrix permutation(rmt::Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  BitMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, p[i]);
  return a;
}

// Rank by counting the span: 2^rank vectors reachable from the rows.
int span_rank(const BitMatrix& a) {
  std::set<std::uint64_t> span{0};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::set<std::uint64_t> next = span;
    for (auto v : span) next.insert(v ^ a.row_word(r));
    span = std::move(next);
  }
  int k = 0;
  while ((std::size_t{1} << k) < span.size()) ++k;
  return k;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(gf2::rank(BitMatrix::identity(6)) == 6);
  CHECK(gf2::rank(BitMatrix(4, 7)) == 0);
  const std::string rows[] = {"01", "10"};
  CHECK(gf2::rank(BitMatrix::parse(rows)) == 2);
}

TEST_CASE("rank matches the span-size oracle") {
  rmt::Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto a = rmt::random_matrix(rng, 1 + rng() % 9, 1 + rng() % 12);
    REQUIRE(gf2::rank(a) == span_rank(a));
  }
}

TEST_CASE("rank is invariant under P M Q") {
  rmt::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    const auto m = rmt::random_matrix(rng, r, c);
    const auto p = rmt::random_invertible(rng, r), q = rmt::random_invertible(rng, c);
    REQUIRE(gf2::rank(p * m * q) == gf2::rank(m));
    REQUIRE(gf2::rank(permutation(rng, r) * m * permutation(rng, c)) == gf2::rank(m));
  }
}

TEST_CASE("inverse multiplies back to the identity") {
  rmt::Rng rng(13);
  CHECK(gf2::invert(BitMatrix::identity(5)) == BitMatrix::identity(5));
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const auto a = rmt::random_matrix(rng, n, n);
    if (gf2::rank(a) == static_cast<int>(n)) {
      const auto inv = gf2::invert(a);
      REQUIRE(inv * a == BitMatrix::identity(n));
      REQUIRE(a * inv == BitMatrix::identity(n));
    } else {
      REQUIRE_THROWS_AS(gf2::invert(a), gf2::SingularMatrixError);
    }
  }
  rmt::Rng prng(14);
  const auto p = permutation(prng, 7);
  CHECK(gf2::invert(p) == p.transpose());
}

TEST_CASE("multiply, transpose and column words agree") {
  rmt::Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const auto a = rmt::random_matrix(rng, 1 + rng() % 10, 1 + rng() % 10);
    const auto x = rmt::random_bits(rng, a.cols());
    const auto y = a.multiply(x);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      bool s = false;
      for (std::size_t j = 0; j < a.cols(); ++j) s ^= a.get(i, j) && x.get(j);
      REQUIRE(y.get(i) == s);
    }
    REQUIRE(a.transpose().transpose() == a);
    for (std::size_t j = 0; j < a.cols(); ++j) REQUIRE(a.column_word(j) == a.transpose().row_word(j));
  }
}

TEST_CASE("symmetric matrix packing") {
  rmt::Rng rng(16);
  for (int n = 1; n <= 8; ++n) {
    const auto b = rmt::random_bits(rng, gf2::SymmetricMatrix::packed_size(n));
    const auto s = gf2::SymmetricMatrix::from_packed(n, b);
    CHECK(s.packed() == b);
    const auto full = s.to_matrix();
    CHECK(full == full.transpose());
    CHECK(gf2::SymmetricMatrix::from_matrix(full) == s);
    CHECK(gf2::rank(s) == gf2::rank(full));
    for (int i = 0; i < n; ++i) CHECK(((s.diagonal() >> i) & 1u) == s.get(i, i));
  }
  // s11 s12 s22 = 0 1 0
  const auto s = gf2::SymmetricMatrix::from_packed(2, BitVec::from_bits("010"));
  CHECK(s.get(0, 1));
  CHECK(s.get(1, 0));
  CHECK(s.diagonal() == 0);
  CHECK(gf2::rank(s) == 2);
  const std::string rows[] = {"01", "01"};
  CHECK_THROWS(gf2::SymmetricMatrix::from_matrix(BitMatrix::parse(rows)));
}

TEST_CASE("factor operations keep B B^T") {
  rmt::Rng rng(17);
  auto product = [](const BitMatrix& b) { return b * b.transpose(); };
  int applied = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t m = 1 + rng() % 6, cols = 4 + rng() % 6;
    auto b = rmt::random_matrix(rng, m, cols);
    gf2::FactorOp op;
    switch (t % 4) {
      case 0: {
        const std::size_t c = rng() % cols;
        for (std::size_t i = 0; i < m; ++i) b.set(i, c, false);
        op = gf2::DeleteZeroColumn{c};
        break;
      }
      case 1: {
        const std::size_t c1 = rng() % cols, c2 = (c1 + 1 + rng() % (cols - 1)) % cols;
        for (std::size_t i = 0; i < m; ++i) b.set(i, c2, b.get(i, c1));
        op = gf2::DeleteEqualColumns{std::min(c1, c2), std::max(c1, c2)};
        break;
      }
      case 2:
        op = gf2::SwapColumns{rng() % cols, rng() % cols};
        break;
      default: {
        // four columns with zero sum
        std::vector<std::size_t> idx(cols);
        for (std::size_t i = 0; i < cols; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(4);
        for (std::size_t i = 0; i < m; ++i) b.set(i, idx[3], b.get(i, idx[0]) ^ b.get(i, idx[1]) ^ b.get(i, idx[2]));
        op = gf2::AddToColumns{idx, rmt::random_bits(rng, m)};
      }
    }
    const auto after = gf2::factor_ops(b, op);
    REQUIRE(product(after) == product(b));
    ++applied;
  }
  CHECK(applied == 1000);
}

TEST_CASE("invalid factor operations are rejected") {
  const std::string rows[] = {"110", "011"};
  const auto b = BitMatrix::parse(rows);
  CHECK_THROWS(gf2::factor_ops(b, gf2::DeleteZeroColumn{0}));
  CHECK_THROWS(gf2::factor_ops(b, gf2::DeleteEqualColumns{0, 1}));
  CHECK_THROWS(gf2::factor_ops(b, gf2::AddToColumns{{0, 1, 2}, BitVec(2)}));
  CHECK_THROWS(gf2::factor_ops(b, gf2::AddToColumns{{0, 1}, BitVec(2)}));
}

TEST_CASE("GL(m,2) sizes") {
  CHECK(gf2::InvertibleMatrices(1).size() == 1);
  CHECK(gf2::InvertibleMatrices(2).size() == 6);
  CHECK(gf2::InvertibleMatrices(3).size() == 168);
  CHECK(gf2::InvertibleMatrices(4).size() == 20160);
  // prod (2^5 - 2^i), i < 5
  std::uint64_t order = 1;
  for (int i = 0; i < 5; ++i) order *= (32 - (1u << i));
  CHECK(order == 9999360);
  CHECK(gf2::InvertibleMatrices(5).size() == order);
  CHECK(gf2::gl_order(5) == order);
  CHECK_THROWS(gf2::InvertibleMatrices(6));
}

TEST_CASE("GL enumeration: identity first, distinct, invertible") {
  for (int m = 1; m <= 3; ++m) {
    const gf2::InvertibleMatrices gl(m);
    CHECK(gl.at(0) == BitMatrix::identity(m));
    std::set<std::vector<std::string>> seen;
    for (auto c = gl.cursor(0, gl.size()); !c.done(); c.advance()) {
      const auto a = gl.at(c.index());
      REQUIRE(gf2::is_invertible(a));
      for (int i = 0; i < m; ++i) REQUIRE(a.row_word(i) == c.rows()[i]);
      seen.insert(a.to_strings());
    }
    CHECK(seen.size() == gl.size());
  }
}

TEST_CASE("GL cursors agree with random access (m = 4, 5)") {
  rmt::Rng rng(18);
  for (int m = 4; m <= 5; ++m) {
    const gf2::InvertibleMatrices gl(m);
    std::set<std::vector<std::string>> seen;
    for (int t = 0; t < 50; ++t) {
      const std::uint64_t begin = rng() % gl.size();
      const std::uint64_t end = std::min(gl.size(), begin + 40);
      for (auto c = gl.cursor(begin, end); !c.done(); c.advance()) {
        const auto a = gl.at(c.index());
        REQUIRE(gf2::is_invertible(a));
        for (int i = 0; i < m; ++i) REQUIRE(a.row_word(i) == c.rows()[i]);
        seen.insert(a.to_strings());
      }
    }
    std::uint64_t n = 0;
    for (auto c = gl.cursor(0, m == 4 ? gl.size() : 0); !c.done(); c.advance()) ++n;
    if (m == 4) CHECK(n == gl.size());
    CHECK(seen.size() > 1000);
  }
}
