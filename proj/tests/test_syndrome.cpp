#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "common.hpp"
#include "rmm/cosets.hpp"
#include "rmm/rmcodes.hpp"
#include "rmm/syndrome.hpp"

using namespace rmm;
using namespace rmm::syn;
using gf2::SymmetricMatrix;

namespace {

SymmetricMatrix symmetric_from_index(int m, std::uint64_t idx) {
  return SymmetricMatrix::from_packed(m, BitVec::from_word(SymmetricMatrix::packed_size(m), idx));
}

// Every proper subset of the columns is linearly independent.
bool proper_subsets_independent(const std::vector<std::uint32_t>& cols) {
  const std::size_t k = cols.size();
  for (std::size_t skip = 0; skip < k; ++skip) {
    std::vector<std::uint64_t> rest;
    for (std::size_t i = 0; i < k; ++i)
      if (i != skip) rest.push_back(cols[i]);
    if (gf2::rank_of_words(rest) != static_cast<int>(rest.size())) return false;
  }
  return true;
}

int closed_form_t(const SymmetricMatrix& s) {
  return gf2::rank(s) + ((!s.is_zero() && s.diagonal() == 0) ? 1 : 0);
}

void check_minimal(const SymmetricMatrix& s, const MinimalFactor& mf) {
  REQUIRE(static_cast<int>(mf.factor.columns.size()) == mf.t);
  REQUIRE(mf.factor.nonzero_columns() == mf.t);
  REQUIRE(mf.factor.product() == s);
  REQUIRE(std::is_sorted(mf.factor.columns.begin(), mf.factor.columns.end()));
  REQUIRE(std::adjacent_find(mf.factor.columns.begin(), mf.factor.columns.end()) == mf.factor.columns.end());
  REQUIRE(proper_subsets_independent(mf.factor.columns));
}

rm::CosetSpace punctured_space(int m) {
  return rm::CosetSpace((1 << m) - 1, rm::puncture_first(rm::rm_code(m - 3, m)).generator_words());
}

}  // namespace

TEST_CASE("parity-check matrix") {
  const auto h = parity_check_rm_m3(3);
  CHECK(h.rows() == 6);
  CHECK(h.cols() == 7);
  // rows x1, x2, x3, x1x2, x1x3, x2x3
  CHECK(h.row_word(3) == (h.row_word(0) & h.row_word(1)));
  CHECK(h.row_word(5) == (h.row_word(1) & h.row_word(2)));
  for (int m = 3; m <= 7; ++m) CHECK(gf2::rank(parity_check_rm_m3(m)) == m + m * (m - 1) / 2);
  const auto h4 = parity_check_rm_m3(4);
  const auto punctured = rm::puncture_first(rm::rm_code(1, 4));
  for (const auto& g : punctured.generators())
    for (std::size_t r = 0; r < h4.rows(); ++r) REQUIRE((h4.row(r) & g).popcount() % 2 == 0);
  CHECK_THROWS(parity_check_rm_m3(2));
}

TEST_CASE("syndrome matrices") {
  CHECK(syndrome_matrix(BitVec(15), 4).is_zero());
  const auto e1 = parity_check_rm_m3(4).row(0);
  CHECK(syndrome_matrix(e1, 4) == bv_matrix(e1, 4).product());
  rmt::Rng rng(41);
  const auto h = parity_check_rm_m3(5);
  for (int t = 0; t < 300; ++t) {
    const int m = 3 + t % 4;
    const auto v = rmt::random_bits(rng, (1u << m) - 1);
    const auto s = syndrome_matrix(v, m);
    REQUIRE(s == bv_matrix(v, m).product());
    if (m == 5) {
      // s_ii from row x_i, s_ij from row x_i x_j
      const auto syn = h.multiply(v);
      int r = 5;
      for (int i = 0; i < 5; ++i) {
        REQUIRE(s.get(i, i) == syn.get(i));
        for (int j = i + 1; j < 5; ++j) REQUIRE(s.get(i, j) == syn.get(r++));
      }
    }
  }
  const auto code = rm::puncture_first(rm::rm_code(1, 4)).generator_words();
  for (int t = 0; t < 200; ++t) {
    const auto v = rmt::random_bits(rng, 15);
    std::uint64_t c = 0;
    for (auto g : code)
      if (rng() & 1u) c ^= g;
    REQUIRE(syndrome_matrix(v, 4) == syndrome_matrix(v ^ BitVec::from_word(15, c), 4));
  }
  CHECK_THROWS(syndrome_matrix(BitVec(16), 4));
}

TEST_CASE("B_v matrices") {
  CHECK(bv_matrix(BitVec(7), 3).nonzero_columns() == 0);
  rmt::Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const int m = 3 + t % 4;
    const auto v = rmt::random_bits(rng, (1u << m) - 1);
    const auto b = bv_matrix(v, m);
    REQUIRE(b.nonzero_columns() == static_cast<int>(v.popcount()));
    const auto mat = b.matrix();
    for (std::size_t j = 0; j < v.size(); ++j)
      REQUIRE(mat.column_word(j) == (v.get(j) ? j + 1 : 0));
  }
}

TEST_CASE("t(S) examples") {
  CHECK(t_of_s(SymmetricMatrix(4)).t == 0);
  CHECK(t_of_s(SymmetricMatrix(4)).factor.columns.empty());
  for (int m = 1; m <= 8; ++m) {
    const auto id = SymmetricMatrix::from_matrix(gf2::BitMatrix::identity(m));
    const auto mf = t_of_s(id);
    CHECK(mf.t == m);
    CHECK(mf.factor.matrix() == gf2::BitMatrix::identity(m));
  }
  const auto s = symmetric_from_index(2, 0b010);
  CHECK(t_of_s(s).t == 3);
  CHECK(is_t_maximal(s));
  CHECK_THROWS(t_of_s(SymmetricMatrix(9)));
}

TEST_CASE("t(S) exhaustively for m <= 5") {
  for (int m = 1; m <= 5; ++m) {
    int max_t = 0;
    const std::uint64_t count = 1ULL << SymmetricMatrix::packed_size(m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const auto s = symmetric_from_index(m, idx);
      const auto mf = t_of_s(s);
      check_minimal(s, mf);
      REQUIRE(mf.t >= gf2::rank(s));
      REQUIRE(mf.t <= m + 1);
      REQUIRE(mf.t == closed_form_t(s));
      if (m % 2 == 0) REQUIRE(is_t_maximal(s) == (mf.t == m + 1));
      else REQUIRE(is_t_maximal(s) == (mf.t == m));
      max_t = std::max(max_t, mf.t);
    }
    CHECK(max_t == m + 1 - (m % 2));
  }
}

TEST_CASE("t(S) on sampled larger matrices") {
  rmt::Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const int m = 6 + t % 2;
    const auto s = SymmetricMatrix::from_packed(m, rmt::random_bits(rng, SymmetricMatrix::packed_size(m)));
    const auto mf = t_of_s(s);
    check_minimal(s, mf);
    REQUIRE(mf.t == closed_form_t(s));
  }
}

TEST_CASE("m = 6: nonsingular zero-diagonal S needs 7 columns") {
  SymmetricMatrix s(6);
  for (int i = 0; i < 6; i += 2) s.set(i, i + 1);
  s.set(0, 3);
  s.set(1, 5);
  CHECK(s.diagonal() == 0);
  CHECK(gf2::rank(s) == 6);
  CHECK(is_t_maximal(s));
  const auto mf = t_of_s(s);
  CHECK(mf.t == 7);
  check_minimal(s, mf);
  s.set(2, 2);
  CHECK_FALSE(is_t_maximal(s));
  CHECK(t_of_s(s).t == 6);
}

TEST_CASE("syndrome distance equals the coset leader weight") {
  for (int m = 3; m <= 5; ++m) {
    const auto space = punctured_space(m);
    const auto leaders = rm::coset_leader_weights(space);
    const int n = (1 << m) - 1;
    for (std::uint64_t i = 0; i < space.coset_count(); ++i) {
      const auto v = BitVec::from_word(n, space.representative(i));
      REQUIRE(distance_via_syndrome(v, m) == leaders[i]);
    }
    CHECK(*std::max_element(leaders.begin(), leaders.end()) == m + 1 - (m % 2));
  }
}

TEST_CASE("syndrome distance against codeword enumeration (m = 4)") {
  rmt::Rng rng(44);
  const auto words = rm::puncture_first(rm::rm_code(1, 4)).generator_words();
  for (int t = 0; t < 1000; ++t) {
    const auto v = rmt::random_bits(rng, 15);
    int best = 15;
    for (std::uint64_t mask = 0; mask < (1u << words.size()); ++mask) {
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < words.size(); ++i)
        if ((mask >> i) & 1u) c ^= words[i];
      best = std::min(best, std::popcount(c ^ v.word()));
    }
    REQUIRE(distance_via_syndrome(v, 4) == best);
  }
  CHECK(distance_via_syndrome(BitVec::from_word(15, words[2]), 4) == 0);
}

TEST_CASE("coset leaders from factors") {
  CHECK(coset_leader_from_factor(Factor{3, {}}, 3).none());
  const auto u = coset_leader_from_factor(Factor{3, {1, 2, 4}}, 3);
  CHECK(u.to_bits() == "1101000");
  rmt::Rng rng(45);
  for (int t = 0; t < 300; ++t) {
    const int m = 4;
    const auto s = SymmetricMatrix::from_packed(m, rmt::random_bits(rng, SymmetricMatrix::packed_size(m)));
    const auto mf = t_of_s(s);
    const auto leader = coset_leader_from_factor(mf.factor, m);
    REQUIRE(static_cast<int>(leader.popcount()) == mf.t);
    REQUIRE(syndrome_matrix(leader, m) == s);
    REQUIRE(distance_via_syndrome(leader, m) == mf.t);
  }
  CHECK_THROWS(coset_leader_from_factor(Factor{3, {1, 1}}, 3));
  CHECK_THROWS(coset_leader_from_factor(Factor{3, {0, 1}}, 3));
  CHECK_THROWS(coset_leader_from_factor(Factor{3, {8}}, 3));
}

TEST_CASE("complement generator supports") {
  const auto g4 = complement_generators(4);
  CHECK(g4.even);
  for (const auto& [fam, f] : g4.members()) {
    REQUIRE(fam == GeneratorFamily::G);
    REQUIRE(f.weight() == 6);
    REQUIRE(f(0));
  }
  const auto g5 = complement_generators(5);
  CHECK_FALSE(g5.even);
  CHECK(g5.descriptions.size() == 2);
  bool saw1 = false, saw2 = false;
  for (const auto& [fam, f] : g5.members()) {
    REQUIRE(f.weight() == 6);
    REQUIRE(f(0));
    std::vector<std::uint64_t> pts;
    for (std::uint32_t x = 1; x < 32; ++x)
      if (f(x)) pts.push_back(x);
    if (fam == GeneratorFamily::G1) {
      saw1 = true;
      REQUIRE(gf2::rank_of_words(pts) == 5);
    } else {
      saw2 = true;
      REQUIRE(gf2::rank_of_words(pts) == 4);
      std::uint64_t sum = 0;
      for (auto p : pts) sum ^= p;
      REQUIRE(sum == 0);
    }
  }
  CHECK(saw1);
  CHECK(saw2);
  CHECK_THROWS(complement_generators(6).members());
  CHECK_THROWS(complement_generators(2));
}

TEST_CASE("complement generators expand to the metric complement") {
  for (int m = 3; m <= 5; ++m) {
    const auto code = rm::rm_code(m - 3, m);
    const rm::CosetSpace space(1 << m, code.generator_words());
    const auto leaders = rm::coset_leader_weights(space);
    const int r = *std::max_element(leaders.begin(), leaders.end());
    std::set<std::uint64_t> deep;
    for (std::uint64_t i = 0; i < leaders.size(); ++i)
      if (leaders[i] == r) deep.insert(i);
    std::set<std::uint64_t> expanded;
    for (const auto& [fam, f] : complement_generators(m).members()) expanded.insert(space.index_of(f.word()));
    CHECK(expanded == deep);
    const auto comp = rm::metric_complement(code);
    CHECK(comp.radius() == r);
    CHECK(comp.class_count() == deep.size());
  }
  // m = 4 against the bent functions found by Walsh
  std::set<std::uint64_t> bent;
  const rm::CosetSpace s14(16, rm::rm_code(1, 4).generator_words());
  for (std::uint64_t v = 0; v < (1u << 16); ++v)
    if (boolfn::nonlinearity(boolfn::BooleanFunction::from_word(4, v)) == 6) bent.insert(s14.index_of(v));
  std::set<std::uint64_t> expanded;
  for (const auto& [fam, f] : complement_generators(4).members()) expanded.insert(s14.index_of(f.word()));
  CHECK(expanded == bent);
}

TEST_CASE("g-star functions") {
  const auto g4 = gstar(4);
  CHECK(g4.monomials().size() == 6);
  for (auto u : g4.monomials()) CHECK(std::popcount(u) == 2);
  CHECK((g1star(5) + g2star(5)) == boolfn::parse_abbrev("1234", 5));
  const auto g2 = g2star(5);
  for (auto u : g2.monomials()) CHECK((u & 16u) != 0);
  // x5 times the m-1 variable g-star
  boolfn::AnfPolynomial x5g(5);
  const auto head = gstar_partial(5);
  for (auto u : head.monomials()) x5g.toggle(u | 16u);
  CHECK(g2star(5) == x5g);
  const auto tt = boolfn::truth_table_from_anf(g2star(5));
  CHECK(boolfn::anf_from_truth_table(tt).above(2) == x5g.above(2));
  CHECK(gstar_partial(5).monomials().size() == 6);
  // the empty product at m = 3
  CHECK(g2star(3) == boolfn::parse_abbrev("3", 3));
  CHECK(g1star(3) == boolfn::parse_abbrev("12+3", 3));
  CHECK_THROWS(gstar(5));
  CHECK_THROWS(g1star(4));
}

TEST_CASE("support form and monomial form of g-star are equivalent") {
  // 1 + even monomials except the full one: support {0, e_i, 1}
  boolfn::BooleanFunction support(4);
  for (std::uint32_t x : {0u, 1u, 2u, 4u, 8u, 15u}) support.set(x);
  const auto mono = boolfn::truth_table_from_anf(gstar(4));
  const auto res = el_equivalent(support, mono, 1);
  CHECK(res.equivalent);
  REQUIRE(res.witness);
  CHECK(gf2::is_invertible(res.witness->a));
}

TEST_CASE("complement generators are deep holes") {
  for (int m = 3; m <= 5; ++m) {
    const auto code = rm::rm_code(m - 3, m);
    for (const auto& [fam, f] : complement_generators(m).members())
      REQUIRE(rm::distance_to_code(f.table(), code) == (m % 2 ? m + 1 : m + 2));
  }
  const auto code = rm::rm_code(2, 5);
  CHECK(rm::distance_to_code(boolfn::truth_table_from_anf(g1star(5)).table(), code) == 6);
  CHECK(rm::distance_to_code(boolfn::truth_table_from_anf(g2star(5)).table(), code) == 6);
  CHECK(rm::distance_to_code(boolfn::truth_table_from_anf(gstar(4)).table(), rm::rm_code(1, 4)) == 6);
}

TEST_CASE("quadratic duals") {
  // x3x4x5x6 misses x1, x2
  const auto q = quadratic_dual(boolfn::parse_abbrev("3456", 6));
  CHECK(q.pairs == std::set<std::pair<int, int>>{{1, 2}});
  const auto p2 = quadratic_dual(boolfn::parse_abbrev("3456+1256", 6));
  CHECK(p2.to_anf() == boolfn::parse_abbrev("12+34", 6));
  CHECK(quad_canonical_rank(p2) == 2);
  CHECK_THROWS(quadratic_dual(boolfn::parse_abbrev("123", 6)));
  CHECK_THROWS(quadratic_dual(boolfn::AnfPolynomial(6)));

  rmt::Rng rng(46);
  for (int t = 0; t < 300; ++t) {
    const int m = 4 + t % 4;
    boolfn::AnfPolynomial f(m), g(m);
    for (std::uint32_t u = 0; u < (1u << m); ++u) {
      if (std::popcount(u) > m - 2) continue;
      if (rng() & 1u) f.toggle(u);
      if (rng() & 1u) g.toggle(u);
    }
    const auto fg = f + g;
    if (f.degree() != boolfn::Degree(m - 2) || g.degree() != boolfn::Degree(m - 2) ||
        fg.degree() != boolfn::Degree(m - 2))
      continue;
    auto sum = quadratic_dual(f);
    sum += quadratic_dual(g);
    REQUIRE(quadratic_dual(fg) == sum);
  }
}

TEST_CASE("canonical rank of quadratic forms") {
  CHECK(quad_canonical_rank(QuadraticForm{5, {}}) == 0);
  CHECK(quad_canonical_rank(QuadraticForm{5, {{1, 2}, {3, 4}}}) == 2);
  CHECK(quad_canonical_rank(QuadraticForm{5, {{1, 2}, {1, 3}}}) == 1);

  // m = 4: all 64 forms against the exhaustive EA search
  std::vector<boolfn::BooleanFunction> canon;
  for (const char* p : {"", "12", "12+34"}) canon.push_back(boolfn::parse_function(p, 4));
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) all.push_back({i, j});
  ElOptions opt;
  opt.allow_shift = true;
  opt.use_invariants = false;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    QuadraticForm q{4, {}};
    for (int b = 0; b < 6; ++b)
      if ((mask >> b) & 1u) q.pairs.insert(all[b]);
    const auto f = boolfn::truth_table_from_anf(q.to_anf());
    const int k = quad_canonical_rank(q);
    for (int c = 0; c < 3; ++c) REQUIRE(el_equivalent(f, canon[c], 1, opt).equivalent == (c == k));
  }
}
