#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>

#include "common.hpp"
#include "rmm/syndrome.hpp"

using namespace rmm;
using namespace rmm::syn;
using boolfn::AnfPolynomial;
using boolfn::BooleanFunction;
using gf2::BitMatrix;

namespace {

BooleanFunction fn(const char* abbrev, int m) { return boolfn::parse_function(abbrev, m); }

void check_witness(const BooleanFunction& f, const BooleanFunction& g, int k, const ElResult& r) {
  REQUIRE(r.equivalent);
  REQUIRE(r.witness);
  const auto& w = *r.witness;
  REQUIRE(gf2::is_invertible(w.a));
  REQUIRE(boolfn::degree(w.h) <= k);
  REQUIRE(f == boolfn::apply_affine_substitution(g, w.a, w.b) + w.h);
}

// p_k as a degree m-2 function: sum of the complements of x_{2i-1} x_{2i}.
AnfPolynomial p_dual(int m, int k) {
  AnfPolynomial p(m);
  const std::uint32_t all = (1u << m) - 1;
  for (int i = 0; i < k; ++i) p.toggle(all & ~(3u << (2 * i)));
  return p;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Orbits of the degree-3 layers in 5 variables under GL(5,2), generated by
// transpositions and one transvection.
std::vector<int> layer_orbits() {
  std::vector<std::uint32_t> monos;
  for (std::uint32_t u = 0; u < 32; ++u)
    if (std::popcount(u) == 3) monos.push_back(u);
  std::vector<std::vector<std::uint32_t>> gens;
  auto cols_of = [](const BitMatrix& a) {
    std::vector<std::uint32_t> c(5);
    for (int j = 0; j < 5; ++j) c[j] = static_cast<std::uint32_t>(a.column_word(j));
    return c;
  };
  for (int i = 0; i < 4; ++i) {
    BitMatrix a = BitMatrix::identity(5);
    a.set(i, i, false);
    a.set(i + 1, i + 1, false);
    a.set(i, i + 1);
    a.set(i + 1, i);
    gens.push_back(cols_of(a));
  }
  BitMatrix t = BitMatrix::identity(5);
  t.set(0, 1);
  gens.push_back(cols_of(t));

  std::vector<int> parent(1024);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::uint32_t layer = 0; layer < 1024; ++layer) {
    AnfPolynomial p(5);
    for (int b = 0; b < 10; ++b)
      if ((layer >> b) & 1u) p.toggle(monos[b]);
    const auto word = boolfn::truth_table_from_anf(p).word();
    for (const auto& c : gens) {
      const auto img = boolfn::anf_from_truth_table(BooleanFunction::from_word(5, boolfn::substitute_word(word, c.data(), 0, 5)));
      std::uint32_t other = 0;
      for (int b = 0; b < 10; ++b)
        if (img.contains(monos[b])) other |= 1u << b;
      parent[find(parent, static_cast<int>(layer))] = find(parent, static_cast<int>(other));
    }
  }
  std::vector<int> orbit(1024);
  for (int i = 0; i < 1024; ++i) orbit[i] = find(parent, i);
  return orbit;
}

AnfPolynomial layer_poly(std::uint32_t layer) {
  AnfPolynomial p(5);
  std::uint32_t b = 0;
  for (std::uint32_t u = 0; u < 32; ++u)
    if (std::popcount(u) == 3) {
      if ((layer >> b) & 1u) p.toggle(u);
      ++b;
    }
  return p;
}

BitMatrix lemma8_matrix(rmt::Rng& rng, int m) {
  const auto lead = rmt::random_invertible(rng, m - 1);
  BitMatrix a(m, m);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j) a.set(i, j, lead.get(i, j));
  for (int j = 0; j < m - 1; ++j) a.set(m - 1, j, rng() & 1u);
  a.set(m - 1, m - 1);
  return a;
}

}  // namespace

TEST_CASE("a function is equivalent to itself") {
  rmt::Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    const auto f = rmt::random_function(rng, 1 + t % 5);
    const auto r = el_equivalent(f, f, 1);
    check_witness(f, f, 1, r);
    CHECK(r.witness->index == 0);
    CHECK(r.witness->a == BitMatrix::identity(f.vars()));
    CHECK(r.witness->h.weight() == 0);
  }
}

TEST_CASE("random substitutions are found") {
  rmt::Rng rng(52);
  ElOptions opt;
  opt.allow_shift = true;
  for (int t = 0; t < 30; ++t) {
    const int m = 3 + t % 3;
    const int k = 1 + t % 2;
    const auto g = rmt::random_function(rng, m);
    auto h = rmt::random_function(rng, m);
    h = boolfn::truth_table_from_anf(boolfn::anf_from_truth_table(h).above(-1) + boolfn::anf_from_truth_table(h).above(k));
    const auto f = boolfn::apply_affine_substitution(g, rmt::random_invertible(rng, m), rmt::random_bits(rng, m)) + h;
    check_witness(f, g, k, el_equivalent(f, g, k, opt));
  }
}

TEST_CASE("p1 and p2 are not equivalent") {
  const auto p1 = boolfn::truth_table_from_anf(p_dual(5, 1));
  const auto p2 = boolfn::truth_table_from_anf(p_dual(5, 2));
  CHECK_FALSE(el_equivalent(p1, p2, 2).equivalent);
  ElOptions bare;
  bare.use_invariants = false;
  const auto r = el_equivalent(p1, p2, 2, bare);
  CHECK_FALSE(r.equivalent);
  CHECK(r.decided_by == Verdict::ExhaustiveSearch);
  CHECK(quad_canonical_rank(quadratic_dual(p_dual(5, 2))) == 2);
}

TEST_CASE("sum from the first rows of the class table") {
  const auto sum = fn("2345+14", 5) + fn("123+14+25", 5);
  CHECK(sum == fn("2345+123+25", 5));
  const auto r = el_equivalent(sum, fn("2345+123+34", 5), 1);
  check_witness(sum, fn("2345+123+34", 5), 1, r);
  CHECK(el_equivalent(sum, fn("2345+123+24", 5), 1).equivalent);
  CHECK_FALSE(el_equivalent(sum, fn("2345+123+14", 5), 1).equivalent);
}

TEST_CASE("invariant verdicts") {
  CHECK(el_equivalent(fn("123", 5), fn("12", 5), 1).decided_by == Verdict::DegreeProfile);
  CHECK(el_equivalent(fn("123+45", 5), fn("123+14", 5), 1).decided_by == Verdict::WeightDistribution);
  CHECK(el_equivalent(fn("123", 5), fn("12", 5), 2).equivalent == false);
  CHECK(el_equivalent(fn("12", 5), fn("34+0", 5), 1).equivalent);
  CHECK_THROWS(el_equivalent(BooleanFunction(6), BooleanFunction(6), 1));
  CHECK_THROWS(el_equivalent(BooleanFunction(5), BooleanFunction(4), 1));
}

TEST_CASE("coset weight distributions") {
  const auto d = coset_weight_distribution(fn("12+34", 4), 1);
  CHECK(d[6] == 16);
  CHECK(d[10] == 16);
  CHECK(std::accumulate(d.begin(), d.end(), 0u) == 32);
  rmt::Rng rng(53);
  for (int t = 0; t < 50; ++t) {
    const auto f = rmt::random_function(rng, 5);
    const auto a = rmt::random_invertible(rng, 5);
    REQUIRE(coset_weight_distribution(f, 1) ==
            coset_weight_distribution(boolfn::apply_affine_substitution(f, a, rmt::random_bits(rng, 5)), 1));
  }
}

TEST_CASE("equivalence of degree-3 layers is decided by the canonical rank") {
  const auto orbit = layer_orbits();
  std::map<int, int> rank_of_orbit;
  for (std::uint32_t layer = 1; layer < 1024; ++layer) {
    const int k = quad_canonical_rank(quadratic_dual(layer_poly(layer)));
    auto [it, fresh] = rank_of_orbit.emplace(orbit[layer], k);
    REQUIRE(it->second == k);
  }
  // one orbit per nonzero rank
  CHECK(rank_of_orbit.size() == 2);
  std::map<int, int> sizes;
  for (std::uint32_t layer = 1; layer < 1024; ++layer) ++sizes[quad_canonical_rank(quadratic_dual(layer_poly(layer)))];
  CHECK(sizes[1] == 155);
  CHECK(sizes[2] == 868);

  rmt::Rng rng(54);
  ElOptions opt;
  opt.use_rank_invariant = false;
  int equal = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto a = 1 + static_cast<std::uint32_t>(rng() % 1023), b = 1 + static_cast<std::uint32_t>(rng() % 1023);
    AnfPolynomial fp = layer_poly(a), gp = layer_poly(b);
    // random lower-degree parts
    for (std::uint32_t u = 0; u < 32; ++u)
      if (std::popcount(u) <= 2) {
        if (rng() & 1u) fp.toggle(u);
        if (rng() & 1u) gp.toggle(u);
      }
    const auto f = boolfn::truth_table_from_anf(fp), g = boolfn::truth_table_from_anf(gp);
    const bool same_rank = quad_canonical_rank(quadratic_dual(fp)) == quad_canonical_rank(quadratic_dual(gp));
    REQUIRE((orbit[a] == orbit[b]) == same_rank);
    const auto r = el_equivalent(f, g, 2, opt);
    REQUIRE(r.equivalent == same_rank);
    if (r.equivalent) check_witness(f, g, 2, r);
    equal += same_rank;
  }
  CHECK(equal > 0);
  CHECK(equal < 1000);
}

TEST_CASE("lemma8 form predicate") {
  CHECK(lemma8_form(BitMatrix::identity(5)));
  BitMatrix swap = BitMatrix::identity(5);
  swap.set(0, 0, false);
  swap.set(4, 4, false);
  swap.set(0, 4);
  swap.set(4, 0);
  CHECK_FALSE(lemma8_form(swap));
  BitMatrix block = BitMatrix::identity(5);
  block.set(4, 0);
  block.set(4, 2);
  CHECK(lemma8_form(block));
  CHECK_THROWS(lemma8_form(BitMatrix(4, 5)));
}

TEST_CASE("x1...x_{m-1} keeps its top monomial exactly under lemma8 forms") {
  rmt::Rng rng(55);
  int in_form = 0;
  for (int t = 0; t < 1000; ++t) {
    const int m = 4 + t % 2;
    const auto a = (t % 4 < 2) ? lemma8_matrix(rng, m) : rmt::random_invertible(rng, m);
    const std::uint32_t head = (1u << (m - 1)) - 1;
    const auto xbar = boolfn::truth_table_from_anf(AnfPolynomial(m, {head}));
    const auto image = boolfn::anf_from_truth_table(boolfn::apply_affine_substitution(xbar, a, BitVec(m)));
    const bool keeps = image.above(m - 2) == AnfPolynomial(m, {head});
    REQUIRE(keeps == lemma8_form(a));
    in_form += keeps;
  }
  CHECK(in_form >= 500);
}

TEST_CASE("x_m-divisible part under lemma8 forms") {
  rmt::Rng rng(56);
  const int m = 5;
  const std::uint32_t xm = 1u << (m - 1);
  for (int t = 0; t < 100; ++t) {
    const auto f = rmt::random_function(rng, m);
    const auto a = lemma8_matrix(rng, m);
    const auto fa = boolfn::anf_from_truth_table(f);
    // f = x_m f1 + f0 with f1, f0 free of x_m
    AnfPolynomial f1(m);
    for (auto u : fa.monomials())
      if (u & xm) f1.toggle(u & ~xm);
    BitMatrix lead = BitMatrix::identity(m);
    for (int i = 0; i < m - 1; ++i)
      for (int j = 0; j < m - 1; ++j) lead.set(i, j, a.get(i, j));
    const auto f1_lead = boolfn::anf_from_truth_table(
        boolfn::apply_affine_substitution(boolfn::truth_table_from_anf(f1), lead, BitVec(m)));
    AnfPolynomial expected(m);
    for (auto u : f1_lead.monomials()) expected.toggle(u | xm);
    const auto image = boolfn::anf_from_truth_table(boolfn::apply_affine_substitution(f, a, BitVec(m)));
    AnfPolynomial divisible(m);
    for (auto u : image.monomials())
      if (u & xm) divisible.toggle(u);
    REQUIRE(divisible == expected);
  }
}
