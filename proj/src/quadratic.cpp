#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "rmm/rmcodes.hpp"
#include "rmm/syndrome.hpp"

namespace rmm::syn {

namespace {

std::uint32_t full_mask(int m) { return (1u << m) - 1; }

bool independent(const std::vector<std::uint32_t>& vs) {
  std::vector<std::uint64_t> w(vs.begin(), vs.end());
  return gf2::rank_of_words(w) == static_cast<int>(vs.size());
}

// All size-k subsets of {1, ..., 2^m - 1}, increasing.
template <class F>
void for_each_subset(int m, int k, F&& visit) {
  const std::uint32_t top = (1u << m) - 1;
  std::vector<std::uint32_t> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  if (static_cast<std::uint32_t>(k) > top) return;
  for (;;) {
    visit(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == top - (k - 1 - i)) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::string to_string(GeneratorFamily f) {
  switch (f) {
    case GeneratorFamily::G: return "G";
    case GeneratorFamily::G1: return "G1";
    case GeneratorFamily::G2: return "G2";
  }
  return "?";
}

ComplementGenerators complement_generators(int m) {
  if (m < 3) throw std::invalid_argument("complement generators need m >= 3");
  ComplementGenerators g;
  g.m = m;
  g.even = m % 2 == 0;
  const std::string xs = "x1, ..., x" + std::to_string(m);
  if (g.even) {
    g.descriptions.push_back("G: supp = {0, " + xs + ", x1+...+x" + std::to_string(m) +
                             "}, x1..x" + std::to_string(m) + " linearly independent");
  } else {
    g.descriptions.push_back("G1: supp = {0, " + xs + "}, x1..x" + std::to_string(m) + " linearly independent");
    g.descriptions.push_back("G2: supp = {0, x1, ..., x" + std::to_string(m - 1) + ", x1+...+x" +
                             std::to_string(m - 1) + "}, x1..x" + std::to_string(m - 1) +
                             " linearly independent");
  }
  return g;
}

std::vector<std::pair<GeneratorFamily, boolfn::BooleanFunction>> ComplementGenerators::members() const {
  if (m > 5) throw std::domain_error("complement generator expansion supports m <= 5");
  // radius of the punctured code
  const int r = m + 1 - (m % 2);
  std::set<std::pair<GeneratorFamily, std::uint64_t>> supports;
  auto punctured = [](const std::vector<std::uint32_t>& pts) {
    std::uint64_t w = 0;
    for (auto x : pts) w |= 1ULL << (x - 1);
    return w;
  };
  auto add = [&](GeneratorFamily fam, int k, bool with_sum) {
    for_each_subset(m, k, [&](const std::vector<std::uint32_t>& pick) {
      if (!independent(pick)) return;
      std::vector<std::uint32_t> pts = pick;
      if (with_sum) {
        std::uint32_t s = 0;
        for (auto x : pick) s ^= x;
        pts.push_back(s);
      }
      supports.insert({fam, punctured(pts)});
    });
  };
  if (even) {
    add(GeneratorFamily::G, m, true);
  } else {
    add(GeneratorFamily::G1, m, false);
    add(GeneratorFamily::G2, m - 1, true);
  }
  std::vector<std::pair<GeneratorFamily, boolfn::BooleanFunction>> out;
  for (const auto& [fam, u] : supports)
    out.emplace_back(fam, boolfn::BooleanFunction::from_word(m, rm::parity_extended_word(u, r)));
  return out;
}

boolfn::AnfPolynomial gstar(int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("g* is defined for even m >= 2");
  boolfn::AnfPolynomial p(m);
  for (std::uint32_t u = 0; u <= full_mask(m); ++u)
    if (std::popcount(u) == m - 2) p.toggle(u);
  return p;
}

boolfn::AnfPolynomial gstar_partial(int m) {
  if (m < 3) throw std::invalid_argument("g-star over m-1 variables needs m >= 3");
  boolfn::AnfPolynomial p(m);
  const std::uint32_t head = full_mask(m - 1);
  for (int i = 0; i < m - 1; ++i)
    for (int j = i + 1; j < m - 1; ++j) p.toggle(head & ~(1u << i) & ~(1u << j));
  return p;
}

boolfn::AnfPolynomial g2star(int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("g2* is defined for odd m >= 3");
  boolfn::AnfPolynomial p(m);
  const std::uint32_t xm = 1u << (m - 1);
  const auto head = gstar_partial(m);
  for (auto u : head.monomials()) p.toggle(u | xm);
  return p;
}

boolfn::AnfPolynomial g1star(int m) {
  boolfn::AnfPolynomial p = g2star(m);
  p.toggle(full_mask(m - 1));
  return p;
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& o) {
  if (m != o.m) throw std::invalid_argument("quadratic forms over different m");
  for (const auto& pr : o.pairs)
    if (!pairs.erase(pr)) pairs.insert(pr);
  return *this;
}

boolfn::AnfPolynomial QuadraticForm::to_anf() const {
  boolfn::AnfPolynomial p(m);
  for (const auto& [i, j] : pairs) p.toggle((1u << (i - 1)) | (1u << (j - 1)));
  return p;
}

QuadraticForm quadratic_dual(const boolfn::AnfPolynomial& f) {
  const int m = f.vars();
  if (m < 2) throw std::invalid_argument("quadratic dual needs m >= 2");
  if (f.degree() != boolfn::Degree(m - 2))
    throw std::invalid_argument("quadratic dual needs degree m-2 = " + std::to_string(m - 2) + ", got " +
                                f.degree().to_string());
  QuadraticForm q{m, {}};
  for (auto u : f.monomials()) {
    if (std::popcount(u) != m - 2) continue;
    const std::uint32_t missing = full_mask(m) & ~u;
    const int i = std::countr_zero(missing);
    const int j = 31 - std::countl_zero(missing);
    q.pairs.insert({i + 1, j + 1});
  }
  return q;
}

int quad_canonical_rank(const QuadraticForm& q) {
  std::vector<std::uint64_t> rows(q.m, 0);
  for (const auto& [i, j] : q.pairs) {
    rows[i - 1] |= 1ULL << (j - 1);
    rows[j - 1] |= 1ULL << (i - 1);
  }
  return gf2::rank_of_words(rows) / 2;
}

bool lemma8_form(const gf2::BitMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("lemma8_form needs a square matrix");
  const std::size_t m = a.rows();
  if (m == 0) return false;
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (a.get(i, m - 1)) return false;
  if (!a.get(m - 1, m - 1)) return false;
  gf2::BitMatrix lead(m - 1, m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j + 1 < m; ++j)
      if (a.get(i, j)) lead.set(i, j);
  return gf2::is_invertible(lead);
}

}  // namespace rmm::syn
