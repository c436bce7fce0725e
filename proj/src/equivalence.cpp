#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "rmm/bits.hpp"
#include "rmm/syndrome.hpp"

namespace rmm::syn {

namespace {

std::vector<std::uint64_t> rm_words(int k, int m) {
  std::vector<std::uint64_t> out;
  for (std::uint32_t u = 0; u < (1u << m); ++u)
    if (std::popcount(u) <= k) {
      std::uint64_t t = 0;
      for (std::uint32_t x = 0; x < (1u << m); ++x)
        if ((x & u) == u) t |= 1ULL << x;
      out.push_back(t);
    }
  return out;
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Witness: return "witness";
    case Verdict::DegreeProfile: return "degree-profile";
    case Verdict::WeightDistribution: return "weight-distribution";
    case Verdict::CanonicalRank: return "canonical-rank";
    case Verdict::ExhaustiveSearch: return "exhaustive-search";
  }
  return "?";
}

std::vector<std::uint32_t> coset_weight_distribution(const boolfn::BooleanFunction& f, int k) {
  const int m = f.vars();
  if (m > 6) throw std::domain_error("coset weight distribution needs m <= 6");
  const auto gens = rm_words(std::max(k, -1), m);
  if (gens.size() > 20) throw std::domain_error("coset weight distribution needs dim RM(k,m) <= 20");
  std::vector<std::uint32_t> hist((1u << m) + 1, 0);
  std::uint64_t x = f.word();
  const std::uint64_t count = 1ULL << gens.size();
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i) x ^= gens[std::countr_zero(i)];
    ++hist[std::popcount(x)];
  }
  return hist;
}

ElResult el_equivalent(const boolfn::BooleanFunction& f, const boolfn::BooleanFunction& g, int k,
                       const ElOptions& options) {
  const int m = f.vars();
  if (g.vars() != m) throw std::invalid_argument("functions have different numbers of variables");
  if (m < 1 || m > kMaxEquivalenceVars)
    throw std::domain_error("equivalence search supports 1 <= m <= " + std::to_string(kMaxEquivalenceVars));
  if (k < -1) k = -1;

  const auto fa = boolfn::anf_from_truth_table(f);
  const auto ga = boolfn::anf_from_truth_table(g);
  if (options.use_invariants) {
    if (fa.above(k).degree() != ga.above(k).degree()) return {false, Verdict::DegreeProfile, std::nullopt};
    std::size_t dim = 0;
    for (int d = 0; d <= k; ++d) {
      std::size_t c = 1;
      for (int i = 0; i < d; ++i) c = c * (m - i) / (i + 1);
      dim += c;
    }
    if (dim <= 20 && coset_weight_distribution(f, k) != coset_weight_distribution(g, k))
      return {false, Verdict::WeightDistribution, std::nullopt};
    if (options.use_rank_invariant && m >= 3 && k == m - 3 && fa.degree() == boolfn::Degree(m - 2) &&
        ga.degree() == boolfn::Degree(m - 2) &&
        quad_canonical_rank(quadratic_dual(fa)) != quad_canonical_rank(quadratic_dual(ga)))
      return {false, Verdict::CanonicalRank, std::nullopt};
  }

  const std::uint64_t fw = f.word();
  const std::uint64_t gw = g.word();
  const std::uint64_t high = bits::degree_above_mask(k, m);
  const auto fd = fa.above(k).degree(), gd = ga.above(k).degree();
  if (fd != gd) return {false, Verdict::DegreeProfile, std::nullopt};
  // The top layer of g(Ax + b) depends on A and the top layer of g only.
  std::uint64_t top = 0;
  if (!fd.is_minus_infinity())
    for (std::uint32_t u = 0; u < (1u << m); ++u)
      if (std::popcount(u) == fd.value()) top |= 1ULL << u;
  const std::uint64_t f_top = bits::moebius(fw, m) & top;
  const std::uint64_t g_top = bits::moebius(bits::moebius(gw, m) & top, m);
  const std::uint32_t shifts = options.allow_shift ? (1u << m) : 1u;
  const gf2::InvertibleMatrices gl(m);

  std::atomic<std::uint64_t> best{kNone};
  std::mutex mu;
  std::uint32_t best_shift = 0;
  const std::uint64_t grain = std::max<std::uint64_t>(1, gl.size() / 256);
  parallel_chunks(gl.size(), grain, options.policy, "equivalence search",
                  [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                    if (begin > best.load()) return;
                    for (auto cur = gl.cursor(begin, end); !cur.done(); cur.advance()) {
                      if ((cur.index() & 0xfff) == 0 && cur.index() > best.load()) return;
                      std::uint32_t cols[kMaxEquivalenceVars] = {};
                      const auto rows = cur.rows();
                      for (int i = 0; i < m; ++i)
                        for (int j = 0; j < m; ++j) cols[j] |= ((rows[i] >> j) & 1u) << i;
                      if (top && (bits::moebius(boolfn::substitute_word(g_top, cols, 0, m), m) & top) != f_top) continue;
                      const std::uint64_t t = boolfn::substitute_word(gw, cols, 0, m);
                      for (std::uint32_t c = 0; c < shifts; ++c) {
                        const std::uint64_t tc = c ? bits::translate(t, c, m) : t;
                        if ((bits::moebius(tc ^ fw, m) & high) == 0) {
                          std::lock_guard lock(mu);
                          if (cur.index() < best.load()) {
                            best = cur.index();
                            best_shift = c;
                          }
                          return;
                        }
                      }
                    }
                  });
  if (best.load() == kNone) return {false, Verdict::ExhaustiveSearch, std::nullopt};

  ElWitness w{gl.at(best.load()), BitVec(m), boolfn::BooleanFunction(m), best.load()};
  const BitVec c = BitVec::from_word(m, best_shift);
  w.b = w.a.multiply(c);
  w.h = f + boolfn::apply_affine_substitution(g, w.a, w.b);
  return {true, Verdict::Witness, std::move(w)};
}

}  // namespace rmm::syn
