#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rmm/bitvec.hpp"
#include "rmm/boolfn.hpp"
#include "rmm/gf2.hpp"
#include "rmm/parallel.hpp"

namespace rmm::syn {

inline constexpr int kMaxSyndromeVars = 8;

// B with columns[c] bit i = B(i, c).
struct Factor {
  int rows = 0;
  std::vector<std::uint32_t> columns;

  gf2::SymmetricMatrix product() const;
  gf2::BitMatrix matrix() const;
  int nonzero_columns() const;
};

// Rows: punctured tables of x_1..x_m, then x_i x_j (i < j) in lexicographic
// order. Column p is the input p + 1.
gf2::BitMatrix parity_check_rm_m3(int m);
gf2::SymmetricMatrix syndrome_matrix(const BitVec& punctured, int m);
Factor bv_matrix(const BitVec& punctured, int m);

struct MinimalFactor {
  int t;
  Factor factor;  // nonzero distinct columns, increasing
};
// Exact t(S) with the lexicographically smallest minimal column set.
MinimalFactor t_of_s(const gf2::SymmetricMatrix& s);
bool is_t_maximal(const gf2::SymmetricMatrix& s);
// Distance of a punctured vector to the punctured RM(m-3, m).
int distance_via_syndrome(const BitVec& punctured, int m);
BitVec coset_leader_from_factor(const Factor& b, int m);

enum class GeneratorFamily { G, G1, G2 };
std::string to_string(GeneratorFamily f);

struct ComplementGenerators {
  int m = 0;
  bool even = false;
  std::vector<std::string> descriptions;

  // One function per distinct support; needs m <= 5.
  std::vector<std::pair<GeneratorFamily, boolfn::BooleanFunction>> members() const;
};
ComplementGenerators complement_generators(int m);

boolfn::AnfPolynomial gstar(int m);
boolfn::AnfPolynomial g1star(int m);
boolfn::AnfPolynomial g2star(int m);
// Sum over i < j <= m-1 of the product of x_1..x_{m-1} without x_i, x_j.
boolfn::AnfPolynomial gstar_partial(int m);

struct QuadraticForm {
  int m = 0;
  std::set<std::pair<int, int>> pairs;  // 1-based, i < j

  bool operator==(const QuadraticForm&) const = default;
  QuadraticForm& operator+=(const QuadraticForm& o);
  boolfn::AnfPolynomial to_anf() const;
};
QuadraticForm quadratic_dual(const boolfn::AnfPolynomial& f);
int quad_canonical_rank(const QuadraticForm& q);

struct ElOptions {
  bool allow_shift = false;
  bool use_invariants = true;
  bool use_rank_invariant = true;
  ExecPolicy policy;
};

enum class Verdict { Witness, DegreeProfile, WeightDistribution, CanonicalRank, ExhaustiveSearch };
std::string to_string(Verdict v);

// f(x) = g(Ax + b) + h(x), deg h <= k
struct ElWitness {
  gf2::BitMatrix a;
  BitVec b;
  boolfn::BooleanFunction h;
  std::uint64_t index;  // position of A in the GL(m,2) order
};

struct ElResult {
  bool equivalent = false;
  Verdict decided_by = Verdict::ExhaustiveSearch;
  std::optional<ElWitness> witness;
};

inline constexpr int kMaxEquivalenceVars = 5;

ElResult el_equivalent(const boolfn::BooleanFunction& f, const boolfn::BooleanFunction& g, int k,
                       const ElOptions& options = {});

// Histogram of wt(f + c) over c in RM(k, m); m <= 6, dim RM(k,m) <= 20.
std::vector<std::uint32_t> coset_weight_distribution(const boolfn::BooleanFunction& f, int k);

bool lemma8_form(const gf2::BitMatrix& a);

}  // namespace rmm::syn
