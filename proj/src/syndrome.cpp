#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "rmm/syndrome.hpp"

namespace rmm::syn {

namespace {

using Rows = std::array<std::uint32_t, kMaxSyndromeVars>;

void check_punctured(const BitVec& v, int m) {
  if (m < 1 || m > boolfn::kMaxVars) throw std::invalid_argument("m out of range");
  if (v.size() != (std::size_t{1} << m) - 1)
    throw std::invalid_argument("punctured vector must have length 2^m - 1 = " +
                                std::to_string((1u << m) - 1) + ", got " + std::to_string(v.size()));
}

int rank_rows(const Rows& r, int m) {
  std::array<std::uint32_t, 32> basis{};
  int rank = 0;
  for (int i = 0; i < m; ++i) {
    std::uint32_t v = r[i];
    while (v) {
      const int top = 31 - std::countl_zero(v);
      if (!basis[top]) {
        basis[top] = v;
        ++rank;
        break;
      }
      v ^= basis[top];
    }
  }
  return rank;
}

struct Search {
  int m;
  int k;
  std::uint32_t limit;
  std::array<std::uint32_t, kMaxSyndromeVars + 1> chosen{};
  // xor basis of the chosen prefix, keyed by top bit
  std::array<std::array<std::uint32_t, kMaxSyndromeVars>, kMaxSyndromeVars + 2> basis{};

  static bool in_span(std::uint32_t c, const std::array<std::uint32_t, kMaxSyndromeVars>& b) {
    while (c) {
      const int top = 31 - std::countl_zero(c);
      if (!b[top]) return false;
      c ^= b[top];
    }
    return true;
  }

  bool run(int depth, std::uint32_t start, const Rows& r) {
    const int remaining = k - depth;
    if (remaining == 1) {
      std::uint32_t c = 0;
      for (int i = 0; i < m; ++i) c |= ((r[i] >> i) & 1u) << i;
      if (c == 0 || c < start) return false;
      for (int i = 0; i < m; ++i)
        if (r[i] != (((c >> i) & 1u) ? c : 0u)) return false;
      chosen[depth] = c;
      return true;
    }
    for (std::uint32_t c = start; c < limit; ++c) {
      if (in_span(c, basis[depth])) continue;
      Rows next = r;
      for (int i = 0; i < m; ++i)
        if ((c >> i) & 1u) next[i] ^= c;
      if (rank_rows(next, m) > remaining - 1) continue;
      chosen[depth] = c;
      basis[depth + 1] = basis[depth];
      std::uint32_t v = c;
      while (v) {
        const int top = 31 - std::countl_zero(v);
        if (!basis[depth + 1][top]) {
          basis[depth + 1][top] = v;
          break;
        }
        v ^= basis[depth + 1][top];
      }
      if (run(depth + 1, c + 1, next)) return true;
    }
    return false;
  }
};

}  // namespace

gf2::SymmetricMatrix Factor::product() const {
  gf2::SymmetricMatrix s(rows);
  for (auto c : columns)
    for (int i = 0; i < rows; ++i)
      if ((c >> i) & 1u)
        for (int j = i; j < rows; ++j)
          if ((c >> j) & 1u) s.set(i, j, !s.get(i, j));
  return s;
}

gf2::BitMatrix Factor::matrix() const {
  gf2::BitMatrix b(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (int i = 0; i < rows; ++i)
      if ((columns[c] >> i) & 1u) b.set(i, c);
  return b;
}

int Factor::nonzero_columns() const {
  return static_cast<int>(std::count_if(columns.begin(), columns.end(), [](std::uint32_t c) { return c != 0; }));
}

gf2::BitMatrix parity_check_rm_m3(int m) {
  if (m < 3) throw std::invalid_argument("parity check of RM(m-3,m) needs m >= 3");
  if (m > boolfn::kMaxVars) throw std::invalid_argument("m too large");
  const std::size_t n = (std::size_t{1} << m) - 1;
  gf2::BitMatrix h(m + m * (m - 1) / 2, n);
  std::size_t row = 0;
  for (int i = 0; i < m; ++i, ++row)
    for (std::size_t p = 0; p < n; ++p)
      if (((p + 1) >> i) & 1u) h.set(row, p);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j, ++row)
      for (std::size_t p = 0; p < n; ++p)
        if ((((p + 1) >> i) & 1u) && (((p + 1) >> j) & 1u)) h.set(row, p);
  return h;
}

gf2::SymmetricMatrix syndrome_matrix(const BitVec& v, int m) {
  check_punctured(v, m);
  // s_ij = sum over supported inputs x of x_i x_j
  gf2::SymmetricMatrix s(m);
  std::vector<std::uint32_t> acc(m, 0);
  for (std::size_t p = 0; p < v.size(); ++p)
    if (v.get(p)) {
      const auto x = static_cast<std::uint32_t>(p + 1);
      for (int i = 0; i < m; ++i)
        if ((x >> i) & 1u) acc[i] ^= x;
    }
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      if ((acc[i] >> j) & 1u) s.set(i, j);
  return s;
}

Factor bv_matrix(const BitVec& v, int m) {
  check_punctured(v, m);
  Factor b{m, std::vector<std::uint32_t>(v.size(), 0)};
  for (std::size_t p = 0; p < v.size(); ++p)
    if (v.get(p)) b.columns[p] = static_cast<std::uint32_t>(p + 1);
  return b;
}

MinimalFactor t_of_s(const gf2::SymmetricMatrix& s) {
  const int m = s.size();
  if (m > kMaxSyndromeVars)
    throw std::domain_error("t(S) search supports m <= " + std::to_string(kMaxSyndromeVars) +
                            ", got " + std::to_string(m));
  if (s.is_zero()) return {0, Factor{m, {}}};
  Rows r{};
  for (int i = 0; i < m; ++i) r[i] = s.row_word(i);
  const int rk = rank_rows(r, m);
  for (int k = rk; k <= m + 1; ++k) {
    Search search{m, k, 1u << m};
    if (search.run(0, 1, r)) {
      Factor f{m, std::vector<std::uint32_t>(search.chosen.begin(), search.chosen.begin() + k)};
      return {k, std::move(f)};
    }
  }
  throw std::logic_error("no factor with at most m+1 columns; matrix is not symmetric?");
}

bool is_t_maximal(const gf2::SymmetricMatrix& s) {
  const int m = s.size();
  if (m < 1) return false;
  const int rk = gf2::rank(s);
  const bool zero_diag = s.diagonal() == 0;
  if (m % 2 == 0) return rk == m && zero_diag;
  return (rk == m && !zero_diag) || (rk == m - 1 && zero_diag && !s.is_zero());
}

int distance_via_syndrome(const BitVec& punctured, int m) {
  if (m < 3) throw std::invalid_argument("punctured RM(m-3,m) needs m >= 3");
  if (m > kMaxSyndromeVars) throw std::domain_error("syndrome distance supports m <= 8");
  return t_of_s(syndrome_matrix(punctured, m)).t;
}

BitVec coset_leader_from_factor(const Factor& b, int m) {
  if (b.rows != m) throw std::invalid_argument("factor has the wrong number of rows");
  BitVec u((std::size_t{1} << m) - 1);
  for (auto c : b.columns) {
    if (c == 0) throw std::invalid_argument("factor has a zero column");
    if (c >> m) throw std::invalid_argument("factor column out of range");
    if (u.get(c - 1)) throw std::invalid_argument("factor has repeated columns");
    u.set(c - 1);
  }
  return u;
}

}  // namespace rmm::syn
