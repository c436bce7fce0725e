#include "rmm/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "rmm/bits.hpp"

namespace rmm::boolfn {

namespace {

void check_vars(int m) {
  if (m < 0 || m > kMaxVars)
    throw std::invalid_argument("number of variables must be in [0, " + std::to_string(kMaxVars) +
                                "], got " + std::to_string(m));
}

std::string mono_digits(std::uint32_t mono) {
  std::string s;
  for (int i = 0; i < 32; ++i)
    if ((mono >> i) & 1u) s += static_cast<char>('1' + i);
  return s;
}

}  // namespace

int Degree::value() const {
  if (is_minus_infinity()) throw std::logic_error("degree of the zero function is minus infinity");
  return d_;
}

std::string Degree::to_string() const { return is_minus_infinity() ? "-inf" : std::to_string(d_); }

BooleanFunction::BooleanFunction(int m) : m_(m) {
  check_vars(m);
  table_ = BitVec(std::size_t{1} << m);
}

BooleanFunction::BooleanFunction(int m, BitVec table) : m_(m), table_(std::move(table)) {
  check_vars(m);
  if (table_.size() != (std::size_t{1} << m))
    throw std::invalid_argument("truth table length must be 2^m");
}

BooleanFunction BooleanFunction::from_word(int m, std::uint64_t table) {
  if (m > 6) throw std::invalid_argument("from_word needs m <= 6");
  return BooleanFunction(m, BitVec::from_word(std::size_t{1} << m, table));
}

BooleanFunction BooleanFunction::from_hex(int m, std::string_view hex) {
  check_vars(m);
  return BooleanFunction(m, BitVec::from_hex(hex, std::size_t{1} << m));
}

std::uint64_t BooleanFunction::word() const {
  if (m_ > 6) throw std::invalid_argument("word() needs m <= 6");
  return table_.word(0);
}

BooleanFunction& BooleanFunction::operator+=(const BooleanFunction& o) {
  if (m_ != o.m_) throw std::invalid_argument("functions have different numbers of variables");
  table_ ^= o.table_;
  return *this;
}

BooleanFunction& BooleanFunction::operator*=(const BooleanFunction& o) {
  if (m_ != o.m_) throw std::invalid_argument("functions have different numbers of variables");
  table_ &= o.table_;
  return *this;
}

AnfPolynomial::AnfPolynomial(int m) : m_(m) { check_vars(m); }

AnfPolynomial::AnfPolynomial(int m, std::set<std::uint32_t> monomials) : m_(m), monos_(std::move(monomials)) {
  check_vars(m);
  for (auto u : monos_)
    if (u >> m) throw std::invalid_argument("monomial uses a variable beyond x_m");
}

Degree AnfPolynomial::degree() const {
  int d = INT_MIN;
  for (auto u : monos_) d = std::max(d, std::popcount(u));
  return Degree(d);
}

void AnfPolynomial::toggle(std::uint32_t mono) {
  if (mono >> m_) throw std::invalid_argument("monomial uses a variable beyond x_m");
  if (!monos_.erase(mono)) monos_.insert(mono);
}

AnfPolynomial AnfPolynomial::above(int k) const {
  AnfPolynomial p(m_);
  for (auto u : monos_)
    if (std::popcount(u) > k) p.monos_.insert(u);
  return p;
}

AnfPolynomial AnfPolynomial::layer(int d) const {
  AnfPolynomial p(m_);
  for (auto u : monos_)
    if (std::popcount(u) == d) p.monos_.insert(u);
  return p;
}

AnfPolynomial& AnfPolynomial::operator+=(const AnfPolynomial& o) {
  if (m_ != o.m_) throw std::invalid_argument("polynomials have different numbers of variables");
  for (auto u : o.monos_) toggle(u);
  return *this;
}

std::string AnfPolynomial::to_abbrev() const {
  if (m_ > 9) throw std::invalid_argument("short notation needs m <= 9");
  std::vector<std::uint32_t> order(monos_.begin(), monos_.end());
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    const int da = std::popcount(a), db = std::popcount(b);
    if (da != db) return da > db;
    return mono_digits(a) < mono_digits(b);
  });
  std::string out;
  for (auto u : order) {
    if (!out.empty()) out += '+';
    out += u == 0 ? "0" : mono_digits(u);
  }
  return out;
}

void moebius_in_place(BitVec& table, int m) {
  auto w = table.words();
  if (m <= 6) {
    if (!w.empty()) w[0] = bits::moebius(w[0], m);
    return;
  }
  for (auto& x : w) x = bits::moebius(x, 6);
  for (int j = 6; j < m; ++j) {
    const std::size_t step = std::size_t{1} << (j - 6);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i & step) w[i] ^= w[i ^ step];
  }
}

BooleanFunction truth_table_from_anf(const AnfPolynomial& p) {
  BitVec coeffs(std::size_t{1} << p.vars());
  for (auto u : p.monomials()) coeffs.set(u);
  moebius_in_place(coeffs, p.vars());
  return BooleanFunction(p.vars(), std::move(coeffs));
}

AnfPolynomial anf_from_truth_table(const BooleanFunction& f) {
  BitVec coeffs = f.table();
  moebius_in_place(coeffs, f.vars());
  std::set<std::uint32_t> monos;
  for (std::uint32_t u = 0; u < coeffs.size(); ++u)
    if (coeffs.get(u)) monos.insert(u);
  return AnfPolynomial(f.vars(), std::move(monos));
}

Degree degree(const BooleanFunction& f) { return anf_from_truth_table(f).degree(); }

AnfPolynomial parse_abbrev(std::string_view text, int m) {
  check_vars(m);
  if (m > 9) throw std::invalid_argument("short notation needs m <= 9");
  AnfPolynomial p(m);
  if (text.empty()) return p;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t plus = text.find('+', pos);
    const std::string_view term = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    if (term.empty()) throw std::invalid_argument("empty term in '" + std::string(text) + "'");
    std::uint32_t mono = 0;
    if (term == "0") {
      mono = 0;
    } else {
      int last = 0;
      for (char c : term) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad character in term '" + std::string(term) + "'");
        const int v = c - '0';
        if (v > m) throw std::invalid_argument("variable x" + std::to_string(v) + " exceeds m = " + std::to_string(m));
        if (v <= last) throw std::invalid_argument("variables in term '" + std::string(term) + "' must be increasing");
        last = v;
        mono |= 1u << (v - 1);
      }
    }
    p.toggle(mono);
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return p;
}

BooleanFunction parse_function(std::string_view text, int m) {
  if (text.substr(0, 2) == "0x") return BooleanFunction::from_hex(m, text.substr(2));
  return truth_table_from_anf(parse_abbrev(text, m));
}

std::vector<int> walsh_spectrum(const BooleanFunction& f) {
  std::vector<int> w(f.size());
  for (std::size_t x = 0; x < w.size(); ++x) w[x] = f(static_cast<std::uint32_t>(x)) ? -1 : 1;
  for (std::size_t h = 1; h < w.size(); h <<= 1)
    for (std::size_t i = 0; i < w.size(); i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const int a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
  return w;
}

int nonlinearity(const BooleanFunction& f) {
  int best = 0;
  for (int v : walsh_spectrum(f)) best = std::max(best, std::abs(v));
  return static_cast<int>(f.size() / 2) - best / 2;
}

std::uint64_t substitute_word(std::uint64_t table, const std::uint32_t* cols, std::uint32_t b, int m) {
  std::uint64_t out = 0;
  std::uint32_t y = b;
  // Gray order: y tracks Ax + b as x walks the cube.
  std::uint32_t x = 0;
  const std::uint32_t n = 1u << m;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i) {
      const int j = std::countr_zero(i);
      x ^= 1u << j;
      y ^= cols[j];
    }
    out |= ((table >> y) & 1ULL) << x;
  }
  return out;
}

BooleanFunction apply_affine_substitution(const BooleanFunction& f, const gf2::BitMatrix& a, const BitVec& b) {
  const int m = f.vars();
  if (a.rows() != static_cast<std::size_t>(m) || a.cols() != static_cast<std::size_t>(m))
    throw std::invalid_argument("substitution matrix must be m x m");
  if (b.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("shift vector must have length m");
  std::vector<std::uint32_t> cols(m);
  for (int j = 0; j < m; ++j) cols[j] = static_cast<std::uint32_t>(a.column_word(j));
  const std::uint32_t shift = static_cast<std::uint32_t>(b.word(0));
  if (m <= 6) return BooleanFunction::from_word(m, substitute_word(f.word(), cols.data(), shift, m));
  BooleanFunction g(m);
  std::uint32_t x = 0, y = shift;
  for (std::uint32_t i = 0; i < (1u << m); ++i) {
    if (i) {
      const int j = std::countr_zero(i);
      x ^= 1u << j;
      y ^= cols[j];
    }
    if (f(y)) g.set(x);
  }
  return g;
}

}  // namespace rmm::boolfn
