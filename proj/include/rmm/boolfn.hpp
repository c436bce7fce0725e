#pragma once

#include <climits>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmm/bitvec.hpp"
#include "rmm/gf2.hpp"

namespace rmm::boolfn {

inline constexpr int kMaxVars = 16;

// Algebraic degree; the zero function has degree minus infinity.
class Degree {
 public:
  constexpr explicit Degree(int d) : d_(d) {}
  static constexpr Degree minus_infinity() { return Degree(INT_MIN); }

  constexpr bool is_minus_infinity() const { return d_ == INT_MIN; }
  int value() const;
  std::string to_string() const;

  constexpr auto operator<=>(const Degree&) const = default;
  constexpr bool operator<=(int k) const { return d_ <= k; }
  constexpr bool operator>(int k) const { return d_ > k; }

 private:
  int d_;
};

// f : F_2^m -> F_2. Table index x has bit (i-1) equal to x_i.
class BooleanFunction {
 public:
  explicit BooleanFunction(int m = 0);
  BooleanFunction(int m, BitVec table);

  // m <= 6
  static BooleanFunction from_word(int m, std::uint64_t table);
  static BooleanFunction from_hex(int m, std::string_view hex);

  int vars() const { return m_; }
  std::size_t size() const { return table_.size(); }
  const BitVec& table() const { return table_; }
  // m <= 6
  std::uint64_t word() const;

  bool operator()(std::uint32_t x) const { return table_.get(x); }
  void set(std::uint32_t x, bool v = true) { table_.set(x, v); }
  std::size_t weight() const { return table_.popcount(); }

  BooleanFunction& operator+=(const BooleanFunction& o);
  BooleanFunction& operator*=(const BooleanFunction& o);
  friend BooleanFunction operator+(BooleanFunction a, const BooleanFunction& b) { return a += b; }
  friend BooleanFunction operator*(BooleanFunction a, const BooleanFunction& b) { return a *= b; }
  bool operator==(const BooleanFunction& o) const = default;

  std::string to_hex() const { return table_.to_hex(); }

 private:
  int m_;
  BitVec table_;
};

// Monomials are variable masks: bit (i-1) set means x_i divides it.
class AnfPolynomial {
 public:
  explicit AnfPolynomial(int m = 0);
  AnfPolynomial(int m, std::set<std::uint32_t> monomials);

  int vars() const { return m_; }
  const std::set<std::uint32_t>& monomials() const { return monos_; }
  bool contains(std::uint32_t mono) const { return monos_.count(mono) != 0; }
  bool is_zero() const { return monos_.empty(); }
  Degree degree() const;
  void toggle(std::uint32_t mono);

  // Monomials of degree > k only.
  AnfPolynomial above(int k) const;
  // Monomials of degree exactly d only.
  AnfPolynomial layer(int d) const;

  AnfPolynomial& operator+=(const AnfPolynomial& o);
  friend AnfPolynomial operator+(AnfPolynomial a, const AnfPolynomial& b) { return a += b; }
  bool operator==(const AnfPolynomial& o) const = default;

  // Short notation: "2345+123+14"; "0" is the constant 1 and the zero
  // polynomial prints as "". Needs m <= 9.
  std::string to_abbrev() const;

 private:
  int m_;
  std::set<std::uint32_t> monos_;
};

BooleanFunction truth_table_from_anf(const AnfPolynomial& p);
AnfPolynomial anf_from_truth_table(const BooleanFunction& f);
AnfPolynomial parse_abbrev(std::string_view text, int m);
BooleanFunction parse_function(std::string_view text, int m);  // abbrev or 0x-prefixed hex
Degree degree(const BooleanFunction& f);

// In-place Moebius transform of a full truth table (2^m bits).
void moebius_in_place(BitVec& table, int m);

// W(a) = sum_x (-1)^(f(x) + <a,x>)
std::vector<int> walsh_spectrum(const BooleanFunction& f);
// Distance to the affine functions.
int nonlinearity(const BooleanFunction& f);

// g(x) = f(Ax + b)
BooleanFunction apply_affine_substitution(const BooleanFunction& f, const gf2::BitMatrix& a, const BitVec& b);
// Word form for m <= 6; cols[j] is column j of A.
std::uint64_t substitute_word(std::uint64_t table, const std::uint32_t* cols, std::uint32_t b, int m);

// One step of a variable-change script.
struct ScriptStep {
  enum class Kind { Swap, Add };
  Kind kind;
  int target;              // 1-based
  int other = 0;           // Swap partner
  std::uint32_t sources = 0;  // Add: mask of the other added variables
  bool constant = false;      // Add: "+0", the constant 1

  bool operator==(const ScriptStep&) const = default;
};

// Steps are applied left to right, each as a substitution into the current
// function. Accepts "i<-i+j+0", "i<->j" and the arrow characters.
struct TransformScript {
  int vars = 0;
  std::vector<ScriptStep> steps;

  std::string to_string() const;
};

TransformScript parse_script(std::string_view text, int m);
BooleanFunction run_script(const BooleanFunction& f, const TransformScript& s);
// (A, b) such that run_script(f, s) = f(Ax + b).
std::pair<gf2::BitMatrix, BitVec> script_affine_map(const TransformScript& s);

}  // namespace rmm::boolfn
