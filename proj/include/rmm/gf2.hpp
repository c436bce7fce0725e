#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rmm/bitvec.hpp"

namespace rmm::gf2 {

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

// Dense matrix over GF(2), one packed row per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::span<const BitVec> rows);
  // rows[i] bit j is entry (i, j); needs cols <= 64.
  static BitMatrix from_row_words(std::size_t cols, std::span<const std::uint64_t> rows);
  // cols[j] bit i is entry (i, j); needs rows <= 64.
  static BitMatrix from_column_words(std::size_t rows, std::span<const std::uint64_t> cols);
  // Rows given as '0'/'1' strings.
  static BitMatrix parse(std::span<const std::string> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true);

  BitVec row(std::size_t r) const;
  BitVec column(std::size_t c) const;
  std::uint64_t row_word(std::size_t r) const;
  std::uint64_t column_word(std::size_t c) const;

  BitVec multiply(const BitVec& x) const;
  BitMatrix operator*(const BitMatrix& o) const;
  BitMatrix transpose() const;
  bool operator==(const BitMatrix& o) const = default;

  std::vector<std::string> to_strings() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> data_;
};

int rank(BitMatrix a);
BitMatrix invert(const BitMatrix& a);
bool is_invertible(const BitMatrix& a);

// Rank of a set of row words (each < 2^64).
int rank_of_words(std::span<const std::uint64_t> rows);

// Symmetric n x n matrix stored as its upper triangle, row-major:
// s11, s12, ..., s1n, s22, ..., snn.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n);

  static SymmetricMatrix from_matrix(const BitMatrix& a);
  static SymmetricMatrix from_packed(int n, const BitVec& upper);
  static std::size_t packed_size(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }

  int size() const { return n_; }
  bool get(int i, int j) const { return upper_.get(position(i, j)); }
  void set(int i, int j, bool v = true) { upper_.set(position(i, j), v); }
  const BitVec& packed() const { return upper_; }

  // bit i = s_ii
  std::uint32_t diagonal() const;
  // Row i as a word (n <= 32).
  std::uint32_t row_word(int i) const;
  BitMatrix to_matrix() const;
  bool is_zero() const { return upper_.none(); }

  bool operator==(const SymmetricMatrix& o) const = default;

 private:
  std::size_t position(int i, int j) const;

  int n_ = 0;
  BitVec upper_;
};

int rank(const SymmetricMatrix& s);

// Operations on a factor B that leave B*B^T unchanged.
struct DeleteZeroColumn {
  std::size_t column;
};
struct DeleteEqualColumns {
  std::size_t first, second;
};
struct SwapColumns {
  std::size_t first, second;
};
// Adds `vector` to every listed column; the list must have even size and
// its columns must sum to zero.
struct AddToColumns {
  std::vector<std::size_t> columns;
  BitVec vector;
};
using FactorOp = std::variant<DeleteZeroColumn, DeleteEqualColumns, SwapColumns, AddToColumns>;

BitMatrix factor_ops(const BitMatrix& b, const FactorOp& op);

// GL(m, 2) for 1 <= m <= 5 in a fixed order. Row i of the index-th matrix is
// chosen among the vectors outside span(rows 0..i-1), smallest first, with
// row 0 as the most significant digit.
class InvertibleMatrices {
 public:
  static constexpr int kMaxDimension = 5;

  explicit InvertibleMatrices(int m);

  int dimension() const { return m_; }
  std::uint64_t size() const { return size_; }
  BitMatrix at(std::uint64_t index) const;

  class Cursor {
   public:
    bool done() const { return index_ >= end_; }
    std::uint64_t index() const { return index_; }
    // rows()[i] bit j = entry (i, j)
    std::span<const std::uint32_t> rows() const { return {rows_.data(), static_cast<std::size_t>(m_)}; }
    void advance();

   private:
    friend class InvertibleMatrices;
    Cursor(int m, std::uint64_t begin, std::uint64_t end);
    void rebuild_from(int level);

    int m_;
    std::uint64_t index_, end_;
    std::array<std::uint32_t, kMaxDimension> digits_{};
    std::array<std::uint32_t, kMaxDimension> rows_{};
    std::array<std::array<std::uint32_t, 32>, kMaxDimension> avail_{};
    std::array<std::uint32_t, kMaxDimension> avail_count_{};
  };

  Cursor cursor(std::uint64_t begin, std::uint64_t end) const;

 private:
  int m_;
  std::uint64_t size_;
};

std::uint64_t gl_order(int m);

}  // namespace rmm::gf2
