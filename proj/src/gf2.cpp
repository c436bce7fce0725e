#include "rmm/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace rmm::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, i);
  return a;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVec> rows) {
  if (rows.empty()) return {};
  BitMatrix a(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != a.cols_) throw std::invalid_argument("ragged rows");
    std::copy(rows[r].words().begin(), rows[r].words().end(), a.data_.begin() + r * a.stride_);
  }
  return a;
}

BitMatrix BitMatrix::from_row_words(std::size_t cols, std::span<const std::uint64_t> rows) {
  if (cols > 64) throw std::invalid_argument("from_row_words: more than 64 columns");
  BitMatrix a(rows.size(), cols);
  const std::uint64_t mask = cols == 64 ? ~0ULL : (1ULL << cols) - 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] & ~mask) throw std::invalid_argument("from_row_words: entry beyond column count");
    if (cols) a.data_[r] = rows[r];
  }
  return a;
}

BitMatrix BitMatrix::from_column_words(std::size_t rows, std::span<const std::uint64_t> cols) {
  if (rows > 64) throw std::invalid_argument("from_column_words: more than 64 rows");
  BitMatrix a(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (rows < 64 && (cols[c] >> rows)) throw std::invalid_argument("from_column_words: entry beyond row count");
    for (std::size_t r = 0; r < rows; ++r)
      if ((cols[c] >> r) & 1u) a.set(r, c);
  }
  return a;
}

BitMatrix BitMatrix::parse(std::span<const std::string> rows) {
  std::vector<BitVec> v;
  for (const auto& r : rows) v.push_back(BitVec::from_bits(r));
  return from_rows(v);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto& w = data_[r * stride_ + (c >> 6)];
  const std::uint64_t m = 1ULL << (c & 63);
  w = v ? (w | m) : (w & ~m);
}

BitVec BitMatrix::row(std::size_t r) const {
  BitVec v(cols_);
  std::copy_n(data_.begin() + r * stride_, stride_, v.words().begin());
  return v;
}

BitVec BitMatrix::column(std::size_t c) const {
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

std::uint64_t BitMatrix::row_word(std::size_t r) const {
  if (cols_ > 64) throw std::invalid_argument("row_word: more than 64 columns");
  return cols_ ? data_[r * stride_] : 0;
}

std::uint64_t BitMatrix::column_word(std::size_t c) const {
  if (rows_ > 64) throw std::invalid_argument("column_word: more than 64 rows");
  std::uint64_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) w |= 1ULL << r;
  return w;
}

BitVec BitMatrix::multiply(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  BitVec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    int p = 0;
    for (std::size_t w = 0; w < stride_; ++w) p ^= std::popcount(data_[r * stride_ + w] & x.words()[w]) & 1;
    if (p) y.set(r);
  }
  return y;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  BitMatrix c(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k))
        for (std::size_t w = 0; w < o.stride_; ++w) c.data_[i * c.stride_ + w] ^= o.data_[k * o.stride_ + w];
  return c;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).to_bits());
  return out;
}

namespace {

// Row-reduces in place over the first `limit` columns; returns the rank.
int eliminate(std::vector<std::uint64_t>& data, std::size_t rows, std::size_t stride, std::size_t limit) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < limit && rank < rows; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t bit = 1ULL << (c & 63);
    std::size_t pivot = rank;
    while (pivot < rows && !(data[pivot * stride + w] & bit)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(data.begin() + pivot * stride, data.begin() + (pivot + 1) * stride,
                       data.begin() + rank * stride);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && (data[r * stride + w] & bit))
        for (std::size_t k = 0; k < stride; ++k) data[r * stride + k] ^= data[rank * stride + k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int rank(BitMatrix a) {
  std::vector<std::uint64_t> data;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const BitVec row = a.row(r);
    data.insert(data.end(), row.words().begin(), row.words().end());
  }
  return eliminate(data, a.rows(), (a.cols() + 63) / 64, a.cols());
}

int rank_of_words(std::span<const std::uint64_t> rows) {
  std::vector<std::uint64_t> basis;
  for (auto v : rows) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

BitMatrix invert(const BitMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix is not square");
  const std::size_t n = a.rows();
  BitMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (a.get(r, c)) aug.set(r, c);
    aug.set(r, n + r);
  }
  std::vector<std::uint64_t> data;
  for (std::size_t r = 0; r < n; ++r) {
    const BitVec row = aug.row(r);
    data.insert(data.end(), row.words().begin(), row.words().end());
  }
  const std::size_t stride = (2 * n + 63) / 64;
  if (eliminate(data, n, stride, n) != static_cast<int>(n)) throw SingularMatrixError();
  BitMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t col = n + c;
      if ((data[r * stride + (col >> 6)] >> (col & 63)) & 1u) inv.set(r, c);
    }
  return inv;
}

bool is_invertible(const BitMatrix& a) {
  return a.rows() == a.cols() && rank(a) == static_cast<int>(a.rows());
}

SymmetricMatrix::SymmetricMatrix(int n) : n_(n), upper_(packed_size(n)) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
}

std::size_t SymmetricMatrix::position(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_) throw std::out_of_range("symmetric matrix index");
  return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
}

SymmetricMatrix SymmetricMatrix::from_matrix(const BitMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
  SymmetricMatrix s(static_cast<int>(a.rows()));
  for (int i = 0; i < s.n_; ++i)
    for (int j = i; j < s.n_; ++j) {
      if (a.get(i, j) != a.get(j, i)) throw std::invalid_argument("matrix is not symmetric");
      if (a.get(i, j)) s.set(i, j);
    }
  return s;
}

SymmetricMatrix SymmetricMatrix::from_packed(int n, const BitVec& upper) {
  if (upper.size() != packed_size(n))
    throw std::invalid_argument("packed symmetric matrix needs " + std::to_string(packed_size(n)) + " bits");
  SymmetricMatrix s(n);
  s.upper_ = upper;
  return s;
}

std::uint32_t SymmetricMatrix::diagonal() const {
  std::uint32_t d = 0;
  for (int i = 0; i < n_; ++i)
    if (get(i, i)) d |= 1u << i;
  return d;
}

std::uint32_t SymmetricMatrix::row_word(int i) const {
  if (n_ > 32) throw std::invalid_argument("row_word: matrix larger than 32");
  std::uint32_t w = 0;
  for (int j = 0; j < n_; ++j)
    if (get(i, j)) w |= 1u << j;
  return w;
}

BitMatrix SymmetricMatrix::to_matrix() const {
  BitMatrix a(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) a.set(i, j);
  return a;
}

int rank(const SymmetricMatrix& s) { return rank(s.to_matrix()); }

namespace {

void check_column(const BitMatrix& b, std::size_t c) {
  if (c >= b.cols()) throw std::invalid_argument("column index out of range");
}

BitMatrix drop_columns(const BitMatrix& b, std::size_t c1, std::size_t c2) {
  std::vector<BitVec> cols;
  for (std::size_t c = 0; c < b.cols(); ++c)
    if (c != c1 && c != c2) cols.push_back(b.column(c));
  BitMatrix out(b.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < b.rows(); ++r)
      if (cols[c].get(r)) out.set(r, c);
  return out;
}

}  // namespace

BitMatrix factor_ops(const BitMatrix& b, const FactorOp& op) {
  if (const auto* o = std::get_if<DeleteZeroColumn>(&op)) {
    check_column(b, o->column);
    if (!b.column(o->column).none()) throw std::invalid_argument("column is not zero");
    return drop_columns(b, o->column, o->column);
  }
  if (const auto* o = std::get_if<DeleteEqualColumns>(&op)) {
    check_column(b, o->first);
    check_column(b, o->second);
    if (o->first == o->second) throw std::invalid_argument("columns must be distinct");
    if (b.column(o->first) != b.column(o->second)) throw std::invalid_argument("columns are not equal");
    return drop_columns(b, o->first, o->second);
  }
  if (const auto* o = std::get_if<SwapColumns>(&op)) {
    check_column(b, o->first);
    check_column(b, o->second);
    BitMatrix out = b;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      out.set(r, o->first, b.get(r, o->second));
      out.set(r, o->second, b.get(r, o->first));
    }
    return out;
  }
  const auto& o = std::get<AddToColumns>(op);
  if (o.vector.size() != b.rows()) throw std::invalid_argument("vector length must equal row count");
  if (o.columns.size() % 2 != 0) throw std::invalid_argument("column subset must have even size");
  std::vector<std::size_t> cols = o.columns;
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw std::invalid_argument("column subset has repeated entries");
  BitVec sum(b.rows());
  for (auto c : cols) {
    check_column(b, c);
    sum ^= b.column(c);
  }
  if (!sum.none()) throw std::invalid_argument("column subset does not sum to zero");
  BitMatrix out = b;
  for (auto c : cols)
    for (std::size_t r = 0; r < b.rows(); ++r)
      if (o.vector.get(r)) out.set(r, c, !out.get(r, c));
  return out;
}

std::uint64_t gl_order(int m) {
  std::uint64_t n = 1;
  for (int k = 0; k < m; ++k) n *= (1ULL << m) - (1ULL << k);
  return n;
}

InvertibleMatrices::InvertibleMatrices(int m) : m_(m), size_(0) {
  if (m < 1 || m > kMaxDimension)
    throw std::invalid_argument("GL(m,2) enumeration supports 1 <= m <= 5, got m = " + std::to_string(m));
  size_ = gl_order(m);
}

BitMatrix InvertibleMatrices::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("GL index out of range");
  Cursor c = cursor(index, index + 1);
  std::vector<std::uint64_t> rows(c.rows().begin(), c.rows().end());
  return BitMatrix::from_row_words(m_, rows);
}

InvertibleMatrices::Cursor InvertibleMatrices::cursor(std::uint64_t begin, std::uint64_t end) const {
  end = std::min(end, size_);
  return Cursor(m_, std::min(begin, end), end);
}

InvertibleMatrices::Cursor::Cursor(int m, std::uint64_t begin, std::uint64_t end)
    : m_(m), index_(begin), end_(end) {
  if (done()) return;
  std::uint64_t rest = begin;
  for (int k = m_ - 1; k >= 0; --k) {
    const std::uint64_t base = (1ULL << m_) - (1ULL << k);
    digits_[k] = static_cast<std::uint32_t>(rest % base);
    rest /= base;
  }
  rebuild_from(0);
}

void InvertibleMatrices::Cursor::rebuild_from(int level) {
  const std::uint32_t universe = 1u << m_;
  for (int k = level; k < m_; ++k) {
    // span of rows 0..k-1 as a membership mask over the 2^m vectors
    std::uint64_t span = 1;
    for (int i = 0; i < k; ++i) {
      std::uint64_t shifted = 0;
      for (std::uint32_t e = 0; e < universe; ++e)
        if ((span >> e) & 1u) shifted |= 1ULL << (e ^ rows_[i]);
      span |= shifted;
    }
    std::uint32_t n = 0;
    for (std::uint32_t e = 1; e < universe; ++e)
      if (!((span >> e) & 1u)) avail_[k][n++] = e;
    avail_count_[k] = n;
    rows_[k] = avail_[k][digits_[k]];
  }
}

void InvertibleMatrices::Cursor::advance() {
  if (++index_ >= end_) return;
  int level = m_ - 1;
  while (++digits_[level] == avail_count_[level]) {
    digits_[level] = 0;
    --level;
  }
  rows_[level] = avail_[level][digits_[level]];
  if (level + 1 < m_) rebuild_from(level + 1);
}

}  // namespace rmm::gf2
