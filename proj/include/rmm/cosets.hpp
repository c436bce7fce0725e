#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "rmm/parallel.hpp"

namespace rmm::rm {

// Cosets of a binary code of length n <= 64. The index of a coset is the
// vector of its reduced form restricted to the non-pivot positions, so the
// unit vectors at those positions form the complement basis.
class CosetSpace {
 public:
  CosetSpace(int length, std::span<const std::uint64_t> generators);

  int length() const { return n_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int codimension() const { return n_ - dimension(); }
  std::uint64_t coset_count() const;

  std::uint64_t index_of(std::uint64_t v) const {
    std::uint64_t idx = 0;
    for (std::size_t b = 0; b < index_tables_.size(); ++b) idx ^= index_tables_[b][(v >> (8 * b)) & 0xff];
    return idx;
  }
  std::uint64_t representative(std::uint64_t index) const {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < deposit_tables_.size(); ++b) v |= deposit_tables_[b][(index >> (8 * b)) & 0xff];
    return v;
  }
  bool in_code(std::uint64_t v) const { return index_of(v) == 0; }

  // Reduced row echelon basis of the code.
  std::span<const std::uint64_t> basis() const { return basis_; }
  std::span<const int> free_positions() const { return free_; }
  std::uint64_t unit_index(int position) const { return unit_index_[position]; }

  // Visits all 2^dim codewords in Gray order.
  template <class F>
  void for_each_codeword(F&& visit) const {
    std::uint64_t c = 0;
    const std::uint64_t count = 1ULL << basis_.size();
    for (std::uint64_t i = 0; i < count; ++i) {
      if (i) c ^= basis_[std::countr_zero(i)];
      visit(c);
    }
  }

 private:
  int n_;
  std::vector<std::uint64_t> basis_;
  std::vector<int> pivots_, free_;
  std::vector<std::uint64_t> unit_index_;
  std::vector<std::array<std::uint64_t, 256>> index_tables_;
  std::vector<std::array<std::uint64_t, 256>> deposit_tables_;
};

inline constexpr int kMaxTableCodimension = 26;

// Minimum weight of every coset, by breadth-first search from the code.
std::vector<std::uint8_t> coset_leader_weights(const CosetSpace& space);

// Distance from every coset to the union of the marked cosets.
std::vector<std::uint8_t> distance_to_cosets(const CosetSpace& space, const std::vector<std::uint8_t>& marked);

}  // namespace rmm::rm
