#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rmm {

// Packed bit vector; bit i lives in word i/64. Unused high bits stay zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size);

  static BitVec from_word(std::size_t size, std::uint64_t word);
  // Lowercase hex, most significant digit first.
  static BitVec from_hex(std::string_view hex, std::size_t size);
  // '0'/'1' characters, index 0 first.
  static BitVec from_bits(std::string_view bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

  std::size_t popcount() const;
  bool none() const;
  std::uint64_t word(std::size_t w = 0) const { return w < words_.size() ? words_[w] : 0; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  BitVec& operator^=(const BitVec& o);
  BitVec& operator&=(const BitVec& o);
  BitVec& operator|=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  bool operator==(const BitVec& o) const = default;
  std::strong_ordering operator<=>(const BitVec& o) const;

  std::string to_hex() const;
  std::string to_bits() const;

 private:
  void check_same_size(const BitVec& o) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rmm
