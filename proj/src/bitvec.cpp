#include "rmm/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace rmm {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVec BitVec::from_word(std::size_t size, std::uint64_t word) {
  if (size > 64) throw std::invalid_argument("from_word: size exceeds 64");
  if (size < 64 && (word >> size) != 0)
    throw std::invalid_argument("from_word: bits set beyond size");
  BitVec v(size);
  if (size > 0) v.words_[0] = word;
  return v;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t size) {
  if (hex.substr(0, 2) == "0x" || hex.substr(0, 2) == "0X") hex.remove_prefix(2);
  const std::size_t digits = (size + 3) / 4;
  if (hex.size() != digits)
    throw std::invalid_argument("hex length " + std::to_string(hex.size()) +
                                " does not match " + std::to_string(digits) + " digits");
  BitVec v(size);
  for (std::size_t d = 0; d < digits; ++d) {
    const int val = hex_value(hex[digits - 1 - d]);
    if (val < 0) throw std::invalid_argument("bad hex digit");
    for (int b = 0; b < 4; ++b) {
      if (!((val >> b) & 1)) continue;
      const std::size_t i = 4 * d + b;
      if (i >= size) throw std::invalid_argument("hex sets bits beyond size");
      v.set(i);
    }
  }
  return v;
}

BitVec BitVec::from_bits(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v.set(i);
    else if (bits[i] != '0') throw std::invalid_argument("bit string must contain only 0 and 1");
  }
  return v;
}

void BitVec::set(std::size_t i, bool v) {
  const std::uint64_t m = 1ULL << (i & 63);
  if (v) words_[i >> 6] |= m;
  else words_[i >> 6] &= ~m;
}

std::size_t BitVec::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool BitVec::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

void BitVec::check_same_size(const BitVec& o) const {
  if (size_ != o.size_) throw std::invalid_argument("bit vector length mismatch");
}

BitVec& BitVec::operator^=(const BitVec& o) {
  check_same_size(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  check_same_size(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
  check_same_size(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

std::strong_ordering BitVec::operator<=>(const BitVec& o) const {
  if (auto c = size_ <=> o.size_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;)
    if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (size_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    const std::uint64_t nib = (words_[(4 * d) >> 6] >> ((4 * d) & 63)) & 0xf;
    out[digits - 1 - d] = kDigits[nib];
  }
  return out;
}

std::string BitVec::to_bits() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) out[i] = '1';
  return out;
}

}  // namespace rmm
