#include "sumsetlab/bit_vector.hpp"

#include <algorithm>
#include <cassert>

namespace sumsetlab {

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void BitVector::fill() {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  clear_padding();
}

void BitVector::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

void BitVector::clear_padding() {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

BitVector::Word BitVector::extract(std::size_t pos, std::size_t len) const {
  assert(len <= kWordBits);
  if (len == 0) return 0;
  const std::size_t w = pos / kWordBits;
  const std::size_t off = pos % kWordBits;
  Word v = words_[w] >> off;
  if (off != 0 && off + len > kWordBits && w + 1 < words_.size()) {
    v |= words_[w + 1] << (kWordBits - off);
  }
  if (len < kWordBits) v &= (Word{1} << len) - 1;
  return v;
}

void BitVector::or_range(const BitVector& src, std::size_t src_pos,
                         std::size_t dst_pos, std::size_t len) {
  assert(src_pos + len <= src.size_ && dst_pos + len <= size_);
  while (len > 0) {
    const std::size_t off = dst_pos % kWordBits;
    const std::size_t chunk = std::min(len, kWordBits - off);
    words_[dst_pos / kWordBits] |= src.extract(src_pos, chunk) << off;
    src_pos += chunk;
    dst_pos += chunk;
    len -= chunk;
  }
}

}  // namespace sumsetlab
