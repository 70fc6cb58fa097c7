#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sumsetlab {

// Fixed-length dense bit array backed by 64-bit words. Bits at positions
// >= size() are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  // Sets bit i and reports whether it was previously clear.
  bool test_and_set(std::size_t i) {
    Word& w = words_[i / kWordBits];
    const Word mask = Word{1} << (i % kWordBits);
    const bool was_clear = (w & mask) == 0;
    w |= mask;
    return was_clear;
  }

  std::size_t count() const;
  bool none() const;
  void fill();
  void clear();

  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  bool is_subset_of(const BitVector& other) const;

  // this[dst_pos + j] |= src[src_pos + j] for j in [0, len).
  void or_range(const BitVector& src, std::size_t src_pos, std::size_t dst_pos,
                std::size_t len);

  // Up to 64 bits of this vector starting at pos, packed into the low bits.
  Word extract(std::size_t pos, std::size_t len) const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> mutable_words() { return words_; }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void clear_padding();

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace sumsetlab
