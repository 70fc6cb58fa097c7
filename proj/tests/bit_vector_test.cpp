#include "sumsetlab/bit_vector.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace sumsetlab {
namespace {

BitVector random_bits(std::size_t n, std::mt19937_64& rng, double density) {
  BitVector v(n);
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) v.set(i);
  }
  return v;
}

TEST(BitVector, FillKeepsPaddingClear) {
  for (std::size_t n : {1U, 63U, 64U, 65U, 130U}) {
    BitVector v(n);
    v.fill();
    EXPECT_EQ(v.count(), n);
    const auto words = v.words();
    if (n % 64 != 0) EXPECT_EQ(words.back() >> (n % 64), 0U);
  }
}

TEST(BitVector, TestAndSetReportsFirstInsertion) {
  BitVector v(10);
  EXPECT_TRUE(v.test_and_set(3));
  EXPECT_FALSE(v.test_and_set(3));
  EXPECT_EQ(v.count(), 1U);
  v.reset(3);
  EXPECT_TRUE(v.none());
}

TEST(BitVector, SubsetAndOr) {
  BitVector a(100), b(100);
  a.set(1);
  a.set(70);
  b.set(70);
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  b |= a;
  EXPECT_EQ(a, b);
}

TEST(BitVector, OrRangeMatchesBitLoop) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + rng() % 300;
    const BitVector src = random_bits(n, rng, 0.5);
    BitVector dst = random_bits(n, rng, 0.2);
    BitVector expected = dst;
    const std::size_t len = rng() % (n + 1);
    const std::size_t from = rng() % (n - len + 1);
    const std::size_t to = rng() % (n - len + 1);
    for (std::size_t j = 0; j < len; ++j) {
      if (src.test(from + j)) expected.set(to + j);
    }
    dst.or_range(src, from, to, len);
    ASSERT_EQ(dst, expected) << "n=" << n << " from=" << from << " to=" << to << " len=" << len;
  }
}

TEST(BitVector, ForEachSetVisitsInOrder) {
  BitVector v(200);
  const std::vector<std::size_t> want = {0, 5, 63, 64, 127, 199};
  for (std::size_t i : want) v.set(i);
  std::vector<std::size_t> got;
  v.for_each_set([&](std::size_t i) { got.push_back(i); });
  EXPECT_EQ(got, want);
}

}  // namespace
}  // namespace sumsetlab
