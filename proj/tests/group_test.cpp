#include "sumsetlab/group.hpp"

#include <cstdlib>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sumsetlab/error.hpp"

namespace sumsetlab {
namespace {

TEST(ParseGroupSpec, SingleFactor) {
  const GroupSpec g = parse_group_spec("Z5");
  EXPECT_EQ(g.factors(), (std::vector<std::uint64_t>{5}));
  EXPECT_EQ(g.order(), 5U);
}

TEST(ParseGroupSpec, RepetitionExpands) {
  const GroupSpec g = parse_group_spec("Z3^4");
  EXPECT_EQ(g.factors(), (std::vector<std::uint64_t>{3, 3, 3, 3}));
  EXPECT_EQ(g.order(), 81U);
}

TEST(ParseGroupSpec, ProductKeepsFactorsAsGiven) {
  const GroupSpec g = parse_group_spec("Z6xZ10");
  EXPECT_EQ(g.factors(), (std::vector<std::uint64_t>{6, 10}));
  EXPECT_EQ(g.order(), 60U);
}

TEST(ParseGroupSpec, CaseInsensitiveLetters) {
  EXPECT_EQ(parse_group_spec("z2^3XZ5").factors(), (std::vector<std::uint64_t>{2, 2, 2, 5}));
}

TEST(ParseGroupSpec, RejectsSyntaxErrors) {
  for (const char* bad : {"", "Z", "5", "Z5x", "Z5 xZ3", " Z5", "Z5^", "Z5^0", "Z3*Z3", "Y5",
                          "Z-3", "Z5Z5", "Z5^2^2"}) {
    EXPECT_THROW(parse_group_spec(bad), ParseError) << bad;
  }
}

TEST(ParseGroupSpec, RejectsSmallFactors) {
  EXPECT_THROW(parse_group_spec("Z1"), ParseError);
  EXPECT_THROW(parse_group_spec("Z0xZ3"), ParseError);
}

TEST(ParseGroupSpec, EnforcesOrderCap) {
  EXPECT_THROW(parse_group_spec("Z2^27"), CapExceededError);
  EXPECT_THROW(parse_group_spec("Z10^3", 999), CapExceededError);
  EXPECT_EQ(parse_group_spec("Z10^3", 1000).order(), 1000U);
  // Huge exponents fail fast instead of materializing the factor list.
  EXPECT_THROW(parse_group_spec("Z2^99999999999"), CapExceededError);
}

TEST(ParseGroupSpec, CapFromEnvironment) {
  ::setenv("SUMSETLAB_ORDER_CAP", "100", 1);
  EXPECT_EQ(default_order_cap(), 100U);
  EXPECT_THROW(parse_group_spec("Z3^5"), CapExceededError);
  ::setenv("SUMSETLAB_ORDER_CAP", "junk", 1);
  EXPECT_THROW(default_order_cap(), DomainError);
  ::unsetenv("SUMSETLAB_ORDER_CAP");
  EXPECT_EQ(default_order_cap(), kDefaultOrderCap);
}

TEST(GroupSpec, ToStringRoundTrips) {
  for (const char* text : {"Z5", "Z3^4", "Z6xZ10", "Z2^3xZ5xZ2"}) {
    EXPECT_EQ(parse_group_spec(text).to_string(), text);
  }
}

TEST(GroupSpec, AddInCyclicGroup) {
  const GroupSpec g = parse_group_spec("Z5");
  EXPECT_EQ(g.add(3, 4), 2U);
}

TEST(GroupSpec, AddIsCoordinatewise) {
  const GroupSpec g = parse_group_spec("Z3^2");
  const Coords x = {1, 2};
  const Coords y = {2, 2};
  EXPECT_EQ(g.decode(g.add(g.encode(x), g.encode(y))), (Coords{0, 1}));
}

TEST(GroupSpec, EncodeIsLittleEndian) {
  const GroupSpec g = parse_group_spec("Z3^2");
  const Coords c = {2, 1};
  EXPECT_EQ(g.encode(c), 5U);
  const GroupSpec h = parse_group_spec("Z6xZ10");
  const Coords top = {5, 9};
  EXPECT_EQ(h.encode(top), 59U);
}

TEST(GroupSpec, RangeErrors) {
  const GroupSpec g = parse_group_spec("Z6xZ10");
  EXPECT_THROW(g.add(60, 0), DomainError);
  EXPECT_THROW(g.neg(100), DomainError);
  EXPECT_THROW(g.decode(60), DomainError);
  const Coords bad = {6, 0};
  EXPECT_THROW(g.encode(bad), DomainError);
  const Coords short_coords = {1};
  EXPECT_THROW(g.encode(short_coords), DomainError);
}

// Group laws and the encode/decode bijection, exhaustively on small groups.
class GroupLaws : public ::testing::TestWithParam<const char*> {};

TEST_P(GroupLaws, HoldExhaustively) {
  const GroupSpec g = parse_group_spec(GetParam());
  const Element n = g.order();
  for (Element x = 0; x < n; ++x) {
    EXPECT_EQ(g.encode(g.decode(x)), x);
    EXPECT_EQ(g.add(x, g.neg(x)), GroupSpec::identity());
    EXPECT_EQ(g.add(x, GroupSpec::identity()), x);
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.add(x, y);
      ASSERT_EQ(xy, g.add(y, x));
      ASSERT_EQ(xy, oracle::add(g, x, y));
    }
  }
  // Associativity over all triples would be n^3; sample instead.
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5000; ++t) {
    const Element x = rng() % n, y = rng() % n, z = rng() % n;
    ASSERT_EQ(g.add(g.add(x, y), z), g.add(x, g.add(y, z)));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, GroupLaws,
                         ::testing::Values("Z2", "Z5", "Z3^2", "Z6xZ10", "Z2^3xZ3", "Z4xZ2xZ3"));

TEST(GroupLawsSampled, LargeGroup) {
  const GroupSpec g = parse_group_spec("Z7xZ1000xZ3^5");
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20000; ++t) {
    const Element x = rng() % g.order(), y = rng() % g.order(), z = rng() % g.order();
    ASSERT_EQ(g.encode(g.decode(x)), x);
    ASSERT_EQ(g.add(x, y), g.add(y, x));
    ASSERT_EQ(g.add(g.add(x, y), z), g.add(x, g.add(y, z)));
    ASSERT_EQ(g.add(x, g.neg(x)), 0U);
    ASSERT_EQ(g.add(x, y), oracle::add(g, x, y));
  }
}

}  // namespace
}  // namespace sumsetlab
