#include "sumsetlab/set_io.hpp"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "sumsetlab/error.hpp"
#include "sumsetlab/rng.hpp"

namespace sumsetlab {
namespace {

using nlohmann::json;

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("sumsetlab_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path file(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string expect_parse_error(const json& doc, const GroupSpec& spec) {
  try {
    parse_group_set(doc, spec);
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "no ParseError for " << doc.dump();
  return {};
}

TEST(Bitmask, Layout) {
  BitVector bits(12);
  bits.set(0);
  bits.set(9);
  bits.set(11);
  EXPECT_EQ(to_bitmask_hex(bits), "010a");
  EXPECT_EQ(from_bitmask_hex("010a", 12), bits);
  EXPECT_EQ(from_bitmask_hex("010A", 12), bits);
  BitVector high(8);
  high.set(7);
  EXPECT_EQ(to_bitmask_hex(high), "80");
}

TEST(Bitmask, RoundTripRandom) {
  Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.between(1, 700);
    BitVector bits(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.below(3) == 0) bits.set(i);
    }
    const std::string hex = to_bitmask_hex(bits);
    ASSERT_EQ(hex.size(), 2 * ((n + 7) / 8));
    ASSERT_EQ(from_bitmask_hex(hex, n), bits);
  }
}

TEST(Bitmask, Errors) {
  EXPECT_THROW(from_bitmask_hex("01", 12), ParseError);
  EXPECT_THROW(from_bitmask_hex("01000", 12), ParseError);
  EXPECT_THROW(from_bitmask_hex("0g00", 12), ParseError);
  // Bit 12 lies in the padding of a 12-element mask.
  EXPECT_THROW(from_bitmask_hex("0010", 12), ParseError);
}

TEST(ParseGroupSet, ElementsForm) {
  const GroupSpec g = parse_group_spec("Z3xZ4");
  const GroupSet s = parse_group_set(json::parse(R"({"elements": [[1, 0], [2, 3], [1, 0]]})"), g);
  EXPECT_EQ(s.size(), 2U);
  EXPECT_TRUE(s.contains(g.encode(std::vector<std::uint64_t>{2, 3})));
  EXPECT_TRUE(parse_group_set(json::parse(R"({"elements": []})"), g).is_empty());
}

TEST(ParseGroupSet, FormsAgree) {
  const GroupSpec g = parse_group_spec("Z5^2xZ2");
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const GroupSet s = GroupSet::from_elements(g, rng.sample_subset(g.order(), rng.below(g.order() + 1)));
    const GroupSet via_elements = parse_group_set(json::parse(group_set_to_json(s).dump()), g);
    const GroupSet via_mask = parse_group_set(json::parse(bitmask_json(s.bits()).dump()), g);
    ASSERT_EQ(via_elements, s);
    ASSERT_EQ(via_mask, s);
  }
}

TEST(ParseGroupSet, OutOfRangeTupleIsNamed) {
  const GroupSpec g = parse_group_spec("Z3xZ4");
  const std::string msg = expect_parse_error(json::parse(R"({"elements": [[0, 1], [3, 1]]})"), g);
  EXPECT_NE(msg.find("[3,1]"), std::string::npos) << msg;
  const std::string arity = expect_parse_error(json::parse(R"({"elements": [[0, 1, 2]]})"), g);
  EXPECT_NE(arity.find("[0,1,2]"), std::string::npos) << arity;
  const std::string neg = expect_parse_error(json::parse(R"({"elements": [[0, -1]]})"), g);
  EXPECT_NE(neg.find("[0,-1]"), std::string::npos) << neg;
}

TEST(ParseGroupSet, ShapeErrors) {
  const GroupSpec g = parse_group_spec("Z8");
  expect_parse_error(json::parse(R"([1, 2])"), g);
  expect_parse_error(json::parse(R"({})"), g);
  expect_parse_error(json::parse(R"({"elements": [[1]], "bitmask_hex": "02"})"), g);
  expect_parse_error(json::parse(R"({"elements": 3})"), g);
  expect_parse_error(json::parse(R"({"elements": [1]})"), g);
  expect_parse_error(json::parse(R"({"elements": [[1.5]]})"), g);
  expect_parse_error(json::parse(R"({"bitmask_hex": 2})"), g);
  const std::string msg = expect_parse_error(json::parse(R"({"bitmask_hex": "0000"})"), g);
  EXPECT_NE(msg.find("length mismatch"), std::string::npos) << msg;
}

TEST(SetFiles, SaveLoadIsByteStable) {
  TempDir dir;
  const GroupSpec g = parse_group_spec("Z3^4");
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const GroupSet s = GroupSet::from_elements(g, rng.sample_subset(g.order(), rng.below(40)));
    const auto first = dir.file("a.json");
    const auto second = dir.file("b.json");
    save_group_set(first, s);
    const GroupSet loaded = load_group_set(first, g);
    ASSERT_EQ(loaded, s);
    save_group_set(second, loaded);
    ASSERT_EQ(read_text(first), read_text(second));
    ASSERT_EQ(read_text(first), dump_group_set(s));
  }
}

TEST(SetFiles, CanonicalText) {
  const GroupSpec g = parse_group_spec("Z2xZ3");
  const GroupSet s = GroupSet::from_elements(g, std::vector<Element>{5, 0});
  EXPECT_EQ(dump_group_set(s), "{\"elements\":[[0,0],[1,2]]}\n");
}

TEST(SetFiles, BitmaskFileLoads) {
  TempDir dir;
  const GroupSpec g = parse_group_spec("Z12");
  write_text(dir.file("m.json"), R"({"bitmask_hex": "010a"})");
  EXPECT_EQ(load_group_set(dir.file("m.json"), g),
            GroupSet::from_elements(g, std::vector<Element>{0, 9, 11}));
}

TEST(SetFiles, Errors) {
  TempDir dir;
  const GroupSpec g = parse_group_spec("Z12");
  EXPECT_THROW(load_group_set(dir.file("missing.json"), g), ParseError);
  write_text(dir.file("bad.json"), "{\"elements\": [[1],");
  EXPECT_THROW(load_group_set(dir.file("bad.json"), g), ParseError);
}

TEST(Sl2Sets, RoundTripAndErrors) {
  const SL2Ptr g = SL2Group::create(3);
  const SL2Set s = SL2Set::from_elements(g, {g->identity(), g->index_of({1, 1, 0, 1})});
  const json doc = json::parse(sl2_set_to_json(s).dump());
  EXPECT_EQ(doc.dump(), R"({"elements":[[1,0,0,1],[1,1,0,1]]})");
  EXPECT_EQ(parse_sl2_set(doc, g), s);
  EXPECT_EQ(parse_sl2_set(json::parse(bitmask_json(s.bits()).dump()), g), s);
  EXPECT_THROW(parse_sl2_set(json::parse(R"({"elements": [[1, 1, 1, 1]]})"), g), ParseError);
  EXPECT_THROW(parse_sl2_set(json::parse(R"({"elements": [[1, 0, 0]]})"), g), ParseError);
  EXPECT_THROW(parse_sl2_set(json::parse(R"({"elements": [[3, 0, 0, 1]]})"), g), ParseError);
  try {
    parse_sl2_set(json::parse(R"({"elements": [[2, 2, 2, 2]]})"), g);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("[2,2,2,2]"), std::string::npos);
  }
}

}  // namespace
}  // namespace sumsetlab
