#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sumsetlab/group_set.hpp"
#include "sumsetlab/sl2.hpp"

namespace sumsetlab {

// JSON set encodings. Two forms are accepted on input:
//   {"elements": [[c1, ..., cr], ...]}   coordinate tuples
//   {"bitmask_hex": "..."}               bit i = element index i
// The hex string lists bytes in increasing order (byte j holds elements
// 8j .. 8j+7, least significant bit first), two hex digits per byte, high
// nibble first. It has exactly 2 * ceil(N / 8) digits and zero padding.
// For SL_2 sets, a coordinate tuple is the matrix [a, b, c, d].

std::string to_bitmask_hex(const BitVector& bits);
BitVector from_bitmask_hex(std::string_view hex, std::size_t size);

GroupSet parse_group_set(const nlohmann::json& doc, const GroupSpec& spec);
SL2Set parse_sl2_set(const nlohmann::json& doc, const SL2Ptr& group);

GroupSet load_group_set(const std::filesystem::path& path, const GroupSpec& spec);
SL2Set load_sl2_set(const std::filesystem::path& path, const SL2Ptr& group);

// Elements form, members in increasing index order.
nlohmann::ordered_json group_set_to_json(const GroupSet& set);
nlohmann::ordered_json sl2_set_to_json(const SL2Set& set);
nlohmann::ordered_json bitmask_json(const BitVector& bits);

// Canonical serialization: elements form, compact, trailing newline.
std::string dump_group_set(const GroupSet& set);
void save_group_set(const std::filesystem::path& path, const GroupSet& set);

}  // namespace sumsetlab
