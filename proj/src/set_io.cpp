#include "sumsetlab/set_io.hpp"

#include <fstream>
#include <sstream>

#include "sumsetlab/error.hpp"

namespace sumsetlab {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

std::string tuple_text(const nlohmann::json& tuple) { return tuple.dump(); }

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

// Either form, with a callback mapping one coordinate tuple to an index.
template <class ToIndex>
BitVector parse_bits(const nlohmann::json& doc, std::size_t size, ToIndex to_index) {
  if (!doc.is_object()) throw ParseError("set document must be a JSON object");
  const bool has_elements = doc.contains("elements");
  const bool has_mask = doc.contains("bitmask_hex");
  if (has_elements == has_mask) {
    throw ParseError("set document needs exactly one of \"elements\" or \"bitmask_hex\"");
  }
  if (has_mask) {
    const auto& mask = doc.at("bitmask_hex");
    if (!mask.is_string()) throw ParseError("\"bitmask_hex\" must be a string");
    return from_bitmask_hex(mask.get<std::string>(), size);
  }
  const auto& elements = doc.at("elements");
  if (!elements.is_array()) throw ParseError("\"elements\" must be an array");
  BitVector bits(size);
  for (const auto& tuple : elements) {
    if (!tuple.is_array()) {
      throw ParseError("element " + tuple_text(tuple) + " is not a coordinate list");
    }
    Coords coords;
    for (const auto& c : tuple) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
        throw ParseError("element " + tuple_text(tuple) +
                         " has a coordinate that is not a nonnegative integer");
      }
      coords.push_back(c.get<std::uint64_t>());
    }
    bits.set(to_index(coords, tuple));
  }
  return bits;
}

}  // namespace

std::string to_bitmask_hex(const BitVector& bits) {
  const std::size_t bytes = (bits.size() + 7) / 8;
  std::string out;
  out.reserve(2 * bytes);
  const auto words = bits.words();
  for (std::size_t j = 0; j < bytes; ++j) {
    const auto byte = static_cast<unsigned>((words[j / 8] >> (8 * (j % 8))) & 0xFFU);
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0xFU]);
  }
  return out;
}

BitVector from_bitmask_hex(std::string_view hex, std::size_t size) {
  const std::size_t bytes = (size + 7) / 8;
  if (hex.size() != 2 * bytes) {
    throw ParseError("bitmask length mismatch: expected " + std::to_string(2 * bytes) +
                     " hex digits for " + std::to_string(size) + " elements, got " +
                     std::to_string(hex.size()));
  }
  BitVector bits(size);
  for (std::size_t j = 0; j < bytes; ++j) {
    const int hi = hex_value(hex[2 * j]);
    const int lo = hex_value(hex[2 * j + 1]);
    if (hi < 0 || lo < 0) throw ParseError("bitmask contains a non-hex character");
    const unsigned byte = static_cast<unsigned>(hi * 16 + lo);
    for (unsigned b = 0; b < 8; ++b) {
      if (!((byte >> b) & 1U)) continue;
      const std::size_t index = 8 * j + b;
      if (index >= size) {
        throw ParseError("bitmask sets bit " + std::to_string(index) +
                         " beyond the group order " + std::to_string(size));
      }
      bits.set(index);
    }
  }
  return bits;
}

GroupSet parse_group_set(const nlohmann::json& doc, const GroupSpec& spec) {
  BitVector bits = parse_bits(doc, spec.order(), [&](const Coords& coords, const nlohmann::json& tuple) {
    try {
      return spec.encode(coords);
    } catch (const DomainError& e) {
      throw ParseError("element " + tuple_text(tuple) + " out of range for " +
                       spec.to_string() + ": " + e.what());
    }
  });
  return GroupSet::from_bits(spec, std::move(bits));
}

SL2Set parse_sl2_set(const nlohmann::json& doc, const SL2Ptr& group) {
  BitVector bits = parse_bits(doc, group->order(), [&](const Coords& coords, const nlohmann::json& tuple) {
    if (coords.size() != 4) {
      throw ParseError("element " + tuple_text(tuple) + " is not a 2x2 matrix [a, b, c, d]");
    }
    Matrix2 m{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (coords[i] >= group->p()) {
        throw ParseError("element " + tuple_text(tuple) + " has an entry out of range for Z_" +
                         std::to_string(group->p()));
      }
      m[i] = static_cast<std::uint32_t>(coords[i]);
    }
    try {
      return group->index_of(m);
    } catch (const DomainError&) {
      throw ParseError("element " + tuple_text(tuple) + " does not have determinant 1");
    }
  });
  return SL2Set::from_bits(group, std::move(bits));
}

GroupSet load_group_set(const std::filesystem::path& path, const GroupSpec& spec) {
  return parse_group_set(read_json_file(path), spec);
}

SL2Set load_sl2_set(const std::filesystem::path& path, const SL2Ptr& group) {
  return parse_sl2_set(read_json_file(path), group);
}

nlohmann::ordered_json group_set_to_json(const GroupSet& set) {
  nlohmann::ordered_json elements = nlohmann::ordered_json::array();
  for (Element x : set.elements()) elements.push_back(set.spec().decode(x));
  nlohmann::ordered_json doc;
  doc["elements"] = std::move(elements);
  return doc;
}

nlohmann::ordered_json sl2_set_to_json(const SL2Set& set) {
  nlohmann::ordered_json elements = nlohmann::ordered_json::array();
  for (Element x : set.elements()) elements.push_back(set.group().matrix(x));
  nlohmann::ordered_json doc;
  doc["elements"] = std::move(elements);
  return doc;
}

nlohmann::ordered_json bitmask_json(const BitVector& bits) {
  nlohmann::ordered_json doc;
  doc["bitmask_hex"] = to_bitmask_hex(bits);
  return doc;
}

std::string dump_group_set(const GroupSet& set) { return group_set_to_json(set).dump() + "\n"; }

void save_group_set(const std::filesystem::path& path, const GroupSet& set) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write set file '" + path.string() + "'");
  out << dump_group_set(set);
}

}  // namespace sumsetlab
