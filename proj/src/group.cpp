#include "sumsetlab/group.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "sumsetlab/error.hpp"

namespace sumsetlab {

std::uint64_t default_order_cap() {
  const char* env = std::getenv("SUMSETLAB_ORDER_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOrderCap;
  std::string_view text(env);
  std::uint64_t cap = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap < 2) {
    throw DomainError("SUMSETLAB_ORDER_CAP must be an integer >= 2, got '" +
                      std::string(text) + "'");
  }
  return cap;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a != 0 && b > cap / a) {
    throw CapExceededError("group order exceeds the cap of " +
                           std::to_string(cap) + " elements");
  }
  const std::uint64_t product = a * b;
  if (product > cap) {
    throw CapExceededError("group order " + std::to_string(product) +
                           " exceeds the cap of " + std::to_string(cap) +
                           " elements");
  }
  return product;
}

GroupSpec::GroupSpec(std::vector<std::uint64_t> factors, std::uint64_t cap)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("a group needs at least one factor");
  for (std::uint64_t d : factors_) {
    if (d < 2) {
      throw DomainError("cyclic factor must be >= 2, got " + std::to_string(d));
    }
    order_ = checked_mul(order_, d, cap);
  }
}

void GroupSpec::check(Element x) const {
  if (x >= order_) {
    throw DomainError("element index " + std::to_string(x) +
                      " out of range for group of order " +
                      std::to_string(order_));
  }
}

Element GroupSpec::add(Element x, Element y) const {
  check(x);
  check(y);
  Element result = 0;
  std::uint64_t stride = 1;
  for (std::uint64_t d : factors_) {
    const std::uint64_t cx = x % d;
    const std::uint64_t cy = y % d;
    x /= d;
    y /= d;
    std::uint64_t s = cx + cy;
    if (s >= d) s -= d;
    result += s * stride;
    stride *= d;
  }
  return result;
}

Element GroupSpec::neg(Element x) const {
  check(x);
  Element result = 0;
  std::uint64_t stride = 1;
  for (std::uint64_t d : factors_) {
    const std::uint64_t c = x % d;
    x /= d;
    result += (c == 0 ? 0 : d - c) * stride;
    stride *= d;
  }
  return result;
}

Element GroupSpec::encode(std::span<const std::uint64_t> coords) const {
  if (coords.size() != factors_.size()) {
    throw DomainError("expected " + std::to_string(factors_.size()) +
                      " coordinates, got " + std::to_string(coords.size()));
  }
  Element result = 0;
  std::uint64_t stride = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= factors_[i]) {
      throw DomainError("coordinate " + std::to_string(i) + " = " +
                        std::to_string(coords[i]) + " out of range for Z" +
                        std::to_string(factors_[i]));
    }
    result += coords[i] * stride;
    stride *= factors_[i];
  }
  return result;
}

Coords GroupSpec::decode(Element x) const {
  check(x);
  Coords coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    coords[i] = x % factors_[i];
    x /= factors_[i];
  }
  return coords;
}

std::string GroupSpec::to_string() const {
  std::ostringstream out;
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (i > 0) out << 'x';
    out << 'Z' << factors_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  std::uint64_t integer() {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) {
      fail("expected a decimal integer");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  bool accept(char lower) {
    if (pos_ < text_.size() &&
        std::tolower(static_cast<unsigned char>(text_[pos_])) == lower) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char lower) {
    if (!accept(lower)) fail(std::string("expected '") + lower + "'");
  }

  bool done() const { return pos_ == text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("invalid group spec '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text, std::uint64_t cap) {
  SpecParser parser(text);
  std::vector<std::uint64_t> factors;
  std::uint64_t order = 1;
  do {
    parser.expect('z');
    const std::uint64_t d = parser.integer();
    std::uint64_t reps = 1;
    if (parser.accept('^')) {
      reps = parser.integer();
      if (reps == 0) parser.fail("exponent must be >= 1");
    }
    if (d < 2) parser.fail("cyclic factor must be >= 2");
    for (std::uint64_t r = 0; r < reps; ++r) {
      order = checked_mul(order, d, cap);
      factors.push_back(d);
    }
  } while (parser.accept('x'));
  if (!parser.done()) parser.fail("unexpected trailing input");
  return GroupSpec(std::move(factors), cap);
}

GroupSpec power_group(std::uint64_t p, std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw DomainError("dimension must be >= 1");
  if (p < 2) throw DomainError("cyclic factor must be >= 2, got " + std::to_string(p));
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < n; ++i) order = checked_mul(order, p, cap);
  return GroupSpec(std::vector<std::uint64_t>(n, p), cap);
}

}  // namespace sumsetlab
