#include "pk/half_int.hpp"

#include <charconv>
#include <string>

#include "pk/errors.hpp"

namespace pk {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not a half-integer: \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfInt(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 1) return HalfInt(num);
  if (den != 2) throw ParseError("denominator must be 1 or 2: \"" + std::string(text) + "\"");
  return from_twice(num);
}

std::int64_t HalfInt::to_integer() const {
  if (!is_integer()) throw NonIntegerExponentError(str() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace pk
