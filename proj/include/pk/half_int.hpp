#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pk {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t integer) : twice_(2 * integer) {}  // NOLINT

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Parses "k", "-k", "k/2" or "-k/2".
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Value as an integer; throws if the value is a proper half-integer.
  std::int64_t to_integer() const;

  /// Largest integer <= value.
  constexpr std::int64_t floor() const {
    return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
  }

  /// "k" for integers, "k/2" otherwise.
  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt x, HalfInt y) { return x += y; }
  friend constexpr HalfInt operator-(HalfInt x, HalfInt y) { return x -= y; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt x) {
    return from_twice(k * x.twice_);
  }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

 private:
  std::int64_t twice_ = 0;
};

/// k/2 as a half-integer.
constexpr HalfInt half_of(std::int64_t k) { return HalfInt::from_twice(k); }

}  // namespace pk
