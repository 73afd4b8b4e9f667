#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "pythdiam/error.hpp"

namespace pythdiam {

/// Non-negative 128-bit integer with checked arithmetic.
///
/// Every operation either yields the exact result or throws
/// error(errc::overflow_detected); there is no wraparound. Subtraction below
/// zero counts as overflow. Use abs_diff() when the sign is irrelevant.
class Natural {
 public:
  using rep = unsigned __int128;

  constexpr Natural() noexcept = default;

  template <std::integral T>
  constexpr Natural(T v) : value_(0) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw error(errc::overflow_detected, "negative value for Natural");
    }
    value_ = static_cast<rep>(v);
  }

  static constexpr Natural from_rep(rep v) noexcept {
    Natural n;
    n.value_ = v;
    return n;
  }

  static constexpr Natural max() noexcept { return from_rep(~rep{0}); }

  constexpr rep value() const noexcept { return value_; }

  constexpr bool fits_u64() const noexcept {
    return value_ <= std::numeric_limits<std::uint64_t>::max();
  }

  constexpr std::uint64_t to_u64() const {
    if (!fits_u64()) throw error(errc::overflow_detected, "value exceeds 64 bits");
    return static_cast<std::uint64_t>(value_);
  }

  constexpr bool is_zero() const noexcept { return value_ == 0; }
  constexpr bool is_even() const noexcept { return (value_ & 1) == 0; }
  constexpr bool is_odd() const noexcept { return (value_ & 1) == 1; }

  /// Number of significant bits; 0 for zero.
  constexpr int bit_width() const noexcept {
    const auto hi = static_cast<std::uint64_t>(value_ >> 64);
    if (hi != 0) return 128 - __builtin_clzll(hi);
    const auto lo = static_cast<std::uint64_t>(value_);
    return lo == 0 ? 0 : 64 - __builtin_clzll(lo);
  }

  friend constexpr Natural operator+(Natural a, Natural b) {
    rep r;
    if (__builtin_add_overflow(a.value_, b.value_, &r))
      throw error(errc::overflow_detected, "addition overflow");
    return from_rep(r);
  }

  friend constexpr Natural operator-(Natural a, Natural b) {
    if (b.value_ > a.value_) throw error(errc::overflow_detected, "subtraction below zero");
    return from_rep(a.value_ - b.value_);
  }

  friend constexpr Natural operator*(Natural a, Natural b) {
    rep r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r))
      throw error(errc::overflow_detected, "multiplication overflow");
    return from_rep(r);
  }

  friend constexpr Natural operator/(Natural a, Natural b) {
    if (b.value_ == 0) throw error(errc::precondition_violated, "division by zero");
    return from_rep(a.value_ / b.value_);
  }

  friend constexpr Natural operator%(Natural a, Natural b) {
    if (b.value_ == 0) throw error(errc::precondition_violated, "modulo by zero");
    return from_rep(a.value_ % b.value_);
  }

  constexpr Natural& operator+=(Natural o) { return *this = *this + o; }
  constexpr Natural& operator-=(Natural o) { return *this = *this - o; }
  constexpr Natural& operator*=(Natural o) { return *this = *this * o; }
  constexpr Natural& operator/=(Natural o) { return *this = *this / o; }
  constexpr Natural& operator%=(Natural o) { return *this = *this % o; }

  friend constexpr bool operator==(Natural a, Natural b) noexcept { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(Natural a, Natural b) noexcept {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    if (value_ == 0) return "0";
    std::string s;
    rep v = value_;
    while (v != 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return {s.rbegin(), s.rend()};
  }

  /// Parses a decimal string; throws precondition_violated on junk and
  /// overflow_detected when the value does not fit.
  static Natural parse(std::string_view text) {
    if (text.empty()) throw error(errc::precondition_violated, "empty number");
    Natural n;
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw error(errc::precondition_violated, "not a decimal number: " + std::string(text));
      n = n * 10 + Natural(ch - '0');
    }
    return n;
  }

  friend std::ostream& operator<<(std::ostream& os, Natural n) { return os << n.to_string(); }

 private:
  rep value_ = 0;
};

constexpr Natural abs_diff(Natural a, Natural b) noexcept {
  return a >= b ? Natural::from_rep(a.value() - b.value())
                : Natural::from_rep(b.value() - a.value());
}

constexpr Natural square(Natural a) { return a * a; }

}  // namespace pythdiam

template <>
struct std::hash<pythdiam::Natural> {
  std::size_t operator()(pythdiam::Natural n) const noexcept {
    const auto v = n.value();
    const auto lo = static_cast<std::uint64_t>(v);
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};
