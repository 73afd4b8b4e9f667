#pragma once

#include <string>

#include "pythdiam/arith.hpp"
#include "pythdiam/natural.hpp"

namespace pythdiam {

/// Non-negative rational in lowest terms with a positive denominator.
/// The squared diameters this library produces are never negative.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Natural n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Natural n, Natural d) : num_(n), den_(d) {
    if (d.is_zero()) throw error(errc::precondition_violated, "zero denominator");
    const Natural g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  constexpr Natural num() const noexcept { return num_; }
  constexpr Natural den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == Natural(1); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first so intermediates stay as small as the result allows.
    const Natural g1 = gcd(a.num_, b.den_);
    const Natural g2 = gcd(b.num_, a.den_);
    const Natural n1 = g1.is_zero() ? a.num_ : a.num_ / g1;
    const Natural d2 = g1.is_zero() ? b.den_ : b.den_ / g1;
    const Natural n2 = g2.is_zero() ? b.num_ : b.num_ / g2;
    const Natural d1 = g2.is_zero() ? a.den_ : a.den_ / g2;
    return Rational(n1 * n2, d1 * d2);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const {
    return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
  }

 private:
  Natural num_;
  Natural den_ = 1;
};

}  // namespace pythdiam
