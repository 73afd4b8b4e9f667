#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "pythdiam/arith.hpp"
#include "pythdiam/error.hpp"
#include "pythdiam/natural.hpp"
#include "pythdiam/rational.hpp"

namespace pythdiam {

/// Side lengths of an integer triangle. `a` is the side opposite vertex A,
/// which is the hypotenuse when the triangle is right-angled.
struct TriangleSides {
  Natural a;
  Natural b;
  Natural c;

  bool is_valid() const noexcept {
    if (a.is_zero() || b.is_zero() || c.is_zero()) return false;
    // a + b > c etc., without risking overflow on huge sides.
    return a > abs_diff(b, c) && b > abs_diff(a, c) && c > abs_diff(a, b);
  }

  Natural perimeter() const { return a + b + c; }

  friend bool operator==(const TriangleSides&, const TriangleSides&) = default;
  friend auto operator<=>(const TriangleSides&, const TriangleSides&) = default;
};

inline void require_valid(const TriangleSides& s) {
  if (!s.is_valid())
    throw error(errc::invalid_triangle, "sides " + s.a.to_string() + "," + s.b.to_string() + "," +
                                            s.c.to_string() + " violate the triangle inequality");
}

/// The four Heron factors: perimeter, then the three "one side negated" sums
/// (-a+b+c), (a-b+c), (a+b-c). These are the denominators of the incircle
/// and the a-, b-, c-excircle diameters respectively.
inline std::array<Natural, 4> heron_factors(const TriangleSides& s) {
  require_valid(s);
  return {s.a + s.b + s.c, (s.b + s.c) - s.a, (s.a + s.c) - s.b, (s.a + s.b) - s.c};
}

/// 16 * AREA^2.
inline Natural heron16(const TriangleSides& s) {
  const auto f = heron_factors(s);
  return f[0] * f[1] * f[2] * f[3];
}

/// Index into DiameterSquares::squares: incircle, then the excircles
/// opposite a, b and c.
enum class Circle : std::uint8_t { incircle = 0, ex_a = 1, ex_b = 2, ex_c = 3 };

inline constexpr std::array<Circle, 4> kCircles = {Circle::incircle, Circle::ex_a, Circle::ex_b,
                                                   Circle::ex_c};

constexpr const char* circle_name(Circle c) noexcept {
  switch (c) {
    case Circle::incircle: return "d";
    case Circle::ex_a: return "d_a";
    case Circle::ex_b: return "d_b";
    case Circle::ex_c: return "d_g";
  }
  return "?";
}

/// Exact squared diameters (2 rho)^2 = heron16 / (perimeter)^2 and
/// (2 rho_x)^2 = heron16 / (matching Heron factor)^2.
struct DiameterSquares {
  std::array<Rational, 4> squares;
  /// Set when the corresponding squared diameter is the square of an integer.
  std::array<std::optional<Natural>, 4> diameters;
  Natural heron16;

  const Rational& operator[](Circle c) const noexcept {
    return squares[static_cast<std::size_t>(c)];
  }
  const std::optional<Natural>& diameter(Circle c) const noexcept {
    return diameters[static_cast<std::size_t>(c)];
  }
};

inline DiameterSquares diameter_squares(const TriangleSides& s) {
  const auto f = heron_factors(s);
  DiameterSquares out;
  out.heron16 = f[0] * f[1] * f[2] * f[3];
  for (std::size_t i = 0; i < 4; ++i) {
    out.squares[i] = Rational(out.heron16, square(f[i]));
    if (out.squares[i].is_integer()) {
      const auto r = isqrt(out.squares[i].num());
      if (r.exact) out.diameters[i] = r.root;
    }
  }
  return out;
}

struct RightDiameters {
  Natural d;
  Natural d_a;
  Natural d_b;
  Natural d_g;

  friend bool operator==(const RightDiameters&, const RightDiameters&) = default;
};

/// Integer diameters of a right triangle with hypotenuse `a`.
inline RightDiameters right_diameters(const TriangleSides& s) {
  if (s.a.is_zero() || s.b.is_zero() || s.c.is_zero() || square(s.a) != square(s.b) + square(s.c))
    throw error(errc::not_right_triangle, "a^2 != b^2 + c^2");
  return {(s.b + s.c) - s.a, s.a + s.b + s.c, (s.a + s.b) - s.c, (s.a + s.c) - s.b};
}

/// Triangle with sides (k^2, (l^2 - k^2 + t)/2, (l^2 - k^2 - t)/2): one side is
/// a square and the perimeter is l^2.
inline TriangleSides square_side_perimeter_triangle(Natural k, Natural l, std::int64_t t) {
  if (k.is_zero() || l.is_zero()) throw error(errc::range_violation, "k and l must be positive");
  const Natural k2 = square(k);
  const Natural l2 = square(l);
  const Natural abs_t = t < 0 ? Natural(-(t + 1)) + Natural(1) : Natural(t);
  if (l2 <= k2 * 2) throw error(errc::range_violation, "need l^2 > 2 k^2");
  if (abs_t >= k2) throw error(errc::range_violation, "need |t| < k^2");
  const Natural rest = l2 - k2;
  if (rest.is_odd() != abs_t.is_odd())
    throw error(errc::parity_violation, "l^2 - k^2 + t must be even");
  const Natural b = t >= 0 ? (rest + abs_t) / 2 : (rest - abs_t) / 2;
  const Natural c = rest - b;
  return {k2, b, c};
}

}  // namespace pythdiam
