#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "pythdiam/arith.hpp"
#include "pythdiam/error.hpp"
#include "pythdiam/geometry.hpp"
#include "pythdiam/natural.hpp"

namespace pythdiam {

/// Generator pair of a primitive triple: m > n >= 1, coprime, opposite parity.
struct PrimParams {
  Natural m;
  Natural n;

  bool is_valid() const noexcept {
    return !n.is_zero() && m > n && coprime(m, n) && m.is_odd() != n.is_odd();
  }

  friend bool operator==(const PrimParams&, const PrimParams&) = default;
  friend auto operator<=>(const PrimParams&, const PrimParams&) = default;
};

/// Primitive triple in canonical order (hypotenuse, even leg, odd leg).
struct PrimitiveTriple {
  PrimParams params;
  Natural alpha;
  Natural beta;
  Natural gamma;

  TriangleSides sides() const noexcept { return {alpha, beta, gamma}; }

  friend bool operator==(const PrimitiveTriple&, const PrimitiveTriple&) = default;
};

/// Closed-form diameters in terms of (m, n).
struct PythDiameters {
  Natural d;    // 2 rho = 2n(m - n)
  Natural d_a;  // 2 rho_alpha = 2m(m + n)
  Natural d_b;  // 2 rho_beta = 2n(m + n)
  Natural d_g;  // 2 rho_gamma = 2m(m - n)

  Natural operator[](Circle c) const noexcept {
    switch (c) {
      case Circle::incircle: return d;
      case Circle::ex_a: return d_a;
      case Circle::ex_b: return d_b;
      case Circle::ex_c: return d_g;
    }
    return d;
  }

  friend bool operator==(const PythDiameters&, const PythDiameters&) = default;
};

namespace detail {
// No validation; callers guarantee valid params.
inline PrimitiveTriple triple_from(Natural m, Natural n) {
  const Natural m2 = square(m);
  const Natural n2 = square(n);
  return {{m, n}, m2 + n2, 2 * m * n, m2 - n2};
}
}  // namespace detail

inline PrimitiveTriple make_primitive(Natural m, Natural n) {
  const PrimParams p{m, n};
  if (!p.is_valid())
    throw error(errc::bad_params, "(m, n) = (" + m.to_string() + ", " + n.to_string() +
                                      ") must satisfy m > n >= 1, gcd 1, m + n odd");
  return detail::triple_from(m, n);
}

/// Multiply every side by delta (non-primitive triples are plain sides).
inline TriangleSides scale(const PrimitiveTriple& t, Natural delta) {
  if (delta.is_zero()) throw error(errc::bad_params, "delta must be >= 1");
  return {t.alpha * delta, t.beta * delta, t.gamma * delta};
}

/// Calls fn(triple) for every primitive triple with alpha <= alpha_max and
/// m in [m_lo, m_hi), in lexicographic (m, n) order. Disjoint m-ranges
/// partition the output.
template <typename Fn>
void for_each_primitive(Natural alpha_max, Fn&& fn, Natural m_lo = 2,
                        Natural m_hi = Natural::max()) {
  if (m_lo < Natural(2)) m_lo = 2;
  for (Natural m = m_lo; m < m_hi; m += 1) {
    const Natural m2 = square(m);
    if (m2 + 1 > alpha_max) break;
    // Opposite parity: n starts at 1 for even m and at 2 for odd m.
    for (Natural n = m.is_even() ? Natural(1) : Natural(2); n < m; n += 2) {
      const Natural n2 = square(n);
      if (m2 + n2 > alpha_max) break;
      if (!coprime(m, n)) continue;
      fn(detail::triple_from(m, n));
    }
  }
}

inline std::vector<PrimitiveTriple> enumerate_primitive(Natural alpha_max) {
  std::vector<PrimitiveTriple> out;
  for_each_primitive(alpha_max, [&](const PrimitiveTriple& t) { out.push_back(t); });
  return out;
}

inline PythDiameters pyth_diameters(const PrimParams& p) {
  if (!p.is_valid()) throw error(errc::bad_params, "invalid (m, n)");
  const Natural two_m = 2 * p.m;
  const Natural two_n = 2 * p.n;
  const Natural sum = p.m + p.n;
  const Natural diff = p.m - p.n;
  return {two_n * diff, two_m * sum, two_n * sum, two_m * diff};
}

/// Recovers (m, n) from a primitive triple given in any side order.
inline PrimParams recover_params(const TriangleSides& t) {
  std::array<Natural, 3> s{t.a, t.b, t.c};
  std::sort(s.begin(), s.end());
  const Natural alpha = s[2];
  Natural even = s[0];
  Natural odd = s[1];
  if (even.is_odd()) std::swap(even, odd);
  if (s[0].is_zero() || square(alpha) != square(s[0]) + square(s[1]))
    throw error(errc::not_pythagorean, "alpha^2 != beta^2 + gamma^2");
  if (!coprime(s[0], s[1]) || even.is_odd() || odd.is_even())
    throw error(errc::not_primitive, "legs are not coprime with opposite parity");
  const auto m = isqrt((alpha + odd) / 2);
  const auto n = isqrt((alpha - odd) / 2);
  if (!m.exact || !n.exact) throw error(errc::not_primitive, "no integral (m, n)");
  return {m.root, n.root};
}

}  // namespace pythdiam
