#pragma once

#include <algorithm>
#include <string_view>
#include <tuple>
#include <vector>

#include "pythdiam/arith.hpp"
#include "pythdiam/error.hpp"
#include "pythdiam/natural.hpp"

namespace pythdiam {

/// A: x^2 + 2y^2 = z^2.  B: x^2 + y^2 = 2z^2.  Both with gcd(x, y) = 1.
enum class Equation { A, B };

constexpr std::string_view to_string(Equation eq) noexcept { return eq == Equation::A ? "A" : "B"; }

/// A positive solution (x, y, z) without generating parameters.
struct Point3 {
  Natural x;
  Natural y;
  Natural z;

  friend bool operator==(const Point3&, const Point3&) = default;
  /// Ordered by (z, x, y).
  friend bool operator<(const Point3& l, const Point3& r) {
    return std::tie(l.z, l.x, l.y) < std::tie(r.z, r.x, r.y);
  }
};

/// A parametric solution together with the (k, lambda) that generate it.
struct DiophSolution {
  Equation eq = Equation::A;
  Natural x;
  Natural y;
  Natural z;
  Natural k;
  Natural lam;

  Point3 point() const noexcept { return {x, y, z}; }

  friend bool operator==(const DiophSolution&, const DiophSolution&) = default;
};

/// x = |k^2 - 2 lam^2|, y = 2 k lam, z = k^2 + 2 lam^2 for odd k, gcd(k, lam) = 1.
inline DiophSolution gen_A(Natural k, Natural lam) {
  if (k.is_zero() || lam.is_zero() || k.is_even() || !coprime(k, lam))
    throw error(errc::bad_params, "gen_A needs k odd, lam >= 1, gcd(k, lam) = 1");
  const Natural k2 = square(k);
  const Natural l2 = 2 * square(lam);
  DiophSolution s{Equation::A, abs_diff(k2, l2), 2 * k * lam, k2 + l2, k, lam};
  // k odd makes k^2 odd, so k^2 != 2 lam^2.
  if (s.x.is_zero()) throw error(errc::degenerate_solution, "x = 0");
  if (square(s.x) + 2 * square(s.y) != square(s.z))
    throw error(errc::constraint_violated, "x^2 + 2y^2 != z^2");
  return s;
}

/// x = |k^2 + 2k lam - lam^2|, y = |-k^2 + 2k lam + lam^2|, z = k^2 + lam^2
/// for coprime k, lam of opposite parity.
inline DiophSolution gen_B(Natural k, Natural lam) {
  if (k.is_zero() || lam.is_zero() || k.is_odd() == lam.is_odd() || !coprime(k, lam))
    throw error(errc::bad_params, "gen_B needs k, lam >= 1 coprime with k + lam odd");
  const Natural k2 = square(k);
  const Natural l2 = square(lam);
  const Natural cross = 2 * k * lam;
  DiophSolution s{Equation::B, abs_diff(k2 + cross, l2), abs_diff(l2 + cross, k2), k2 + l2, k, lam};
  if (s.x.is_zero() || s.y.is_zero()) throw error(errc::degenerate_solution, "zero coordinate");
  if (square(s.x) + square(s.y) != 2 * square(s.z))
    throw error(errc::constraint_violated, "x^2 + y^2 != 2 z^2");
  return s;
}

namespace detail {

// Equation B representative: x < y. Swapping (k, lam) swaps x and y, so the
// parameters follow the swap and gen_B(k, lam) still reproduces the record.
inline DiophSolution canonical_B(DiophSolution s) {
  if (s.x > s.y) {
    std::swap(s.x, s.y);
    std::swap(s.k, s.lam);
  }
  return s;
}

inline bool solution_less(const DiophSolution& l, const DiophSolution& r) {
  return std::tie(l.z, l.x, l.y) < std::tie(r.z, r.x, r.y);
}

}  // namespace detail

/// Every parametric solution with z <= z_max, deduplicated by value and
/// ordered by (z, x). Equation B solutions are reported with x < y.
inline std::vector<DiophSolution> enumerate_solutions(Equation eq, Natural z_max) {
  std::vector<DiophSolution> out;
  if (eq == Equation::A) {
    for (Natural k = 1; square(k) + 2 <= z_max; k += 2) {
      for (Natural lam = 1; square(k) + 2 * square(lam) <= z_max; lam += 1) {
        if (coprime(k, lam)) out.push_back(gen_A(k, lam));
      }
    }
  } else {
    for (Natural k = 1; square(k) + 1 <= z_max; k += 1) {
      for (Natural lam = k.is_odd() ? Natural(2) : Natural(1); square(k) + square(lam) <= z_max;
           lam += 2) {
        if (coprime(k, lam)) out.push_back(detail::canonical_B(gen_B(k, lam)));
      }
    }
  }
  std::sort(out.begin(), out.end(), detail::solution_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const DiophSolution& l, const DiophSolution& r) {
                          return l.point() == r.point();
                        }),
            out.end());
  return out;
}

/// Independent exhaustive scan: every positive (x, y, z) with z <= z_max and
/// gcd(x, y) = 1. For B only x <= y is kept, so {1, 1, 1} is included.
/// Ordered by (z, x).
inline std::vector<Point3> brute_solutions(Equation eq, Natural z_max) {
  std::vector<Point3> out;
  for (Natural z = 1; z <= z_max; z += 1) {
    const Natural z2 = square(z);
    if (eq == Equation::A) {
      // 2y^2 = z^2 - x^2 needs x and z of equal parity.
      for (Natural x = z.is_odd() ? Natural(1) : Natural(2); x < z; x += 2) {
        const Natural rest = z2 - square(x);
        const auto y = isqrt(rest / 2);
        if (y.exact && !y.root.is_zero() && 2 * square(y.root) == rest && coprime(x, y.root))
          out.push_back({x, y.root, z});
      }
    } else {
      // x <= y forces x <= z; y^2 = 2z^2 - x^2 has the parity of x.
      const Natural two_z2 = 2 * z2;
      for (Natural x = 1; x <= z; x += 1) {
        const auto y = isqrt(two_z2 - square(x));
        if (y.exact && x <= y.root && coprime(x, y.root)) out.push_back({x, y.root, z});
      }
    }
  }
  return out;
}

/// Recovers chord parameters (K, lam) with gen_B(K, lam) == (x, y, z) from the
/// slope -K/lam of the line through (1, 1) and (x/z, y/z).
inline std::pair<Natural, Natural> recover_chord_params(const Point3& s) {
  if (s.x == Natural(1) && s.y == Natural(1) && s.z == Natural(1))
    throw error(errc::exceptional_solution, "{1, 1, 1} is the base point of the chord");
  if (s.x.is_zero() || s.y.is_zero() || s.z.is_zero() || !coprime(s.x, s.y) ||
      square(s.x) + square(s.y) != 2 * square(s.z))
    throw error(errc::precondition_violated, "not a positive primitive solution of x^2+y^2=2z^2");
  // x < z < y or y < z < x: the slope (y - z)/(x - z) is negative.
  const Natural rise = abs_diff(s.y, s.z);
  const Natural run = abs_diff(s.x, s.z);
  const Natural g = gcd(rise, run);
  Natural k = rise / g;
  Natural lam = run / g;
  if (k.is_odd() && lam.is_odd()) {
    // Both odd: the formulas at (K, lam) give twice the solution, and the
    // primitive one sits at the half-sum/half-difference pair. If K > lam the
    // halved pair lands on the mirror image, so the order flips.
    const Natural half_sum = (k + lam) / 2;
    const Natural half_diff = abs_diff(k, lam) / 2;
    if (k < lam) {
      k = half_diff;
      lam = half_sum;
    } else {
      k = half_sum;
      lam = half_diff;
    }
  }
  return {k, lam};
}

}  // namespace pythdiam
