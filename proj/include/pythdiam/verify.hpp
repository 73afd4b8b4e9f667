#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "pythdiam/diophantine.hpp"
#include "pythdiam/geometry.hpp"
#include "pythdiam/pythagorean.hpp"

namespace pythdiam {

/// Outcome of comparing the parametric enumeration of an equation with the
/// exhaustive scan. For B the scan's {1, 1, 1} is reported separately.
struct SolutionCompleteness {
  Equation eq = Equation::A;
  Natural z_max;
  std::size_t parametric = 0;
  std::size_t brute = 0;
  std::vector<Point3> only_parametric;
  std::vector<Point3> only_brute;  // excluding {1, 1, 1} for B
  bool saw_exceptional = false;    // {1, 1, 1} found by the scan (B only)

  bool ok() const noexcept { return only_parametric.empty() && only_brute.empty(); }
};

inline SolutionCompleteness check_solution_completeness(Equation eq, Natural z_max) {
  SolutionCompleteness out;
  out.eq = eq;
  out.z_max = z_max;
  std::set<Point3> param;
  for (const auto& s : enumerate_solutions(eq, z_max)) param.insert(s.point());
  std::set<Point3> brute;
  for (const auto& s : brute_solutions(eq, z_max)) brute.insert(s);
  out.parametric = param.size();
  out.brute = brute.size();
  const Point3 one{1, 1, 1};
  if (eq == Equation::B && brute.erase(one) == 1) out.saw_exceptional = true;
  for (const auto& p : param)
    if (!brute.contains(p)) out.only_parametric.push_back(p);
  for (const auto& p : brute)
    if (!param.contains(p)) out.only_brute.push_back(p);
  return out;
}

/// Closed-form (m, n) diameters against the right-triangle formulas and the
/// general squared formulas, for every primitive triple with m <= m_max.
struct DiameterConsistency {
  std::uint64_t checked = 0;
  std::vector<PrimParams> failures;

  bool ok() const noexcept { return failures.empty(); }
};

inline DiameterConsistency check_diameter_consistency(Natural m_max) {
  DiameterConsistency out;
  for (Natural m = 2; m <= m_max; m += 1) {
    for (Natural n = 1; n < m; n += 1) {
      const PrimParams p{m, n};
      if (!p.is_valid()) continue;
      ++out.checked;
      const PrimitiveTriple t = make_primitive(m, n);
      const PythDiameters closed = pyth_diameters(p);
      const RightDiameters right = right_diameters(t.sides());
      const DiameterSquares general = diameter_squares(t.sides());
      bool ok = closed.d == right.d && closed.d_a == right.d_a && closed.d_b == right.d_b &&
                closed.d_g == right.d_g;
      for (Circle c : kCircles)
        ok = ok && general[c] == Rational(square(closed[c])) && general.diameter(c) == closed[c];
      ok = ok && closed.d * closed.d_a * closed.d_b * closed.d_g == general.heron16;
      ok = ok && closed.d_a == t.sides().perimeter();
      if (!ok) out.failures.push_back(p);
    }
  }
  return out;
}

}  // namespace pythdiam
