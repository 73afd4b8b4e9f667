#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pythdiam/arith.hpp"
#include "pythdiam/diophantine.hpp"
#include "pythdiam/error.hpp"
#include "pythdiam/geometry.hpp"
#include "pythdiam/natural.hpp"
#include "pythdiam/pythagorean.hpp"

namespace pythdiam {

// ---------------------------------------------------------------------------
// Combinations: one square leg paired with one square diameter.

enum class Leg : std::uint8_t { beta, gamma };

constexpr std::string_view to_string(Leg l) noexcept { return l == Leg::beta ? "beta" : "gamma"; }

/// 1..4 pair the even leg beta with d, d_a, d_b, d_g; 5..8 do the same for
/// the odd leg gamma.
enum class Combination : std::uint8_t { c1 = 1, c2, c3, c4, c5, c6, c7, c8 };

inline constexpr std::array<Combination, 8> kCombinations = {
    Combination::c1, Combination::c2, Combination::c3, Combination::c4,
    Combination::c5, Combination::c6, Combination::c7, Combination::c8};

constexpr int id(Combination c) noexcept { return static_cast<int>(c); }

constexpr Combination combination(Leg leg, Circle circle) noexcept {
  return static_cast<Combination>((leg == Leg::beta ? 1 : 5) + static_cast<int>(circle));
}

constexpr Leg leg(Combination c) noexcept { return id(c) <= 4 ? Leg::beta : Leg::gamma; }

constexpr Circle circle(Combination c) noexcept {
  return static_cast<Circle>((id(c) - 1) % 4);
}

// ---------------------------------------------------------------------------
// Square-leg parametrizations.

enum class EvenLegVariant { m_even, n_even };

/// Primitive triple with the even leg a square: m = 2 t1^2, n = t2^2 (m_even)
/// or m = t1^2, n = 2 t2^2 (n_even). beta = (2 t1 t2)^2.
inline PrimitiveTriple prop1_even_leg(Natural t1, Natural t2, EvenLegVariant variant) {
  if (t1.is_zero() || t2.is_zero() || !coprime(t1, t2))
    throw error(errc::bad_params, "t1, t2 must be positive and coprime");
  const Natural a = square(t1);
  const Natural b = square(t2);
  if (variant == EvenLegVariant::m_even) {
    if (t2.is_even() || 2 * a <= b) throw error(errc::bad_params, "need t2 odd and 2 t1^2 > t2^2");
    return make_primitive(2 * a, b);
  }
  if (t1.is_even() || a <= 2 * b) throw error(errc::bad_params, "need t1 odd and t1^2 > 2 t2^2");
  return make_primitive(a, 2 * b);
}

/// Primitive triple with the odd leg a square: m = t1^2 + t2^2, n = 2 t1 t2,
/// gamma = (t1^2 - t2^2)^2. The pair is unordered; it is sorted internally.
inline PrimitiveTriple prop1_odd_leg(Natural t1, Natural t2) {
  if (t1.is_zero() || t2.is_zero() || !coprime(t1, t2) || t1.is_odd() == t2.is_odd())
    throw error(errc::bad_params, "t1, t2 must be coprime, positive and of opposite parity");
  if (t1 < t2) std::swap(t1, t2);
  return make_primitive(square(t1) + square(t2), 2 * t1 * t2);
}

// ---------------------------------------------------------------------------
// Families.

/// F5 coincides with F4 and has no separate identifier.
enum class FamilyId : std::uint8_t { F1, F2, F3, F4, F6 };

inline constexpr std::array<FamilyId, 5> kFamilies = {FamilyId::F1, FamilyId::F2, FamilyId::F3,
                                                      FamilyId::F4, FamilyId::F6};

constexpr std::string_view to_string(FamilyId f) noexcept {
  switch (f) {
    case FamilyId::F1: return "F1";
    case FamilyId::F2: return "F2";
    case FamilyId::F3: return "F3";
    case FamilyId::F4: return "F4";
    case FamilyId::F6: return "F6";
  }
  return "?";
}

/// Accepts F1..F6; F5 maps to F4.
inline std::optional<FamilyId> parse_family(std::string_view s) {
  if (s == "F1") return FamilyId::F1;
  if (s == "F2") return FamilyId::F2;
  if (s == "F3") return FamilyId::F3;
  if (s == "F4" || s == "F5") return FamilyId::F4;
  if (s == "F6") return FamilyId::F6;
  return std::nullopt;
}

inline std::vector<Combination> combinations_of(FamilyId f) {
  switch (f) {
    case FamilyId::F1: return {Combination::c2};
    case FamilyId::F2: return {Combination::c3};
    case FamilyId::F3: return {Combination::c4};
    case FamilyId::F4: return {Combination::c5, Combination::c7};
    case FamilyId::F6: return {Combination::c1};
  }
  return {};
}

struct Witness {
  std::string quantity;  // "beta", "gamma", "d", "d_a", "d_b" or "d_g"
  Natural value;
  Natural root;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct FamilyMember {
  FamilyId family = FamilyId::F1;
  Natural kappa;
  Natural lam;
  bool sign_variant = false;
  Natural t1;
  Natural t2;
  Natural m;
  Natural n;
  PrimitiveTriple triple;
  std::vector<Witness> square_witnesses;
};

struct TPair {
  Natural t1;
  Natural t2;

  friend bool operator==(const TPair&, const TPair&) = default;
};

/// (t1, t2) from (kappa, lambda) exactly as each family box states them,
/// without validation or canonical ordering.
inline TPair family_t(FamilyId f, Natural kappa, Natural lam, bool sign_variant = false) {
  const Natural k2 = square(kappa);
  const Natural l2 = square(lam);
  const Natural cross = 2 * kappa * lam;
  switch (f) {
    case FamilyId::F1: return {cross, abs_diff(k2, 2 * l2)};
    case FamilyId::F2: return {abs_diff(k2, 2 * l2), cross};
    case FamilyId::F3:
      // |-k^2 + 2kl + l^2|, or the alternative |-k^2 - 2kl + l^2|.
      return {k2 + l2, sign_variant ? abs_diff(l2, k2 + cross) : abs_diff(cross + l2, k2)};
    case FamilyId::F4: return {k2, l2};
    case FamilyId::F6: return {k2 + 2 * l2, cross};
  }
  return {};
}

/// (m, n) from (t1, t2) per family, without validation.
inline PrimParams family_mn(FamilyId f, const TPair& t) {
  switch (f) {
    case FamilyId::F1:
    case FamilyId::F3: return {2 * square(t.t1), square(t.t2)};
    case FamilyId::F2:
    case FamilyId::F6: return {square(t.t1), 2 * square(t.t2)};
    case FamilyId::F4: return {square(t.t1) + square(t.t2), 2 * t.t1 * t.t2};
  }
  return {};
}

namespace detail {

inline Natural triple_part(const PrimitiveTriple& t, Leg l) { return l == Leg::beta ? t.beta : t.gamma; }

// Quantities a member of f must have as perfect squares.
inline std::vector<std::pair<Leg, std::vector<Circle>>> family_squares(FamilyId f) {
  switch (f) {
    case FamilyId::F1: return {{Leg::beta, {Circle::ex_a}}};
    case FamilyId::F2: return {{Leg::beta, {Circle::ex_b}}};
    case FamilyId::F3: return {{Leg::beta, {Circle::ex_c}}};
    case FamilyId::F4: return {{Leg::gamma, {Circle::incircle, Circle::ex_b}}};
    case FamilyId::F6: return {{Leg::beta, {Circle::incircle}}};
  }
  return {};
}

// Non-throwing core shared by gen_family and enumerate_family.
inline std::optional<FamilyMember> try_gen_family(FamilyId f, Natural kappa, Natural lam,
                                                  bool sign_variant, errc* why = nullptr) {
  auto fail = [&](errc e) -> std::optional<FamilyMember> {
    if (why) *why = e;
    return std::nullopt;
  };
  if (kappa.is_zero() || lam.is_zero() || !coprime(kappa, lam)) return fail(errc::bad_params);
  if (sign_variant && f != FamilyId::F3) return fail(errc::bad_params);
  switch (f) {
    case FamilyId::F1:
    case FamilyId::F2:
    case FamilyId::F6:
      if (kappa.is_even()) return fail(errc::bad_params);
      break;
    case FamilyId::F3:
    case FamilyId::F4:
      if (kappa.is_odd() == lam.is_odd()) return fail(errc::bad_params);
      break;
  }
  if (f == FamilyId::F4 && kappa < lam) std::swap(kappa, lam);

  FamilyMember out;
  out.family = f;
  out.kappa = kappa;
  out.lam = lam;
  out.sign_variant = sign_variant;
  const TPair t = family_t(f, kappa, lam, sign_variant);
  out.t1 = t.t1;
  out.t2 = t.t2;
  const PrimParams p = family_mn(f, t);
  out.m = p.m;
  out.n = p.n;
  // 2 t1^2 > t2^2 (F1, F3) and t1^2 > 2 t2^2 (F2, F6) are exactly m > n.
  if (p.m <= p.n) return fail(errc::constraint_violated);
  if (!p.is_valid()) return fail(errc::constraint_violated);
  out.triple = detail::triple_from(p.m, p.n);
  const PythDiameters d = pyth_diameters(p);
  for (const auto& [l, circles] : family_squares(f)) {
    const Natural side = triple_part(out.triple, l);
    const auto r = isqrt(side);
    if (!r.exact) return fail(errc::constraint_violated);
    out.square_witnesses.push_back({std::string(to_string(l)), side, r.root});
    for (Circle c : circles) {
      const auto rd = isqrt(d[c]);
      if (!rd.exact) return fail(errc::constraint_violated);
      out.square_witnesses.push_back({circle_name(c), d[c], rd.root});
    }
  }
  return out;
}

// Monotone lower bound on alpha over (kappa, lambda), used to stop scans.
inline Natural alpha_lower_bound(FamilyId f, Natural kappa, Natural lam) {
  const Natural k2 = square(kappa);
  const Natural l2 = square(lam);
  Natural grows;
  switch (f) {
    case FamilyId::F1:                              // m = 2 t1^2 = 8 k^2 l^2
    case FamilyId::F2: grows = 8 * k2 * l2; break;  // n = 2 t2^2
    case FamilyId::F3: grows = 2 * square(k2 + l2); break;
    case FamilyId::F4: grows = square(k2) + square(l2); break;
    case FamilyId::F6: grows = square(k2 + 2 * l2); break;
  }
  return square(grows);
}

}  // namespace detail

/// Builds and checks one family member. Throws bad_params for parity or
/// coprimality violations and constraint_violated when the size condition
/// (m > n) fails.
inline FamilyMember gen_family(FamilyId f, Natural kappa, Natural lam, bool sign_variant = false) {
  errc why = errc::bad_params;
  auto m = detail::try_gen_family(f, kappa, lam, sign_variant, &why);
  if (!m)
    throw error(why, std::string(to_string(f)) + " at (kappa, lambda) = (" + kappa.to_string() +
                         ", " + lam.to_string() + ")");
  return *std::move(m);
}

/// All members with alpha <= alpha_max, one per triple, ordered by alpha.
inline std::vector<FamilyMember> enumerate_family(FamilyId f, Natural alpha_max) {
  std::vector<FamilyMember> out;
  for (Natural kappa = 1; detail::alpha_lower_bound(f, kappa, 1) <= alpha_max; kappa += 1) {
    for (Natural lam = 1; detail::alpha_lower_bound(f, kappa, lam) <= alpha_max; lam += 1) {
      if (f == FamilyId::F4 && kappa < lam) continue;
      for (bool variant : {false, true}) {
        if (variant && f != FamilyId::F3) break;
        auto m = detail::try_gen_family(f, kappa, lam, variant);
        if (m && m->triple.alpha <= alpha_max) out.push_back(*std::move(m));
      }
    }
  }
  // Stable sort keeps the first (kappa, lambda, variant) generating each triple.
  std::stable_sort(out.begin(), out.end(), [](const FamilyMember& a, const FamilyMember& b) {
    return a.triple.alpha < b.triple.alpha;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FamilyMember& a, const FamilyMember& b) {
                          return a.triple.params == b.triple.params;
                        }),
            out.end());
  return out;
}

/// Every combination (square leg, square diameter) the triple realizes,
/// in increasing id order.
inline std::vector<Combination> classify_combinations(const PrimitiveTriple& t) {
  std::vector<Combination> out;
  const bool beta_sq = is_square(t.beta);
  const bool gamma_sq = is_square(t.gamma);
  if (!beta_sq && !gamma_sq) return out;
  const PythDiameters d = pyth_diameters(t.params);
  for (Leg l : {Leg::beta, Leg::gamma}) {
    if (!(l == Leg::beta ? beta_sq : gamma_sq)) continue;
    for (Circle c : kCircles)
      if (is_square(d[c])) out.push_back(combination(l, c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive checks.

struct Theorem1Report {
  Natural alpha_max;
  std::uint64_t triples_scanned = 0;
  std::uint64_t gamma_square_triples = 0;
  std::uint64_t beta_square_triples = 0;
  /// census[id - 1] counts triples realizing combination id.
  std::array<std::uint64_t, 8> census{};
  /// Triples realizing combination 6 or 8.
  std::vector<PrimitiveTriple> counterexamples;
  /// Gamma-square triples where 2m(m+n) or 2m(m-n) is not 2 mod 4.
  std::vector<PrimitiveTriple> obstruction_failures;
  /// Triples with both legs square.
  std::vector<PrimitiveTriple> both_legs_square;

  bool ok() const noexcept {
    return counterexamples.empty() && obstruction_failures.empty() && both_legs_square.empty();
  }

  /// Associative merge for reports over disjoint m-ranges.
  void merge(const Theorem1Report& o) {
    triples_scanned += o.triples_scanned;
    gamma_square_triples += o.gamma_square_triples;
    beta_square_triples += o.beta_square_triples;
    for (std::size_t i = 0; i < census.size(); ++i) census[i] += o.census[i];
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(),
                           o.counterexamples.end());
    obstruction_failures.insert(obstruction_failures.end(), o.obstruction_failures.begin(),
                                o.obstruction_failures.end());
    both_legs_square.insert(both_legs_square.end(), o.both_legs_square.begin(),
                            o.both_legs_square.end());
  }
};

/// Scans primitive triples with alpha <= alpha_max and m in [m_lo, m_hi).
/// Counterexamples are collected in the report rather than thrown.
inline Theorem1Report theorem1_search(Natural alpha_max, Natural m_lo = 2,
                                      Natural m_hi = Natural::max()) {
  Theorem1Report rep;
  rep.alpha_max = alpha_max;
  for_each_primitive(
      alpha_max,
      [&](const PrimitiveTriple& t) {
        ++rep.triples_scanned;
        const bool beta_sq = is_square(t.beta);
        const bool gamma_sq = is_square(t.gamma);
        if (!beta_sq && !gamma_sq) return;
        if (beta_sq) ++rep.beta_square_triples;
        if (gamma_sq) {
          ++rep.gamma_square_triples;
          const Natural m = t.params.m;
          const Natural n = t.params.n;
          if ((2 * m * (m + n)) % 4 != Natural(2) || (2 * m * (m - n)) % 4 != Natural(2))
            rep.obstruction_failures.push_back(t);
        }
        if (beta_sq && gamma_sq) rep.both_legs_square.push_back(t);
        bool counter = false;
        for (Combination c : classify_combinations(t)) {
          ++rep.census[id(c) - 1];
          if (c == Combination::c6 || c == Combination::c8) counter = true;
        }
        if (counter) rep.counterexamples.push_back(t);
      },
      m_lo, m_hi);
  return rep;
}

/// Primitive triples keyed by (m, n).
using TripleSet = std::set<PrimParams>;

struct CombinationCensus {
  Combination combination = Combination::c1;
  TripleSet classified;  // triples realizing the combination
  TripleSet enumerated;  // members of the matching family
  TripleSet exceptional;  // classified minus enumerated
  TripleSet unsound;      // enumerated minus classified
  TripleSet predicted;    // exceptions derived from non-parametric diophantine solutions
};

/// Triples that a family's diophantine derivation would produce from the
/// solutions its parametrization misses, with alpha <= alpha_max. Each
/// combination keys a list of (m, n).
inline std::map<Combination, TripleSet> predicted_exceptions(Natural alpha_max) {
  std::map<Combination, TripleSet> out;
  // Every t in a family satisfies t^4 <= alpha, so the coordinates are bounded
  // by the fourth root (with slack for z in terms of x, y).
  const Natural z_max = 2 * (iroot(alpha_max, 4).root + 1);
  auto consider = [&](Combination c, const PrimParams& p) {
    if (!p.is_valid()) return;
    const auto t = detail::triple_from(p.m, p.n);
    if (t.alpha > alpha_max) return;
    const auto combos = classify_combinations(t);
    if (std::find(combos.begin(), combos.end(), c) != combos.end()) out[c].insert(p);
  };
  auto gap = [&](Equation eq) {
    const auto brute = brute_solutions(eq, z_max);
    const auto param = enumerate_solutions(eq, z_max);
    std::set<Point3> have;
    for (const auto& s : param) have.insert(s.point());
    std::vector<Point3> missing;
    for (const auto& s : brute)
      if (!have.contains(s)) missing.push_back(s);
    return missing;
  };
  // x^2 + 2y^2 = z^2: F1 uses {t2, t1, L1}, F2 uses {t1, t2, L1}, F6 {L1, t2, t1}.
  for (const Point3& s : gap(Equation::A)) {
    consider(Combination::c2, family_mn(FamilyId::F1, {s.y, s.x}));
    consider(Combination::c3, family_mn(FamilyId::F2, {s.x, s.y}));
    consider(Combination::c1, family_mn(FamilyId::F6, {s.z, s.y}));
  }
  // x^2 + y^2 = 2z^2: F3 uses {t2, L1, t1}; t2 is either coordinate.
  for (const Point3& s : gap(Equation::B)) {
    consider(Combination::c4, family_mn(FamilyId::F3, {s.z, s.x}));
    consider(Combination::c4, family_mn(FamilyId::F3, {s.z, s.y}));
  }
  return out;
}

/// Two-sided comparison of classified triples against family enumerations
/// for every combination with alpha <= alpha_max.
inline std::vector<CombinationCensus> completeness_census(Natural alpha_max) {
  std::vector<CombinationCensus> out;
  for (Combination c : kCombinations) out.push_back({c, {}, {}, {}, {}, {}});
  for_each_primitive(alpha_max, [&](const PrimitiveTriple& t) {
    for (Combination c : classify_combinations(t)) out[id(c) - 1].classified.insert(t.params);
  });
  for (FamilyId f : kFamilies) {
    const auto members = enumerate_family(f, alpha_max);
    for (Combination c : combinations_of(f))
      for (const auto& mem : members) out[id(c) - 1].enumerated.insert(mem.triple.params);
  }
  const auto predicted = predicted_exceptions(alpha_max);
  for (auto& row : out) {
    std::set_difference(row.classified.begin(), row.classified.end(), row.enumerated.begin(),
                        row.enumerated.end(), std::inserter(row.exceptional, row.exceptional.end()));
    std::set_difference(row.enumerated.begin(), row.enumerated.end(), row.classified.begin(),
                        row.classified.end(), std::inserter(row.unsound, row.unsound.end()));
    if (auto it = predicted.find(row.combination); it != predicted.end()) row.predicted = it->second;
  }
  return out;
}

}  // namespace pythdiam
