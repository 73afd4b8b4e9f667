#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pythdiam/families.hpp"
#include "pythdiam/natural.hpp"
#include "pythdiam/pythagorean.hpp"

namespace pythdiam {

/// A printed value, optionally printed as root^2.
struct PrintedValue {
  std::string quantity;  // t1, t2, m, n, alpha, beta, gamma, d, d_a, d_b, d_g
  Natural value;
  std::optional<Natural> root;
};

/// One worked numerical example of a square-leg/square-diameter family, as
/// published (including its misprints).
struct PublishedExample {
  int label = 0;
  FamilyId family = FamilyId::F1;
  Natural kappa;
  Natural lam;
  bool sign_variant = false;
  std::vector<PrintedValue> printed;
};

/// The eleven published examples (numbered 1-7 and 9-12; there is no 8).
inline const std::vector<PublishedExample>& published_examples() {
  using R = std::optional<Natural>;
  static const std::vector<PublishedExample> table = {
      {1, FamilyId::F1, 1, 1, false,
       {{"t2", 1, {}}, {"t1", 2, {}}, {"m", 8, {}}, {"n", 1, {}}, {"alpha", 65, {}},
        {"beta", 16, R(4)}, {"gamma", 63, {}}, {"d_a", 144, R(12)}}},
      {2, FamilyId::F1, 3, 2, false,
       {{"t2", 1, {}}, {"t1", 12, {}}, {"m", 288, {}}, {"n", 1, {}}, {"alpha", 82945, {}},
        {"beta", 576, R(24)}, {"gamma", 82943, {}}, {"d_a", 166464, R(408)}}},
      {3, FamilyId::F2, 1, 2, false,
       {{"t1", 7, {}}, {"t2", 4, {}}, {"m", 49, {}}, {"n", 32, {}}, {"alpha", 3425, {}},
        {"beta", 3364, R(58)}, {"gamma", 1377, {}}, {"d_b", 20736, R(144)}}},
      {4, FamilyId::F2, 5, 1, false,
       {{"t1", 23, {}}, {"t2", 10, {}}, {"m", 529, {}}, {"n", 200, {}}, {"alpha", 319841, {}},
        {"beta", 211600, R(460)}, {"gamma", 239841, {}}, {"d_b", 291600, R(540)}}},
      {5, FamilyId::F3, 1, 2, false,
       {{"t1", 5, {}}, {"t2", 7, {}}, {"m", 50, {}}, {"n", 49, {}}, {"alpha", 4901, {}},
        {"beta", 4900, R(70)}, {"gamma", 99, {}}, {"d_g", 100, R(10)}}},
      {6, FamilyId::F3, 2, 1, false,
       {{"t1", 5, {}}, {"t2", 1, {}}, {"m", 50, {}}, {"n", 1, {}}, {"alpha", 2501, {}},
        {"gamma", 2499, {}}, {"beta", 100, R(10)}, {"d_g", 4900, R(70)}}},
      // Labelled as using the alternative t2 formula, but the printed t2 = 17
      // is what the primary formula gives at (2, 3); the alternative gives 7.
      {7, FamilyId::F3, 2, 3, false,
       {{"t1", 13, {}}, {"t2", 17, {}}, {"m", 338, {}}, {"n", 289, {}}, {"alpha", 197765, {}},
        {"beta", 195364, R(442)}, {"gamma", 30723, {}}, {"d_g", 33124, R(182)}}},
      {9, FamilyId::F4, 1, 2, false,
       {{"t1", 1, {}}, {"t2", 4, {}}, {"m", 17, {}}, {"n", 8, {}}, {"alpha", 353, {}},
        {"beta", 272, {}}, {"gamma", 225, R(15)}, {"d", 144, R(12)}, {"d_b", 400, R(20)}}},
      {10, FamilyId::F4, 2, 3, false,
       {{"t1", 4, {}}, {"t2", 9, {}}, {"m", 97, {}}, {"n", 72, {}}, {"alpha", 14593, {}},
        {"beta", 13968, {}}, {"gamma", 4225, R(65)}, {"d", 3600, R(60)}, {"d_b", 24336, R(156)}}},
      {11, FamilyId::F6, 1, 1, false,
       {{"t1", 3, {}}, {"t2", 2, {}}, {"m", 9, {}}, {"n", 8, {}}, {"alpha", 97, {}},
        {"beta", 144, R(12)}, {"gamma", 17, {}}, {"d", 16, R(4)}}},
      {12, FamilyId::F6, 1, 2, false,
       {{"t1", 9, {}}, {"t2", 4, {}}, {"m", 81, {}}, {"n", 32, {}}, {"alpha", 7585, {}},
        {"beta", 5184, R(72)}, {"gamma", 5537, {}}, {"d", 3136, R(56)}}},
  };
  return table;
}

struct Discrepancy {
  std::string quantity;
  Natural printed_value;
  std::optional<Natural> printed_root;
  Natural computed_value;
  std::optional<Natural> computed_root;
};

struct ExampleCheck {
  int label = 0;
  FamilyId family = FamilyId::F1;
  Natural kappa;
  Natural lam;
  PrimitiveTriple recomputed;
  /// Printed values that disagree with recomputation from (kappa, lambda).
  std::vector<Discrepancy> discrepancies;
  /// The recomputed triple realizes every combination of its family.
  bool oracle_consistent = false;

  bool matches_published() const noexcept { return discrepancies.empty(); }
};

/// Recomputes every printed quantity from the example's (kappa, lambda) using
/// the family formulas as written (no canonical reordering) and compares.
inline ExampleCheck check_example(const PublishedExample& ex) {
  ExampleCheck out;
  out.label = ex.label;
  out.family = ex.family;
  out.kappa = ex.kappa;
  out.lam = ex.lam;
  const TPair t = family_t(ex.family, ex.kappa, ex.lam, ex.sign_variant);
  const PrimParams p = family_mn(ex.family, t);
  const PrimitiveTriple tri = make_primitive(p.m, p.n);
  out.recomputed = tri;
  const PythDiameters d = pyth_diameters(p);

  auto computed = [&](const std::string& q) -> Natural {
    if (q == "t1") return t.t1;
    if (q == "t2") return t.t2;
    if (q == "m") return p.m;
    if (q == "n") return p.n;
    if (q == "alpha") return tri.alpha;
    if (q == "beta") return tri.beta;
    if (q == "gamma") return tri.gamma;
    if (q == "d") return d.d;
    if (q == "d_a") return d.d_a;
    if (q == "d_b") return d.d_b;
    if (q == "d_g") return d.d_g;
    throw error(errc::precondition_violated, "unknown quantity " + q);
  };

  for (const PrintedValue& pv : ex.printed) {
    const Natural value = computed(pv.quantity);
    std::optional<Natural> root;
    if (const auto r = isqrt(value); r.exact) root = r.root;
    const bool value_ok = value == pv.value;
    const bool root_ok = !pv.root || (root && *root == *pv.root);
    if (!value_ok || !root_ok) out.discrepancies.push_back({pv.quantity, pv.value, pv.root, value, root});
  }

  const auto combos = classify_combinations(tri);
  out.oracle_consistent = true;
  for (Combination c : combinations_of(ex.family))
    if (std::find(combos.begin(), combos.end(), c) == combos.end()) out.oracle_consistent = false;
  return out;
}

inline std::vector<ExampleCheck> check_published_examples() {
  std::vector<ExampleCheck> out;
  for (const auto& ex : published_examples()) out.push_back(check_example(ex));
  return out;
}

}  // namespace pythdiam
