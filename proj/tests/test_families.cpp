#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pythdiam/examples.hpp"
#include "pythdiam/families.hpp"

using namespace pythdiam;

namespace {

template <typename Fn>
void expect_errc(errc code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<int> ids(const std::vector<Combination>& v) {
  std::vector<int> out;
  for (Combination c : v) out.push_back(id(c));
  return out;
}

}  // namespace

TEST(Combinations, IdsFollowLegThenCircle) {
  EXPECT_EQ(combination(Leg::beta, Circle::incircle), Combination::c1);
  EXPECT_EQ(combination(Leg::beta, Circle::ex_c), Combination::c4);
  EXPECT_EQ(combination(Leg::gamma, Circle::incircle), Combination::c5);
  EXPECT_EQ(combination(Leg::gamma, Circle::ex_c), Combination::c8);
  for (Combination c : kCombinations) EXPECT_EQ(combination(leg(c), circle(c)), c);
}

TEST(EvenLeg, Examples) {
  EXPECT_EQ(prop1_even_leg(2, 1, EvenLegVariant::m_even).sides(), (TriangleSides{65, 16, 63}));
  const auto t = prop1_even_leg(7, 4, EvenLegVariant::n_even);
  EXPECT_EQ(t.sides(), (TriangleSides{3425, 3136, 1377}));
  EXPECT_EQ(isqrt(t.beta), (IsqrtResult{56, true}));
  expect_errc(errc::bad_params, [] { (void)prop1_even_leg(1, 1, EvenLegVariant::n_even); });
  expect_errc(errc::bad_params, [] { (void)prop1_even_leg(2, 4, EvenLegVariant::m_even); });
}

TEST(OddLeg, Examples) {
  EXPECT_EQ(prop1_odd_leg(2, 1).sides(), (TriangleSides{41, 40, 9}));
  EXPECT_EQ(prop1_odd_leg(1, 2).sides(), (TriangleSides{41, 40, 9}));
  EXPECT_EQ(prop1_odd_leg(4, 1).sides(), (TriangleSides{353, 272, 225}));
  expect_errc(errc::bad_params, [] { (void)prop1_odd_leg(3, 1); });
}

TEST(SquareLegs, ParametrizationsCoverEverySquareLegTriple) {
  TripleSet even;
  TripleSet odd;
  for (std::uint64_t t1 = 1; t1 < 40; ++t1)
    for (std::uint64_t t2 = 1; t2 < 40; ++t2) {
      if (std::gcd(t1, t2) != 1) continue;
      for (auto v : {EvenLegVariant::m_even, EvenLegVariant::n_even}) {
        try {
          const auto t = prop1_even_leg(t1, t2, v);
          if (t.alpha <= Natural(20000)) even.insert(t.params);
        } catch (const error&) {
        }
      }
      if ((t1 + t2) % 2 == 1) {
        const auto t = prop1_odd_leg(t1, t2);
        if (t.alpha <= Natural(20000)) odd.insert(t.params);
      }
    }
  TripleSet even_want;
  TripleSet odd_want;
  for (const auto& t : enumerate_primitive(20000)) {
    if (oracle::is_square(t.beta.to_u64())) even_want.insert(t.params);
    if (oracle::is_square(t.gamma.to_u64())) odd_want.insert(t.params);
  }
  EXPECT_EQ(even, even_want);
  EXPECT_EQ(odd, odd_want);
}

TEST(GenFamily, Examples) {
  EXPECT_EQ(gen_family(FamilyId::F1, 1, 1).triple.sides(), (TriangleSides{65, 16, 63}));
  EXPECT_EQ(gen_family(FamilyId::F4, 2, 1).triple.sides(), (TriangleSides{353, 272, 225}));
  // F4 treats (kappa, lambda) as unordered.
  EXPECT_EQ(gen_family(FamilyId::F4, 1, 2).triple.sides(), (TriangleSides{353, 272, 225}));
  EXPECT_EQ(gen_family(FamilyId::F6, 1, 1).triple.sides(), (TriangleSides{145, 144, 17}));
  expect_errc(errc::bad_params, [] { (void)gen_family(FamilyId::F1, 2, 1); });
  expect_errc(errc::bad_params, [] { (void)gen_family(FamilyId::F1, 1, 1, true); });
}

TEST(GenFamily, WitnessesAreSquareRoots) {
  const auto m = gen_family(FamilyId::F6, 1, 1);
  ASSERT_FALSE(m.square_witnesses.empty());
  for (const auto& w : m.square_witnesses) EXPECT_EQ(square(w.root), w.value) << w.quantity;
}

TEST(EnumerateFamily, Examples) {
  const auto f1 = enumerate_family(FamilyId::F1, 100);
  ASSERT_EQ(f1.size(), 1u);
  EXPECT_EQ(f1[0].triple.sides(), (TriangleSides{65, 16, 63}));
  const auto f3 = enumerate_family(FamilyId::F3, 5000);
  EXPECT_TRUE(std::any_of(f3.begin(), f3.end(), [](const FamilyMember& m) {
    return m.triple.sides() == TriangleSides{4901, 4900, 99};
  }));
  EXPECT_TRUE(enumerate_family(FamilyId::F4, 300).empty());
  EXPECT_EQ(parse_family("F5"), FamilyId::F4);
  EXPECT_FALSE(parse_family("F7").has_value());
}

TEST(EnumerateFamily, EveryMemberRealizesItsCombinations) {
  for (FamilyId f : kFamilies) {
    const auto members = enumerate_family(f, 10000000);
    EXPECT_FALSE(members.empty()) << to_string(f);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto got = classify_combinations(members[i].triple);
      for (Combination c : combinations_of(f))
        EXPECT_NE(std::find(got.begin(), got.end(), c), got.end()) << to_string(f) << " " << id(c);
      if (i > 0) EXPECT_LE(members[i - 1].triple.alpha, members[i].triple.alpha);
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(ids(classify_combinations(make_primitive(2, 1))), std::vector<int>{4});
  EXPECT_EQ(ids(classify_combinations(make_primitive(17, 8))), (std::vector<int>{5, 7}));
  EXPECT_TRUE(classify_combinations(make_primitive(3, 2)).empty());
}

TEST(Classify, OddLegSquareTiesIncircleToExcircleB) {
  // With gamma a square, d is a square exactly when d_b is.
  int seen = 0;
  for (const auto& t : enumerate_primitive(3000000)) {
    if (!is_square(t.gamma)) continue;
    const auto c = classify_combinations(t);
    const bool has5 = std::find(c.begin(), c.end(), Combination::c5) != c.end();
    const bool has7 = std::find(c.begin(), c.end(), Combination::c7) != c.end();
    EXPECT_EQ(has5, has7);
    seen += has5;
  }
  EXPECT_GT(seen, 0);
}

TEST(ForbiddenCombinations, SmallCensus) {
  const auto small = theorem1_search(5);
  EXPECT_TRUE(small.ok());
  EXPECT_EQ(small.triples_scanned, 1u);
  EXPECT_EQ(small.census, (std::array<std::uint64_t, 8>{0, 0, 0, 1, 0, 0, 0, 0}));
  const auto r = theorem1_search(400);
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.census[4], 1u);
  EXPECT_GE(r.census[6], 1u);
}

TEST(ForbiddenCombinations, ObstructionHoldsAndRangesMerge) {
  const auto whole = theorem1_search(1000000);
  EXPECT_TRUE(whole.ok());
  EXPECT_GT(whole.gamma_square_triples, 0u);
  EXPECT_EQ(whole.census[5], 0u);
  EXPECT_EQ(whole.census[7], 0u);
  Theorem1Report merged;
  const Natural cuts[] = {2, 50, 300, 1001};
  for (std::size_t i = 0; i + 1 < std::size(cuts); ++i)
    merged.merge(theorem1_search(1000000, cuts[i], cuts[i + 1]));
  EXPECT_EQ(merged.triples_scanned, whole.triples_scanned);
  EXPECT_EQ(merged.census, whole.census);
  EXPECT_EQ(merged.gamma_square_triples, whole.gamma_square_triples);
}

TEST(Census, SoundAndExceptionsPredicted) {
  const auto census = completeness_census(100000);
  for (const auto& row : census) {
    EXPECT_TRUE(row.unsound.empty()) << id(row.combination);
    EXPECT_EQ(row.exceptional, row.predicted) << id(row.combination);
  }
  EXPECT_TRUE(census[3].exceptional.contains(PrimParams{2, 1}));
  EXPECT_TRUE(census[5].classified.empty());
  EXPECT_TRUE(census[7].classified.empty());
}

TEST(PublishedExamples, OnlyKnownMisprintsDisagree) {
  const auto checks = check_published_examples();
  ASSERT_EQ(checks.size(), 11u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.oracle_consistent) << c.label;
    std::vector<std::string> q;
    for (const auto& d : c.discrepancies) q.push_back(d.quantity);
    std::sort(q.begin(), q.end());
    if (c.label == 3) {
      EXPECT_EQ(q, (std::vector<std::string>{"beta", "d_b"}));
      for (const auto& d : c.discrepancies) {
        if (d.quantity == "beta") EXPECT_EQ(d.computed_value, Natural(3136));
        if (d.quantity == "d_b") EXPECT_EQ(d.computed_value, Natural(5184));
      }
    } else if (c.label == 11) {
      ASSERT_EQ(q, std::vector<std::string>{"alpha"});
      EXPECT_EQ(c.discrepancies[0].computed_value, Natural(145));
    } else {
      EXPECT_TRUE(q.empty()) << c.label;
    }
  }
}
