#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pythdiam/arith.hpp"
#include "pythdiam/rational.hpp"

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

}  // namespace

TEST(Natural, CheckedArithmeticSignalsOverflow) {
  const Natural big = Natural::max();
  expect_errc(errc::overflow_detected, [&] { (void)(big + 1); });
  expect_errc(errc::overflow_detected, [&] { (void)(big * 2); });
  expect_errc(errc::overflow_detected, [] { (void)(Natural(3) - Natural(4)); });
  expect_errc(errc::overflow_detected, [] { (void)Natural(-1); });
  EXPECT_EQ(abs_diff(3, 10), Natural(7));
}

TEST(Natural, DecimalRoundTrip) {
  const Natural v = Natural::parse("170141183460469231731687303715884105727");
  EXPECT_EQ(v.to_string(), "170141183460469231731687303715884105727");
  EXPECT_EQ(Natural::max().to_string(), "340282366920938463463374607431768211455");
  expect_errc(errc::overflow_detected,
              [] { (void)Natural::parse("340282366920938463463374607431768211456"); });
  expect_errc(errc::precondition_violated, [] { (void)Natural::parse("12a"); });
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(12, 18), Natural(6));
  EXPECT_EQ(gcd(0, 5), Natural(5));
  EXPECT_EQ(gcd(8, 1), Natural(1));
  EXPECT_EQ(gcd(0, 0), Natural(0));
}

TEST(Gcd, SymmetricAndDivides) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Natural a = rng() % 100000;
    const Natural b = rng() % 100000;
    const Natural g = gcd(a, b);
    EXPECT_EQ(g, gcd(b, a));
    if (!g.is_zero()) {
      EXPECT_TRUE((a % g).is_zero());
      EXPECT_TRUE((b % g).is_zero());
    }
  }
}

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(144), (IsqrtResult{12, true}));
  EXPECT_EQ(isqrt(2), (IsqrtResult{1, false}));
  EXPECT_EQ(isqrt(166464), (IsqrtResult{408, true}));
  EXPECT_EQ(isqrt(0), (IsqrtResult{0, true}));
}

TEST(Isqrt, BracketsEveryValueUpToAMillion) {
  for (std::uint64_t v = 0; v <= 1000000; ++v) {
    const auto r = isqrt(v).root.to_u64();
    ASSERT_LE(r * r, v);
    ASSERT_GT((r + 1) * (r + 1), v);
    ASSERT_EQ(isqrt(v).exact, r * r == v);
  }
}

TEST(Isqrt, WideValues) {
  const Natural r = Natural::parse("18446744073709551615");  // 2^64 - 1
  EXPECT_EQ(isqrt(r * r), (IsqrtResult{r, true}));
  EXPECT_EQ(isqrt(r * r - 1).root, r - 1);
  EXPECT_EQ(isqrt(Natural::max()).root, r);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Natural x = rng();
    const auto s = isqrt(x * x);
    EXPECT_TRUE(s.exact);
    EXPECT_EQ(s.root, x);
    EXPECT_FALSE(isqrt(x * x + 1).exact && x > Natural(0));
  }
}

TEST(Iroot, CubeAndHigherRoots) {
  EXPECT_EQ(iroot(27, 3), (IsqrtResult{3, true}));
  EXPECT_EQ(iroot(28, 3), (IsqrtResult{3, false}));
  EXPECT_EQ(iroot(26, 3), (IsqrtResult{2, false}));
  EXPECT_EQ(iroot(Natural(1) * 1024 * 1024 * 1024, 5), (IsqrtResult{64, true}));
  for (std::uint64_t base = 1; base < 2000; base += 37) {
    for (unsigned n = 3; n <= 6; ++n) {
      const Natural p = ipow(base, n);
      EXPECT_EQ(iroot(p, n), (IsqrtResult{base, true}));
      if (base > 1) EXPECT_EQ(iroot(p - 1, n), (IsqrtResult{base - 1, false}));
    }
  }
}

TEST(SplitCoprimePower, Examples) {
  EXPECT_EQ(split_coprime_power(4, 9, 2), (CoprimeSplit{2, 3}));
  EXPECT_EQ(split_coprime_power(8, 27, 3), (CoprimeSplit{2, 3}));
  EXPECT_EQ(split_coprime_power(1, 16, 2), (CoprimeSplit{1, 4}));
  expect_errc(errc::not_a_coprime_pair, [] { (void)split_coprime_power(4, 16, 2); });
  expect_errc(errc::not_a_perfect_power, [] { (void)split_coprime_power(2, 9, 2); });
}

TEST(SplitCoprimePower, RoundTrip) {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 1000) {
    const Natural c1 = 1 + rng() % 3000;
    const Natural c2 = 1 + rng() % 3000;
    if (!coprime(c1, c2)) continue;
    for (unsigned n : {2u, 3u}) EXPECT_EQ(split_coprime_power(ipow(c1, n), ipow(c2, n), n), (CoprimeSplit{c1, c2}));
    ++checked;
  }
}

TEST(SplitCoprimePrimePower, Examples) {
  EXPECT_EQ(split_coprime_prime_power(2, 2, 9, 2), (PrimeSplit{Side::left, 1, 3, 3}));
  EXPECT_EQ(split_coprime_prime_power(2, 25, 2, 2), (PrimeSplit{Side::right, 5, 1, 5}));
  // 8 * 9 = 72 = 2 * 6^2.
  EXPECT_EQ(Natural(8) * 9, Natural(2) * 36);
  EXPECT_EQ(split_coprime_prime_power(2, 8, 9, 2), (PrimeSplit{Side::left, 2, 3, 6}));
  expect_errc(errc::precondition_violated, [] { (void)split_coprime_prime_power(2, 3, 9, 2); });
  expect_errc(errc::precondition_violated, [] { (void)split_coprime_prime_power(4, 2, 9, 2); });
}

TEST(SplitPrimeScaledPower, Examples) {
  // 2 * 8 * 9 = 144 = 12^2 with 12 = 2 * 2 * 3.
  EXPECT_EQ(split_prime_scaled_power(2, 8, 9, 2), (PrimeSplit{Side::left, 2, 3, 12}));
  EXPECT_EQ(split_prime_scaled_power(2, 1, 2, 2), (PrimeSplit{Side::right, 1, 1, 2}));
  expect_errc(errc::precondition_violated, [] { (void)split_prime_scaled_power(3, 9, 1, 2); });
}

TEST(SplitPrimeScaledPower, ProductIsRecoveredPower) {
  // p a b = c^n must hold with c = p c1 c2 for every split.
  for (unsigned n : {2u, 3u}) {
    for (std::uint64_t p : {2u, 3u, 5u}) {
      for (std::uint64_t c1 = 1; c1 < 30; ++c1) {
        for (std::uint64_t c2 = 1; c2 < 30; ++c2) {
          if (!coprime(c1, c2) || c2 % p == 0) continue;
          const Natural a = ipow(p, n - 1) * ipow(c1, n);
          const Natural b = ipow(c2, n);
          const auto s = split_prime_scaled_power(p, a, b, n);
          EXPECT_EQ(s.side, Side::left);
          EXPECT_EQ(s.c1, Natural(c1));
          EXPECT_EQ(s.c2, Natural(c2));
          EXPECT_EQ(ipow(s.c, n), Natural(p) * a * b);
        }
      }
    }
  }
}

// Divisibility facts the family constructions rely on.
TEST(Divisibility, CoprimeDivisorDividesCofactor) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20000; ++i) {
    const Natural a = 1 + rng() % 500;
    const Natural b = 1 + rng() % 500;
    const Natural c = 1 + rng() % 500;
    if (coprime(a, b) && ((b * c) % a).is_zero()) EXPECT_TRUE((c % a).is_zero());
  }
}

TEST(Divisibility, OddPairSumDifference) {
  for (std::uint64_t a = 1; a < 400; a += 2) {
    for (std::uint64_t b = 1; b < a; b += 2) {
      const Natural d = Natural(a) - b;
      const Natural s = Natural(a) + b;
      if (!coprime(a, b)) continue;
      EXPECT_EQ(gcd(d, s), Natural(2));
      EXPECT_NE((d % 4).is_zero(), (s % 4).is_zero());
    }
  }
}

TEST(Divisibility, MixedSignFormsAreCoprimeToSumOfSquares) {
  for (std::int64_t a = 1; a < 150; ++a) {
    for (std::int64_t b = 1; b < 150; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const std::int64_t s = a * a + b * b;
      const std::int64_t expect = (a + b) % 2 == 1 ? 1 : 2;
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          const std::int64_t form = a * a + s1 * 2 * a * b + s2 * b * b;
          EXPECT_EQ(std::gcd(form, s), expect) << a << "," << b;
        }
    }
  }
}

TEST(Divisibility, PowerDivisibilityImpliesDivisibility) {
  std::mt19937_64 rng(9);
  int hits = 0;
  for (int i = 0; i < 200000; ++i) {
    const Natural a = 1 + rng() % 10000;
    const Natural b = 1 + rng() % 10000;
    for (unsigned n : {2u, 3u}) {
      if ((ipow(b, n) % ipow(a, n)).is_zero()) {
        ++hits;
        EXPECT_TRUE((b % a).is_zero());
      }
    }
  }
  EXPECT_GT(hits, 0);
}

TEST(Rational, ReducedForm) {
  const Rational r(6, 4);
  EXPECT_EQ(r.num(), Natural(3));
  EXPECT_EQ(r.den(), Natural(2));
  EXPECT_EQ(r.to_string(), "3/2");
  EXPECT_EQ((Rational(3, 2) * Rational(4, 9)).to_string(), "2/3");
  EXPECT_EQ(Rational(0, 7), Rational(0));
  expect_errc(errc::precondition_violated, [] { (void)Rational(1, 0); });
}

TEST(Oracle, FloorSqrtAgreesWithLibrary) {
  for (std::uint64_t v = 0; v < 200000; v += 7) EXPECT_EQ(isqrt(v).root.to_u64(), oracle::floor_sqrt(v));
}
