#pragma once

#include <cmath>
#include <cstdint>

#include "pythdiam/error.hpp"
#include "pythdiam/natural.hpp"

namespace pythdiam {

/// gcd(0, 0) is 0.
constexpr Natural gcd(Natural a, Natural b) noexcept {
  auto x = a.value();
  auto y = b.value();
  while (y != 0) {
    const auto r = x % y;
    x = y;
    y = r;
  }
  return Natural::from_rep(x);
}

constexpr bool coprime(Natural a, Natural b) noexcept { return gcd(a, b) == Natural(1); }

struct IsqrtResult {
  Natural root;
  bool exact = false;

  friend bool operator==(const IsqrtResult&, const IsqrtResult&) = default;
};

namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t v) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  // The double estimate is within a few units; step to the exact floor.
  while (r > 0 && (r > 0xFFFFFFFFULL || r * r > v)) --r;
  while (r < 0xFFFFFFFFULL && (r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline Natural::rep isqrt_rep(Natural::rep v) noexcept {
  if (v <= std::numeric_limits<std::uint64_t>::max())
    return isqrt_u64(static_cast<std::uint64_t>(v));
  // Newton from above: x_{k+1} = (x_k + v / x_k) / 2 decreases to floor(sqrt v).
  const int bits = Natural::from_rep(v).bit_width();
  Natural::rep x = Natural::rep{1} << ((bits + 1) / 2);
  for (;;) {
    const Natural::rep y = (x + v / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

// Writes base^exp to out; false when it exceeds 128 bits.
inline bool pow_fits(Natural::rep base, unsigned exp, Natural::rep& out) noexcept {
  Natural::rep r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) return false;
  }
  out = r;
  return true;
}

}  // namespace detail

inline IsqrtResult isqrt(Natural v) noexcept {
  const auto r = Natural::from_rep(detail::isqrt_rep(v.value()));
  return {r, r.value() * r.value() == v.value()};
}

inline bool is_square(Natural v) noexcept { return isqrt(v).exact; }

/// Checked power; throws overflow_detected.
inline Natural ipow(Natural base, unsigned exp) {
  Natural r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Floor of the n-th root (n >= 1) with an exactness flag.
inline IsqrtResult iroot(Natural v, unsigned n) {
  if (n == 0) throw error(errc::precondition_violated, "zeroth root");
  if (n == 1) return {v, true};
  if (n == 2) return isqrt(v);
  if (v.is_zero()) return {Natural(0), true};
  using rep = Natural::rep;
  const rep value = v.value();
  const int bits = v.bit_width();
  rep x = rep{1} << ((bits + static_cast<int>(n) - 1) / static_cast<int>(n));
  // Newton from above: x_{k+1} = ((n-1) x_k + v / x_k^(n-1)) / n.
  for (;;) {
    rep p;
    const rep q = detail::pow_fits(x, n - 1, p) ? value / p : 0;
    const rep y = ((n - 1) * x + q) / n;
    if (y >= x) break;
    x = y;
  }
  rep p;
  const bool exact = detail::pow_fits(x, n, p) && p == value;
  return {Natural::from_rep(x), exact};
}

/// Trial division; adequate for the small primes this library uses.
inline bool is_prime(Natural p) noexcept {
  const auto v = p.value();
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0) return false;
  for (Natural::rep d = 3; d <= v / d; d += 2)
    if (v % d == 0) return false;
  return true;
}

struct CoprimeSplit {
  Natural c1;
  Natural c2;

  friend bool operator==(const CoprimeSplit&, const CoprimeSplit&) = default;
};

/// For coprime a, b whose product is a perfect n-th power, returns
/// (c1, c2) with a = c1^n and b = c2^n.
inline CoprimeSplit split_coprime_power(Natural a, Natural b, unsigned n) {
  if (a.is_zero() || b.is_zero() || n < 2)
    throw error(errc::precondition_violated, "split_coprime_power needs a, b >= 1 and n >= 2");
  if (!coprime(a, b)) throw error(errc::not_a_coprime_pair, "gcd(a, b) != 1");
  const auto whole = iroot(a * b, n);
  if (!whole.exact) throw error(errc::not_a_perfect_power, "a*b is not a perfect power");
  const auto ra = iroot(a, n);
  const auto rb = iroot(b, n);
  if (!ra.exact || !rb.exact || ra.root * rb.root != whole.root)
    throw error(errc::not_a_perfect_power, "factor is not a perfect power");
  return {ra.root, rb.root};
}

enum class Side { left, right };

/// Result of splitting a coprime pair where one side carries an extra prime
/// factor. `c` is the root recovered from the product.
struct PrimeSplit {
  Side side = Side::left;
  Natural c1;
  Natural c2;
  Natural c;

  friend bool operator==(const PrimeSplit&, const PrimeSplit&) = default;
};

/// a*b = p*c^n with gcd(a, b) = 1: either a = p*c1^n, b = c2^n (left) or
/// a = c1^n, b = p*c2^n (right). c = c1*c2.
inline PrimeSplit split_coprime_prime_power(Natural p, Natural a, Natural b, unsigned n) {
  if (!is_prime(p)) throw error(errc::precondition_violated, "p is not prime");
  if (a.is_zero() || b.is_zero() || n < 2 || !coprime(a, b))
    throw error(errc::precondition_violated, "need coprime a, b >= 1 and n >= 2");
  const Side side = (a % p).is_zero() ? Side::left : Side::right;
  if (side == Side::right && !(b % p).is_zero())
    throw error(errc::precondition_violated, "p divides neither a nor b");
  const Natural rest_a = side == Side::left ? a / p : a;
  const Natural rest_b = side == Side::right ? b / p : b;
  const auto ra = iroot(rest_a, n);
  const auto rb = iroot(rest_b, n);
  if (!ra.exact || !rb.exact)
    throw error(errc::precondition_violated, "a*b/p is not a perfect power");
  return {side, ra.root, rb.root, ra.root * rb.root};
}

/// p*a*b = c^n with gcd(a, b) = 1: either a = p^(n-1)*c1^n, b = c2^n (left)
/// or a = c1^n, b = p^(n-1)*c2^n (right). Here c = p*c1*c2.
inline PrimeSplit split_prime_scaled_power(Natural p, Natural a, Natural b, unsigned n) {
  if (!is_prime(p)) throw error(errc::precondition_violated, "p is not prime");
  if (a.is_zero() || b.is_zero() || n < 2 || !coprime(a, b))
    throw error(errc::precondition_violated, "need coprime a, b >= 1 and n >= 2");
  const Natural scale = ipow(p, n - 1);
  const Side side = (a % p).is_zero() ? Side::left : Side::right;
  Natural rest_a = a;
  Natural rest_b = b;
  if (side == Side::left) {
    if (!(a % scale).is_zero())
      throw error(errc::precondition_violated, "a is not divisible by p^(n-1)");
    rest_a = a / scale;
  } else {
    if (!(b % scale).is_zero())
      throw error(errc::precondition_violated, "neither a nor b is divisible by p^(n-1)");
    rest_b = b / scale;
  }
  const auto ra = iroot(rest_a, n);
  const auto rb = iroot(rest_b, n);
  if (!ra.exact || !rb.exact)
    throw error(errc::precondition_violated, "p*a*b is not a perfect power");
  return {side, ra.root, rb.root, p * ra.root * rb.root};
}

}  // namespace pythdiam
