#pragma once

#include <gmpxx.h>

#include <cassert>
#include <climits>
#include <stdexcept>

namespace qell {

// 2-adic valuation. v2(0) returns V2_INF so min-searches work unchanged.
inline constexpr long V2_INF = LONG_MAX;

inline long v2(const mpz_class& n) {
  if (n == 0) return V2_INF;
  return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

inline long v2(const mpq_class& q) {
  if (q == 0) return V2_INF;
  return v2(mpz_class(q.get_num())) - v2(mpz_class(q.get_den()));
}

// p-adic valuation for odd primes (used to strip localized primes).
inline long vp(mpz_class n, const mpz_class& p) {
  if (n == 0) return V2_INF;
  long k = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++k;
  }
  return k;
}

inline mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline mpz_class pow2(unsigned long e) { return pow_z(2, e); }

inline mpq_class pow_q(const mpq_class& b, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (b == 0) throw std::domain_error("pow_q: zero to negative power");
    return pow_q(1 / b, -e);
  }
  mpq_class r = 1, x = b;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) r *= x;
    if (k > 1) x *= x;
  }
  return r;
}

// Binomial coefficient with arbitrary (possibly negative) integer top.
inline mpz_class binom_z(const mpz_class& n, unsigned long k) {
  mpz_class num = 1, den = 1;
  for (unsigned long i = 0; i < k; ++i) {
    num *= n - static_cast<long>(i);
    den *= static_cast<long>(i + 1);
  }
  mpz_class q = num / den;
  assert(q * den == num);
  return q;
}

// Inverse of an odd integer modulo 2^k, in [0, 2^k).
inline mpz_class inv_odd_mod2k(const mpz_class& a, unsigned long k) {
  if (k == 0) return 0;
  mpz_class m = pow2(k), r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw std::domain_error("inv_odd_mod2k: even argument");
  return r;
}

// Context-carrying construction points shared by all field-like types.
inline mpq_class zero_like(const mpq_class&) { return 0; }
inline mpq_class one_like(const mpq_class&) { return 1; }
inline bool kz(const mpq_class& x) { return x == 0; }
inline mpq_class inv(const mpq_class& x) { return 1 / x; }

// Canonical representative in [0, 2^k) of a rational with odd denominator.
inline mpz_class mod2k(const mpq_class& q, unsigned long k) {
  if (k == 0) return 0;
  mpz_class m = pow2(k);
  mpz_class num = q.get_num() % m;
  if (num < 0) num += m;
  mpz_class r = num * inv_odd_mod2k(q.get_den(), k) % m;
  return r;
}

}  // namespace qell
