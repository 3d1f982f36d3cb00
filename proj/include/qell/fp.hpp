#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace qell {

// Prime field element; the value carries its modulus so that generic curve
// and polynomial code needs no global state. Moduli must fit in 32 bits.
struct Fp64 {
  uint64_t v = 0;
  uint64_t p = 0;

  Fp64() = default;
  Fp64(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

  static Fp64 from_q(const mpq_class& q, uint64_t prime) {
    mpz_class pz(static_cast<unsigned long>(prime));
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    mpz_class dinv;
    if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()))
      throw std::domain_error("Fp64: denominator divisible by p");
    mpz_class r = num * dinv % pz;
    return Fp64(r.get_ui(), prime);
  }

  friend Fp64 operator+(const Fp64& a, const Fp64& b) {
    assert(a.p == b.p);
    uint64_t s = a.v + b.v;
    return Fp64(s >= a.p ? s - a.p : s, a.p);
  }

  friend Fp64 operator-(const Fp64& a, const Fp64& b) {
    assert(a.p == b.p);
    return Fp64(a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p);
  }

  friend Fp64 operator-(const Fp64& a) {
    return Fp64(a.v == 0 ? 0 : a.p - a.v, a.p);
  }

  friend Fp64 operator*(const Fp64& a, const Fp64& b) {
    assert(a.p == b.p);
    return Fp64(a.v * b.v % a.p, a.p);
  }

  Fp64& operator+=(const Fp64& o) { return *this = *this + o; }
  Fp64& operator-=(const Fp64& o) { return *this = *this - o; }
  Fp64& operator*=(const Fp64& o) { return *this = *this * o; }

  friend bool operator==(const Fp64& a, const Fp64& b) {
    assert(a.p == b.p);
    return a.v == b.v;
  }
  friend bool operator!=(const Fp64& a, const Fp64& b) { return !(a == b); }

  bool is_zero() const { return v == 0; }
};

inline bool kz(const Fp64& x) { return x.v == 0; }

inline Fp64 pow(Fp64 b, uint64_t e) {
  Fp64 r(1, b.p);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Fp64 inv(const Fp64& a) {
  if (a.v == 0) throw std::domain_error("Fp64: division by zero");
  return pow(a, a.p - 2);
}

inline Fp64 operator/(const Fp64& a, const Fp64& b) { return a * inv(b); }

inline Fp64 zero_like(const Fp64& a) { return Fp64(0, a.p); }
inline Fp64 one_like(const Fp64& a) { return Fp64(1, a.p); }

}  // namespace qell
