#pragma once

#include <array>
#include <stdexcept>

#include "qell/rational.hpp"

namespace qell {

// Small integer inside an arbitrary coefficient type, built by doubling
// from a model value (the model supplies context such as a prime modulus).
template <class K>
K k_int(const K& model, long n) {
  K one = one_like(model);
  K acc = zero_like(model);
  bool neg = n < 0;
  unsigned long m = neg ? -(unsigned long)n : (unsigned long)n;
  K base = one;
  while (m) {
    if (m & 1) acc = acc + base;
    base = base + base;
    m >>= 1;
  }
  return neg ? zero_like(model) - acc : acc;
}

// Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <class K>
struct Curve {
  std::array<K, 5> a;  // a1, a2, a3, a4, a6

  const K& a1() const { return a[0]; }
  const K& a2() const { return a[1]; }
  const K& a3() const { return a[2]; }
  const K& a4() const { return a[3]; }
  const K& a6() const { return a[4]; }

  K kint(long n) const { return k_int(a[0], n); }

  K b2() const { return a1() * a1() + kint(4) * a2(); }
  K b4() const { return a1() * a3() + kint(2) * a4(); }
  K b6() const { return a3() * a3() + kint(4) * a6(); }
  K b8() const {
    return a1() * a1() * a6() + kint(4) * a2() * a6() - a1() * a3() * a4() +
           a2() * a3() * a3() - a4() * a4();
  }
  K c4() const { return b2() * b2() - kint(24) * b4(); }
  K c6() const {
    return zero_like(a[0]) - b2() * b2() * b2() + kint(36) * b2() * b4() -
           kint(216) * b6();
  }
  K disc() const {
    K B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return zero_like(a[0]) - B2 * B2 * B8 - kint(8) * B4 * B4 * B4 -
           kint(27) * B6 * B6 + kint(9) * B2 * B4 * B6;
  }

  friend bool operator==(const Curve& u, const Curve& v) { return u.a == v.a; }
  friend bool operator!=(const Curve& u, const Curve& v) { return !(u == v); }
};

template <class K>
struct ECPoint {
  K x, y;
  bool inf = false;

  static ECPoint infinity(const K& model) {
    return {zero_like(model), zero_like(model), true};
  }
  friend bool operator==(const ECPoint& p, const ECPoint& q) {
    if (p.inf || q.inf) return p.inf == q.inf;
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator!=(const ECPoint& p, const ECPoint& q) {
    return !(p == q);
  }
};

template <class K>
bool on_curve(const Curve<K>& c, const ECPoint<K>& p) {
  if (p.inf) return true;
  K lhs = p.y * p.y + c.a1() * p.x * p.y + c.a3() * p.y;
  K rhs = ((p.x + c.a2()) * p.x + c.a4()) * p.x + c.a6();
  return kz(lhs - rhs);
}

template <class K>
ECPoint<K> ec_neg(const Curve<K>& c, const ECPoint<K>& p) {
  if (p.inf) return p;
  return {p.x, zero_like(p.x) - p.y - c.a1() * p.x - c.a3(), false};
}

// Chord-tangent addition; K must support exact division via inv().
template <class K>
ECPoint<K> ec_add(const Curve<K>& c, const ECPoint<K>& p,
                  const ECPoint<K>& q) {
  if (p.inf) return q;
  if (q.inf) return p;
  K lam, nu;
  if (p.x == q.x) {
    if (p.y != q.y || kz(k_int(p.x, 2) * p.y + c.a1() * p.x + c.a3()))
      return ECPoint<K>::infinity(p.x);  // q = -p, or p is 2-torsion
    K den = k_int(p.x, 2) * p.y + c.a1() * p.x + c.a3();
    K num = k_int(p.x, 3) * p.x * p.x + k_int(p.x, 2) * c.a2() * p.x +
            c.a4() - c.a1() * p.y;
    lam = num * inv(den);
  } else {
    lam = (q.y - p.y) * inv(q.x - p.x);
  }
  nu = p.y - lam * p.x;
  K x3 = lam * lam + c.a1() * lam - c.a2() - p.x - q.x;
  K y3 = zero_like(p.x) - (lam + c.a1()) * x3 - nu - c.a3();
  return {x3, y3, false};
}

template <class K>
ECPoint<K> ec_mul(const Curve<K>& c, long n, ECPoint<K> p) {
  if (n < 0) {
    p = ec_neg(c, p);
    n = -n;
  }
  ECPoint<K> acc = ECPoint<K>::infinity(p.x);
  for (long k = n; k > 0; k >>= 1) {
    if (k & 1) acc = ec_add(c, acc, p);
    if (k > 1) p = ec_add(c, p, p);
  }
  return acc;
}

// Change of coordinates x = X/lam^2 + r, y = Y/lam^3 + s X/lam^2 + t,
// i.e. on points (x, y) |-> (lam^2 (x - r), lam^3 (y - s(x - r) - t)).
template <class K>
struct Iso {
  K r, s, t, lam;

  static Iso identity(const K& model) {
    return {zero_like(model), zero_like(model), zero_like(model),
            one_like(model)};
  }

  Curve<K> operator()(const Curve<K>& c) const {
    K l2 = lam * lam, l3 = l2 * lam, l4 = l2 * l2, l6 = l3 * l3;
    K two = k_int(r, 2), three = k_int(r, 3);
    K a1 = lam * (c.a1() + two * s);
    K a2 = l2 * (c.a2() + three * r - s * s - c.a1() * s);
    K a3 = l3 * (c.a3() + two * t + c.a1() * r);
    K a4 = l4 * (c.a4() + three * r * r + two * r * c.a2() - two * s * t -
                 c.a1() * t - c.a1() * r * s - c.a3() * s);
    K a6 = l6 * (c.a6() + r * r * r + c.a2() * r * r + c.a4() * r - t * t -
                 c.a1() * r * t - c.a3() * t);
    return {{a1, a2, a3, a4, a6}};
  }

  ECPoint<K> operator()(const ECPoint<K>& p) const {
    if (p.inf) return p;
    K l2 = lam * lam;
    K dx = p.x - r;
    return {l2 * dx, l2 * lam * (p.y - s * dx - t), false};
  }

  // this followed by o (coordinates change twice).
  Iso then(const Iso& o) const {
    K il = inv(lam), il2 = il * il;
    return {r + il2 * o.r, s + il * o.s, t + il2 * s * o.r + il2 * il * o.t,
            lam * o.lam};
  }

  Iso inverse() const {
    K l2 = lam * lam;
    return {zero_like(r) - l2 * r, zero_like(r) - lam * s,
            l2 * lam * (s * r - t), inv(lam)};
  }

  bool is_identity() const {
    return kz(r) && kz(s) && kz(t) && kz(lam - one_like(lam));
  }
};

}  // namespace qell
