#pragma once

#include "qell/ec.hpp"

namespace qell {

// y^2 + (1-b) xy - by = x^3 - bx^2, with (0,0) of exact order 5.
template <class K>
Curve<K> curve_T(const K& b) {
  K z = zero_like(b), o = one_like(b);
  return {{o - b, z - b, z - b, z, z}};
}

// y^2 + (1-c) xy - by = x^3 - bx^2.
template <class K>
Curve<K> curve_T(const K& b, const K& c) {
  K z = zero_like(b), o = one_like(b);
  return {{o - c, z - b, z - b, z, z}};
}

// Homogeneous Tate normal curve y^2 + a1 xy + a3 y = x^3 + a2 x^2.
template <class K>
Curve<K> curve_T1(const K& a1, const K& a2, const K& a3) {
  K z = zero_like(a1);
  return {{a1, a2, a3, z, z}};
}

// The order-5 locus in T1 coordinates: a2 = u(a1-u), a3 = u^2(a1-u).
template <class K>
Curve<K> curve_T1_order5(const K& a1, const K& u) {
  K b1 = a1 - u;
  K a2 = u * b1;
  K a3 = u * a2;
  return curve_T1(a1, a2, a3);
}

template <class K>
struct TateForm {
  Curve<K> curve;
  Iso<K> iso;  // maps the input curve to `curve`
};

// Move P to the origin and kill a4, a6: the result is
// y^2 + a1 xy + a3 y = x^3 + a2 x^2 with P = (0,0).
// Requires a3 != 0 after recentering (P not 2-torsion).
template <class K>
TateForm<K> tate_t1(const Curve<K>& c, const ECPoint<K>& p) {
  if (p.inf) throw std::domain_error("tate form: point at infinity");
  K z = zero_like(p.x), o = one_like(p.x);
  Iso<K> recenter{p.x, z, p.y, o};
  Curve<K> c1 = recenter(c);
  if (kz(c1.a3())) throw std::domain_error("tate form: 2-torsion point");
  Iso<K> shear{z, c1.a4() * inv(c1.a3()), z, o};
  return {shear(c1), recenter.then(shear)};
}

// Full normal form: additionally rescale so that a2 = a3 (= -b). For a
// point of exact order 5 this lands on T(b, c); requires a2 != 0.
template <class K>
TateForm<K> tate_normal(const Curve<K>& c, const ECPoint<K>& p) {
  TateForm<K> t1 = tate_t1(c, p);
  if (kz(t1.curve.a2())) throw std::domain_error("tate form: a2 = 0");
  K z = zero_like(p.x);
  Iso<K> rescale{z, z, z, t1.curve.a2() * inv(t1.curve.a3())};
  return {rescale(t1.curve), t1.iso.then(rescale)};
}

// Division polynomials as univariate expressions in x (odd index, and
// psi2^2, psi4/psi2), in terms of the b-invariants.
template <class K>
K psi2_sq(const Curve<K>& c, const K& x) {
  return ((c.kint(4) * x + c.b2()) * x + c.kint(2) * c.b4()) * x + c.b6();
}

template <class K>
K psi3(const Curve<K>& c, const K& x) {
  return (((c.kint(3) * x + c.b2()) * x + c.kint(3) * c.b4()) * x +
          c.kint(3) * c.b6()) *
             x +
         c.b8();
}

template <class K>
K psi4_over_psi2(const Curve<K>& c, const K& x) {
  K B2 = c.b2(), B4 = c.b4(), B6 = c.b6(), B8 = c.b8();
  return (((((c.kint(2) * x + B2) * x + c.kint(5) * B4) * x +
            c.kint(10) * B6) *
               x +
           c.kint(10) * B8) *
              x +
          (B2 * B8 - B4 * B6)) *
             x +
         (B4 * B8 - B6 * B6);
}

// psi5 = psi4 psi2^3 - psi3^3; vanishing at x(P) detects [5]P = O.
template <class K>
K psi5(const Curve<K>& c, const K& x) {
  K p2sq = psi2_sq(c, x);
  K p3 = psi3(c, x);
  return psi4_over_psi2(c, x) * p2sq * p2sq - p3 * p3 * p3;
}

}  // namespace qell
