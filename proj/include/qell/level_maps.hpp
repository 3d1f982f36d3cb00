#pragma once

#include <optional>

#include "qell/cyc.hpp"
#include "qell/ec.hpp"
#include "qell/ringmap.hpp"

namespace qell {

// The Adams operation: each weight-w term is scaled by ell^w.
Poly psi_ell(const Poly& p, long ell);

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over A itself.
Curve<Poly> universal_curve();

// Coefficient embeddings between rational and cyclotomic polynomials.
PolyT<CycQ> to_cyc(const Poly& p);
Poly to_rational(const PolyT<CycQ>& p);  // throws if any zeta survives

// Forgetful and quotient projections for the 3-torsion tower, with the
// Atkin-Lehner involution on the even-degree invariant subring.
struct Level3 {
  RingPtr A, B;
  RingMap fstar, qstar;  // A -> B1(3)
  RingMap minus_one;     // the F3-action on B1(3)
  Curve<Poly> fcurve, qcurve;

  Poly tstar(const Poly& p) const;  // defined on i + j even monomials
};
const Level3& level3();

// Same for the 5-torsion tower; t* needs a fifth root of unity.
struct Level5 {
  RingPtr A, B;
  RingMap fstar, qstar;      // A -> B1(5)
  RingMap two_star;          // the generator [2] of the F5-action
  RingMapT<CycQ> tstar_cyc;  // B1(5) -> B1(5) over Q(zeta)
  Curve<Poly> fcurve, qcurve;
  Poly delta_au;  // the (a1, u) discriminant

  PolyT<CycQ> tstar(const PolyT<CycQ>& p) const { return tstar_cyc(p); }
  Poly tstar(const Poly& p) const { return to_rational(tstar_cyc(to_cyc(p))); }
};
const Level5& level5();

// Invariants of the F5-action: b2, b4, delta with b4^2 = b2^2 delta
// - 4 delta^2.
struct G5Ring {
  RingPtr G;  // abstract b2, b4, delta
  RingPtr B;  // ring_B5
  Poly b2, b4, delta;  // invariant polynomials in B1(5)

  Poly reduce(Poly p) const;      // normal form with b4-exponent <= 1
  Poly to_B(const Poly& g) const;
  std::optional<Poly> from_B(const Poly& p) const;  // homogeneous input
};
const G5Ring& g5();

}  // namespace qell
