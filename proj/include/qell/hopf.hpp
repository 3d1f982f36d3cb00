#pragma once

#include <array>
#include <cstdint>

#include "qell/ringmap.hpp"

namespace qell {

// The Weierstrass curve Hopf algebroid: objects are curves in long form,
// morphisms are the coordinate changes with lambda = 1. The two-fold
// morphism ring is flattened as A[r, s, t, r', s', t'].
struct Hopf {
  RingPtr A, Gamma, GammaGamma;
  RingMap eta_L, eta_R;  // A -> Gamma
  RingMap counit;        // Gamma -> A, kills r, s, t
  RingMap psi;           // Gamma -> GammaGamma, comultiplication
  RingMap incl_L;        // Gamma -> GammaGamma, x (x) 1
  RingMap incl_R;        // Gamma -> GammaGamma, 1 (x) x

  // Cobar differentials in degrees 0 and 1.
  Poly d0(const Poly& x) const { return eta_R(x) - eta_L(x); }
  Poly d1(const Poly& g) const { return incl_L(g) - psi(g) + incl_R(g); }
};
const Hopf& hopf();

// a4 and a6 of T1(a1, a2, a3) transformed by (r, s, t, 1), in Gamma.
// Vanishing of both is the condition that the Tate shape is preserved.
std::array<Poly, 2> tate_constraints();

// The three defining relations of the order-5 morphism ring, each as
// lhs - rhs of the printed identity, in Gamma.
std::array<Poly, 3> lambda1_relations();

struct Lambda1Report {
  bool first_is_a4 = false;   // relation 1 equals the transformed a4
  bool second_is_a6 = false;  // relation 2 equals minus the transformed a6
  long samples = 0;
  long failures = 0;  // solutions of the constraints violating a relation

  bool ok() const { return first_is_a4 && second_is_a6 && failures == 0; }
};

// Verifies the relations against the transformation constraints: the first
// two symbolically, the third on random coordinate changes between curves
// with a marked point of order 5 over prime fields (p not 2 or 5).
Lambda1Report lambda1_relations_check(uint64_t seed, long samples);

}  // namespace qell
