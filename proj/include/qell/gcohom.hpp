#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qell/poly.hpp"
#include "qell/snf.hpp"

namespace qell {

// Cohomology of the cyclic group F5* = <sigma> (sigma the reduction of 2,
// so sigma^4 = 1) acting on Z[1/5][x,y] by sigma x = y, sigma y = -x, and
// of F3* = {+-1} acting on Z[1/3][a1,a3] by negating both generators.

// sigma^power applied to a polynomial in the x,y ring.
Poly sigma_r5(const Poly& p, long power = 1);

// Summand kinds of a graded piece over the group ring: R is the trivial
// rank-one module, Rneg its sign twist, Tau the rank-two swap module
// sigma (m,n) = (n,m), Psi the rank-two cycle module sigma (m,n) = (n,-m).
enum class SummandKind { R, Rneg, Tau, Psi };

struct GradedSummand {
  SummandKind kind;
  int a = 0, b = 0;  // representative monomial x^a y^b, a >= b
};

// Splits the degree-t piece of Z[1/5][x,y] into summands: monomial pairs
// {x^a y^b, x^b y^a} with a > b give Tau (a+b even) or Psi (a+b odd), and
// the middle monomial gives R (a even) or Rneg (a odd).
std::vector<GradedSummand> decompose_action(long t);

// H^s of one summand: R[beta]/4beta, its shift for Rneg and Psi, and
// R[beta]/2beta for Tau, with beta in cohomological degree 2.
AbGroup summand_cohomology(SummandKind k, long s);

// H^s(C4; degree-t piece), assembled summand by summand.
AbGroup cohomology(long s, long t);

// The same group computed from the two-periodic resolution of the whole
// degree piece (alternating sigma-1 and norm maps) via Smith normal form.
AbGroup cohomology_resolution(long s, long t);

// Normalized bar cochain of degree s valued in the degree-t piece: one
// polynomial per s-tuple over {sigma, sigma^2, sigma^3}, zero implied
// whenever an argument is the identity.
struct Cochain {
  int s = 0;
  long t = 0;
  std::vector<Poly> vals;  // 3^s entries

  // gs holds exponents in 1..3; gs.size() must equal s.
  Poly& at(const std::vector<int>& gs);
  const Poly& at(const std::vector<int>& gs) const;

  bool is_zero() const;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.s == b.s && a.vals == b.vals;
  }
};

Cochain zero_cochain(int s, long t);
Cochain invariant_cochain(const Poly& p);  // degree-zero cochain

// (d phi)(g1,..,g_{s+1}) = g1 phi(g2,..) + sum (-1)^i phi(.., g_i g_{i+1}, ..)
//                        + (-1)^{s+1} phi(g1,..,g_s).
Cochain coboundary(const Cochain& phi);

// (phi cup psi)(g1,..,g_{p+q}) = (g1..gq) phi(g_{q+1},..) * psi(g1,..,gq),
// which for two 1-cochains is (g1 phi(g2)) psi(g1).
Cochain cup(const Cochain& phi, const Cochain& psi);

Cochain add(const Cochain& a, const Cochain& b);
Cochain sub(const Cochain& a, const Cochain& b);
Cochain scale(const mpq_class& c, const Cochain& a);
Cochain poly_mul(const Poly& p, const Cochain& a);  // p must be invariant

// Fixed polynomial invariants and the named cochain representatives.
Poly b2_poly();     // x^2 + y^2
Poly b4_poly();     // x^3 y - x y^3
Poly delta_poly();  // x^2 y^2
Cochain eta_cochain();    // x, x+y, y
Cochain nu_cochain();     // xy, 0, xy
Cochain gamma_cochain();  // x^3, x^3+y^3, y^3
Cochain beta_cochain(const Poly& m);  // (sigma^i,sigma^j) -> floor((i+j)/4) m
Cochain xi_cochain();                 // beta with value delta

// Degree-one comparison from the periodic complex: a norm-killed m goes to
// the cocycle sigma^i -> (1 + sigma + .. + sigma^{i-1}) m.
Cochain comparison_1(const Poly& m);

// Solves d phi = target over Z[1/5]; empty when target is not a coboundary.
std::optional<Cochain> coboundary_witness(const Cochain& target);

struct RelationReport {
  std::string name;
  int s = 0;   // cochain degree of both sides
  long t = 0;  // internal degree
  bool lhs_cocycle = false;
  bool rhs_cocycle = false;
  bool holds = false;
  bool ok() const { return lhs_cocycle && rhs_cocycle && holds; }
};

// The fifteen multiplicative relations presented at cochain level: each
// side is a cocycle and the difference bounds over Z[1/5].
std::vector<RelationReport> verify_e2_relations();

// A basis class of the E2 chart: order_exp 0 marks a free summand, e > 0 a
// Z/2^e summand.
struct E2Class {
  std::string name;
  long u = 0;  // t - s
  long s = 0;
  int order_exp = 0;
};

// Monomial basis b2^a b4^{<=1} delta^c, eta^e (..), gamma eta^e delta^c,
// xi^h eta^e delta^c, xi^h gamma eta^e delta^c, nu xi^h delta^c of the
// E2-term, with delta exponents >= -h so every class is polynomial.
std::vector<E2Class> e2_classes(long u_max, long s_max);

struct E2Entry {
  long u = 0, s = 0;
  AbGroup families;    // tallied from e2_classes
  AbGroup summands;    // from cohomology()
  AbGroup resolution;  // from cohomology_resolution()
  bool consistent() const {
    return families == summands && summands == resolution;
  }
};

// Every bidegree with t-s <= u_max and s <= s_max, compared three ways.
std::vector<E2Entry> e2_chart(long u_max, long s_max);

// Sign action of F3* on the weight-w piece of Z[1/3][a1,a3] (topological
// degree 2w): summand formulas and the periodic resolution.
AbGroup cohomology_level3(long s, long w);
AbGroup cohomology_level3_resolution(long s, long w);

}  // namespace qell
