#include "qell/level_maps.hpp"

#include <algorithm>

#include "doctest.h"
#include "qell/mf.hpp"
#include "qell/parse.hpp"
#include "qell/ratfunc.hpp"
#include "qell/tate.hpp"
#include "qell/velu.hpp"

using namespace qell;

namespace {

using CPoly = PolyT<CycQ>;

// (c3 z^3 + c2 z^2 + c1 z + c0) / 5.
CycQ cyc5(int c3, int c2, int c1, int c0) {
  CycQ r;
  r.c = {mpq_class(c0, 5), mpq_class(c1, 5), mpq_class(c2, 5),
         mpq_class(c3, 5)};
  for (auto& q : r.c) q.canonicalize();
  return r;
}

CPoly galois2(const CPoly& p) {
  CPoly r(p.ring);
  for (const auto& [e, c] : p.terms) r.add_term(e, c.conj(2));
  return r;
}

}  // namespace

TEST_CASE("adams operation scales each term by ell to the weight") {
  auto A = ring_A();
  Poly p = parse_poly(A, "a1^4 + 3*a2*a3 - a6");
  Poly q = psi_ell(p, 3);
  CHECK(q == parse_poly(A, "81*a1^4 + 729*a2*a3 - 729*a6"));
  auto B5 = ring_B5();
  Poly m = Poly::gen(B5, "u", -2);
  CHECK(psi_ell(m, 5) == mpq_class(1, 25) * m);
}

TEST_CASE("degree 3 projections match the stated tables") {
  const Level3& L = level3();
  auto B = L.B;
  CHECK(L.fstar.images[0] == parse_poly(B, "a1"));
  CHECK(L.fstar.images[1].is_zero());
  CHECK(L.fstar.images[2] == parse_poly(B, "a3"));
  CHECK(L.fstar.images[3].is_zero());
  CHECK(L.fstar.images[4].is_zero());
  CHECK(L.qstar.images[0] == parse_poly(B, "a1"));
  CHECK(L.qstar.images[1].is_zero());
  CHECK(L.qstar.images[2] == parse_poly(B, "3*a3"));
  CHECK(L.qstar.images[3] == parse_poly(B, "-6*a1*a3"));
  CHECK(L.qstar.images[4] == parse_poly(B, "-9*a3^2 - a1^3*a3"));
  CHECK(L.minus_one.images[0] == parse_poly(B, "-a1"));
  CHECK(L.minus_one.images[1] == parse_poly(B, "-a3"));

  // The two projections are degree 3 and 1 maps of modular forms.
  CHECK(L.fcurve.c4() == parse_poly(B, "a1^4 - 24*a1*a3"));
  CHECK(L.qcurve.c4() == parse_poly(B, "a1^4 + 216*a1*a3"));
  CHECK(L.fcurve.c6() == parse_poly(B, "-a1^6 + 36*a1^3*a3 - 216*a3^2"));
  CHECK(L.qcurve.c6() == parse_poly(B, "-a1^6 + 540*a1^3*a3 + 5832*a3^2"));
  CHECK(L.fcurve.disc() == parse_poly(B, "a1^3*a3^3 - 27*a3^4"));
  CHECK(L.qcurve.disc() ==
        parse_poly(B, "a1^9*a3 - 81*a1^6*a3^2 + 2187*a1^3*a3^3 "
                      "- 19683*a3^4"));

  // Same values through the generic Weierstrass expressions.
  for (const Poly& m : {Poly::gen(ring_MF1(), "c4"),
                        Poly::gen(ring_MF1(), "c6"),
                        Poly::gen(ring_MF1(), "Delta")}) {
    Poly x = sl2_in_A(m);
    CHECK(L.fstar(x) == eval_poly(m, {L.fcurve.c4(), L.fcurve.c6(),
                                      L.fcurve.disc()},
                                  Poly::zero(B), [&](const mpq_class& c) {
                                    return Poly::constant(B, c);
                                  }));
    CHECK(L.qstar(x) == eval_poly(m, {L.qcurve.c4(), L.qcurve.c6(),
                                      L.qcurve.disc()},
                                  Poly::zero(B), [&](const mpq_class& c) {
                                    return Poly::constant(B, c);
                                  }));
  }
}

TEST_CASE("degree 3 transfer operator") {
  const Level3& L = level3();
  auto B = L.B;
  Poly A2 = parse_poly(B, "a1^2"), B2 = parse_poly(B, "a1*a3"),
       C2 = parse_poly(B, "a3^2");
  CHECK(L.tstar(A2) == parse_poly(B, "-3*a1^2"));
  CHECK(L.tstar(B2) == parse_poly(B, "1/3*a1^4 - 9*a1*a3"));
  CHECK(L.tstar(C2) ==
        parse_poly(B, "-1/27*a1^6 + 2*a1^3*a3 - 27*a3^2"));
  // Multiplicative consistency across the relation A C = B^2.
  CHECK(L.tstar(A2) * L.tstar(C2) == L.tstar(B2) * L.tstar(B2));
  // The Eisenstein identity t(B) + B = c4 / 3 on the source curve.
  CHECK(L.tstar(B2) + B2 == mpq_class(1, 3) * L.fcurve.c4());
  CHECK_THROWS(L.tstar(Poly::gen(B, "a1")));

  for (long w = 0; w <= 12; w += 2) {
    for (const Poly& m : mf_sl2_basis(w)) {
      Poly x = sl2_in_A(m);
      CHECK(L.tstar(L.fstar(x)) == L.qstar(x));
      CHECK(L.tstar(L.qstar(x)) == L.fstar(psi_ell(x, 3)));
    }
    for (const Poly& m : mf_level3_basis(w))
      CHECK(L.tstar(L.tstar(m)) == psi_ell(m, 3));
  }
}

TEST_CASE("degree 5 projections match the stated tables") {
  const Level5& L = level5();
  auto B = L.B;
  CHECK(L.fstar.images[0] == parse_poly(B, "a1"));
  CHECK(L.fstar.images[1] == parse_poly(B, "a1*u - u^2"));
  CHECK(L.fstar.images[2] == parse_poly(B, "a1*u^2 - u^3"));
  CHECK(L.fstar.images[3].is_zero());
  CHECK(L.fstar.images[4].is_zero());
  CHECK(L.qstar.images[0] == parse_poly(B, "a1"));
  CHECK(L.qstar.images[1] == parse_poly(B, "-u^2 + a1*u"));
  CHECK(L.qstar.images[2] == parse_poly(B, "-u^3 + a1*u^2"));
  CHECK(L.qstar.images[3] ==
        parse_poly(B, "-10*u^4 + 30*a1*u^3 - 25*a1^2*u^2 + 5*a1^3*u"));
  CHECK(L.qstar.images[4] ==
        parse_poly(B, "-20*u^6 + 59*a1*u^5 - 70*a1^2*u^4 + 45*a1^3*u^3 "
                      "- 15*a1^4*u^2 + a1^5*u"));
  CHECK(L.two_star.images[0] == parse_poly(B, "a1 - 2*u"));
  CHECK(L.two_star.images[1] == parse_poly(B, "a1 - u"));

  // [2] generates a cyclic group of order four: [2][2] = [-1].
  for (const auto& g : {Poly::gen(B, "a1"), Poly::gen(B, "u")})
    CHECK(L.two_star(L.two_star(g)) == -g);

  CHECK(L.delta_au ==
        parse_poly(B, "-11*u^12 + 64*a1*u^11 - 154*a1^2*u^10 + 195*a1^3*u^9 "
                      "- 135*a1^4*u^8 + 46*a1^5*u^7 - 4*a1^6*u^6 - a1^7*u^5"));
  CHECK(L.delta_au == L.fcurve.disc());
}

TEST_CASE("invariants of the order 20 action on the degree 5 base") {
  const G5Ring& g = g5();
  const Level5& L = level5();
  auto B = g.B;
  auto G = g.G;
  CHECK(g.b2 == parse_poly(B, "2*u^2 - 2*a1*u + a1^2"));
  CHECK(weight(g.b2) == 2);
  CHECK(weight(g.b4) == 4);
  CHECK(weight(g.delta) == 4);
  for (const Poly* inv : {&g.b2, &g.b4, &g.delta})
    CHECK(L.two_star(*inv) == *inv);

  // The single relation of the invariant ring.
  CHECK(g.b4 * g.b4 == g.b2 * g.b2 * g.delta - 4 * g.delta * g.delta);
  CHECK(g.reduce(parse_poly(G, "b4^2")) ==
        parse_poly(G, "b2^2*delta - 4*delta^2"));
  CHECK(g.reduce(parse_poly(G, "b2*b4^3 + b4")) ==
        parse_poly(G, "b2^3*b4*delta - 4*b2*b4*delta^2 + b4"));

  // Round trips between abstract invariants and their expressions.
  Poly m = parse_poly(G, "b2^3*b4 - 7*delta^2");
  auto back = g.from_B(g.to_B(m));
  REQUIRE(back.has_value());
  CHECK(*back == m);
  CHECK(!g.from_B(Poly::gen(B, "a1")).has_value());

  // Modular form values of the two projections, in invariant coordinates.
  auto expect = [&](const Poly& val, const char* text) {
    auto w = g.from_B(val);
    REQUIRE(w.has_value());
    CHECK(*w == parse_poly(G, text));
  };
  expect(L.fcurve.c4(), "b2^2 - 12*b4 + 12*delta");
  expect(L.qcurve.c4(), "b2^2 + 228*b4 + 492*delta");
  expect(L.fcurve.c6(), "-b2^3 + 18*b2*b4 - 72*b2*delta");
  expect(L.qcurve.c6(), "-b2^3 + 522*b2*b4 + 10008*b2*delta");
  expect(L.delta_au, "b4*delta^2 - 11*delta^3");
}

TEST_CASE("degree 5 atkin-lehner operator") {
  const Level5& L = level5();
  const G5Ring& g = g5();
  auto B = L.B;
  CPoly ca1 = CPoly::gen(B, "a1"), cu = CPoly::gen(B, "u");
  CHECK(L.tstar_cyc.images[0] ==
        cyc5(-8, -6, -14, -7) * ca1 + cyc5(14, -2, 12, 6) * cu);
  CHECK(L.tstar_cyc.images[1] ==
        cyc5(-1, -7, -8, -4) * ca1 + cyc5(8, 6, 14, 7) * cu);

  // Applied twice it is [-1] followed by weight scaling by 5, so it
  // squares to the Adams operation on everything of even weight.
  CHECK(L.tstar(L.tstar(ca1)) == CycQ(-5) * ca1);
  CHECK(L.tstar(L.tstar(cu)) == CycQ(-5) * cu);

  auto tstar_inv = [&](const Poly& inv) {
    auto w = g.from_B(L.tstar(inv));
    REQUIRE(w.has_value());
    return *w;
  };
  CHECK(tstar_inv(g.b2) == parse_poly(g.G, "-5*b2"));
  CHECK(tstar_inv(g.b4) ==
        parse_poly(g.G, "1/5*(11*b2^2 - 117*b4 - 88*delta)"));
  CHECK(tstar_inv(g.delta) ==
        parse_poly(g.G, "1/5*(b2^2 - 22*b4 + 117*delta)"));

  for (long w = 0; w <= 12; w += 2) {
    for (const Poly& m : mf_sl2_basis(w)) {
      Poly x = sl2_in_A(m);
      CHECK(L.tstar(L.fstar(x)) == L.qstar(x));
      CHECK(L.tstar(L.qstar(x)) == L.fstar(psi_ell(x, 5)));
    }
    for (const Poly& m : mf_level5_basis(w)) {
      Poly v = g.to_B(m);
      CHECK(L.tstar(L.tstar(v)) == psi_ell(v, 5));
    }
  }
}

TEST_CASE("kernel of the dual degree 5 isogeny on the quotient curve") {
  const Level5& L = level5();
  auto B = L.B;
  Poly a1 = Poly::gen(B, "a1"), u = Poly::gen(B, "u");
  Curve<Poly> q = velu5(curve_T1_order5(a1, u));
  Curve<CPoly> qc{{to_cyc(q.a[0]), to_cyc(q.a[1]), to_cyc(q.a[2]),
                   to_cyc(q.a[3]), to_cyc(q.a[4])}};

  auto term = [&](CycQ c, int i, int j) {
    return CPoly::constant(B, c) * CPoly::gen(B, "a1", i) *
           CPoly::gen(B, "u", j);
  };
  CPoly x0 = term(cyc5(1, 1, 0, -2), 2, 0) + term(cyc5(9, 9, 0, 7), 1, 1) +
             term(cyc5(-11, -11, 0, -8), 0, 2);
  CPoly x1 = term(cyc5(-1, -1, 0, -3), 2, 0) + term(cyc5(-9, -9, 0, -2), 1, 1) +
             term(cyc5(11, 11, 0, 3), 0, 2);
  CPoly y00 = term(cyc5(0, 1, 2, 2), 3, 0) + term(cyc5(1, 7, 17, 5), 2, 1) +
              term(cyc5(9, -29, -31, -14), 1, 2) +
              term(cyc5(-11, 22, 11, 8), 0, 3);
  CPoly y01 = term(cyc5(-1, -2, -2, 0), 3, 0) +
              term(cyc5(-10, -16, -17, -12), 2, 1) +
              term(cyc5(2, 40, 31, 17), 1, 2) +
              term(cyc5(11, -22, -11, -3), 0, 3);
  CPoly y10 = term(cyc5(2, 0, 1, 2), 3, 0) + term(cyc5(16, -1, 6, 4), 2, 1) +
              term(cyc5(-40, -9, -38, -23), 1, 2) +
              term(cyc5(22, 11, 33, 19), 0, 3);
  CPoly y11 = term(cyc5(-1, 1, -1, 1), 3, 0) +
              term(cyc5(-7, 10, -6, -2), 2, 1) +
              term(cyc5(29, -2, 38, 15), 1, 2) +
              term(cyc5(-22, -11, -33, -14), 0, 3);

  // Both x-coordinates satisfy the kernel polynomial of the dual isogeny.
  CPoly c1 = to_cyc(parse_poly(B, "a1^2 - a1*u + u^2"));
  CPoly c0 = to_cyc(parse_poly(
      B, "1/5*(a1^4 - 7*a1^3*u - 11*a1^2*u^2 + 47*a1*u^3 - 29*u^4)"));
  CHECK(kz(x0 * x0 + c1 * x0 + c0));
  CHECK(kz(x1 * x1 + c1 * x1 + c0));
  CHECK(x0 != x1);

  ECPoint<CPoly> p00{x0, y00, false}, p01{x0, y01, false},
      p10{x1, y10, false}, p11{x1, y11, false};
  for (const auto& p : {p00, p01, p10, p11}) CHECK(on_curve(qc, p));
  CHECK(ec_neg(qc, p00) == p01);
  CHECK(ec_neg(qc, p10) == p11);

  // The Galois twist z -> z^2 permutes the kernel.
  CHECK(galois2(x0) == x1);
  CHECK(galois2(x1) == x0);
  CPoly gy = galois2(y00);
  CHECK((gy == y10 || gy == y11));

  // Exact order 5 in the fraction field.
  using CF = RatFuncT<CycQ>;
  Curve<CF> qf{{CF(qc.a[0]), CF(qc.a[1]), CF(qc.a[2]), CF(qc.a[3]),
                CF(qc.a[4])}};
  ECPoint<CF> P{CF(x0), CF(y00), false};
  auto P2 = ec_mul(qf, 2, P);
  CHECK(!P2.inf);
  CHECK(P2.x == CF(x1));
  CHECK(ec_mul(qf, 4, P) == ec_neg(qf, P));
  CHECK(ec_mul(qf, 5, P).inf);
}

TEST_CASE("modular form bases have the expected sizes") {
  CHECK(mf_sl2_basis(0).size() == 1);
  CHECK(mf_sl2_basis(2).empty());
  CHECK(mf_sl2_basis(4).size() == 1);
  CHECK(mf_sl2_basis(10).size() == 1);
  CHECK(mf_sl2_basis(12).size() == 2);
  CHECK(mf_level3_basis(2).size() == 1);   // a1^2
  CHECK(mf_level3_basis(4).size() == 2);   // a1^4, a1 a3
  CHECK(mf_level3_basis(6).size() == 3);   // a1^6, a1^3 a3, a3^2
  CHECK(mf_level5_basis(2).size() == 1);
  CHECK(mf_level5_basis(4).size() == 3);
  CHECK(mf_level5_basis(8).size() == 5);
  for (long w = 0; w <= 12; w += 2) {
    for (const Poly& m : mf_sl2_basis(w)) CHECK(weight(sl2_in_A(m)) == w);
    for (const Poly& m : mf_level3_basis(w)) CHECK(weight(m) == w);
    for (const Poly& m : mf_level5_basis(w)) CHECK(weight(m) == w);
  }
}
