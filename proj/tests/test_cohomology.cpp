#include <stdexcept>

#include "doctest.h"
#include "qell/gcohom.hpp"
#include "qell/mf.hpp"
#include "qell/parse.hpp"

using namespace qell;

namespace {

Poly rp(const std::string& s) { return parse_poly(ring_R5(), s); }

Cochain one_cochain(const Poly& v1, const Poly& v2, const Poly& v3) {
  Cochain c = zero_cochain(1, 0);
  c.t = weight(v1.is_zero() ? (v2.is_zero() ? v3 : v2) : v1);
  c.at({1}) = v1;
  c.at({2}) = v2;
  c.at({3}) = v3;
  return c;
}

}  // namespace

TEST_CASE("degree pieces split into the four module kinds") {
  // sigma generates the order-four action x -> y -> -x.
  Poly x = rp("x"), y = rp("y");
  CHECK(sigma_r5(x) == y);
  CHECK(sigma_r5(y) == -x);
  Poly p = rp("3*x^4 - 2*x*y^3 + 7*y^2*x^2");
  CHECK(sigma_r5(p, 4) == p);
  CHECK(sigma_r5(sigma_r5(p, 3)) == p);
  CHECK(sigma_r5(b2_poly()) == b2_poly());
  CHECK(sigma_r5(b4_poly()) == b4_poly());
  CHECK(sigma_r5(delta_poly()) == delta_poly());

  auto d8 = decompose_action(8);
  REQUIRE(d8.size() == 3);
  CHECK(d8[0].kind == SummandKind::Tau);
  CHECK(d8[0].a == 4);
  CHECK(d8[0].b == 0);
  CHECK(d8[1].kind == SummandKind::Tau);
  CHECK(d8[1].a == 3);
  CHECK(d8[1].b == 1);
  CHECK(d8[2].kind == SummandKind::R);
  CHECK(d8[2].a == 2);

  auto d2 = decompose_action(2);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].kind == SummandKind::Psi);
  CHECK(d2[0].a == 1);
  CHECK(d2[0].b == 0);

  auto d4 = decompose_action(4);
  REQUIRE(d4.size() == 2);
  CHECK(d4[0].kind == SummandKind::Tau);
  CHECK(d4[1].kind == SummandKind::Rneg);

  CHECK_THROWS_AS(decompose_action(7), std::domain_error);
}

TEST_CASE("summand cohomology has the four periodic answers") {
  for (long s = 2; s <= 24; s += 2) {
    CHECK(summand_cohomology(SummandKind::R, s) == AbGroup{0, {2}});
    CHECK(summand_cohomology(SummandKind::Tau, s) == AbGroup{0, {1}});
    CHECK(summand_cohomology(SummandKind::Rneg, s) == AbGroup{});
    CHECK(summand_cohomology(SummandKind::Psi, s) == AbGroup{});
  }
  for (long s = 1; s <= 24; s += 2) {
    CHECK(summand_cohomology(SummandKind::R, s) == AbGroup{});
    CHECK(summand_cohomology(SummandKind::Tau, s) == AbGroup{});
    CHECK(summand_cohomology(SummandKind::Rneg, s) == AbGroup{0, {1}});
    CHECK(summand_cohomology(SummandKind::Psi, s) == AbGroup{0, {1}});
  }
  CHECK(summand_cohomology(SummandKind::R, 0) == AbGroup{1, {}});
  CHECK(summand_cohomology(SummandKind::Tau, 0) == AbGroup{1, {}});
  CHECK(summand_cohomology(SummandKind::Rneg, 0) == AbGroup{});
  CHECK(summand_cohomology(SummandKind::Psi, 0) == AbGroup{});

  // Isolated kinds against the resolution: degree 0 is a single R, degree
  // 2 a single Psi, degree 4 adds Tau and Rneg.
  for (long s = 0; s <= 24; ++s) {
    CHECK(cohomology_resolution(s, 0) == summand_cohomology(SummandKind::R, s));
    CHECK(cohomology_resolution(s, 2) ==
          summand_cohomology(SummandKind::Psi, s));
    CHECK(cohomology_resolution(s, 4) == cohomology(s, 4));
  }
}

TEST_CASE("whole degree pieces match the resolution in a wide range") {
  for (long t = 0; t <= 48; t += 2)
    for (long s = 0; s <= 6; ++s) CHECK(cohomology(s, t) == cohomology_resolution(s, t));
}

TEST_CASE("named cochains are cocycles with the expected orders") {
  Cochain eta = eta_cochain(), nu = nu_cochain(), gam = gamma_cochain();
  Cochain xi = xi_cochain();

  CHECK(coboundary(eta).is_zero());
  CHECK(coboundary(nu).is_zero());
  CHECK(coboundary(gam).is_zero());
  CHECK(coboundary(xi).is_zero());
  CHECK(coboundary(beta_cochain(b2_poly())).is_zero());
  CHECK_THROWS_AS(beta_cochain(rp("x")), std::invalid_argument);

  // The tables are the degree-one comparison images of x, xy, x^3.
  CHECK(comparison_1(rp("x")) == eta);
  CHECK(comparison_1(rp("x*y")) == nu);
  CHECK(comparison_1(rp("x^3")) == gam);

  // Anchors in the chart.
  CHECK(cohomology(2, 0) == AbGroup{0, {2}});   // beta generates Z/4
  CHECK(cohomology(1, 2) == AbGroup{0, {1}});   // eta
  CHECK(cohomology(0, 4) == AbGroup{1, {}});    // b2
  CHECK(cohomology(2, 4) == AbGroup{0, {1}});   // eta^2

  // Nontrivial classes have no bounding cochain over Z[1/5].
  CHECK(!coboundary_witness(eta).has_value());
  CHECK(!coboundary_witness(nu).has_value());
  CHECK(!coboundary_witness(gam).has_value());
  CHECK(!coboundary_witness(xi).has_value());
  CHECK(!coboundary_witness(scale(2, xi)).has_value());  // order four
  CHECK(!coboundary_witness(cup(eta, eta)).has_value());

  // Twice eta bounds, with the explicit invariant-free witness.
  Cochain w = invariant_cochain(rp("-x - y"));
  CHECK(coboundary(w) == scale(2, eta));
  auto found = coboundary_witness(scale(2, eta));
  REQUIRE(found.has_value());
  CHECK(coboundary(*found) == scale(2, eta));
  auto found4 = coboundary_witness(scale(4, xi));
  REQUIRE(found4.has_value());
  CHECK(coboundary(*found4) == scale(4, xi));
}

TEST_CASE("cup products follow the printed conventions") {
  Cochain eta = eta_cochain(), gam = gamma_cochain(), nu = nu_cochain();

  // (phi cup psi)(g1, g2) = (g1 phi(g2)) psi(g1) for one-cochains.
  for (int g1 = 1; g1 <= 3; ++g1)
    for (int g2 = 1; g2 <= 3; ++g2)
      CHECK(cup(eta, gam).at({g1, g2}) ==
            sigma_r5(eta.at({g2}), g1) * gam.at({g1}));

  // Bilinearity against zero and strict associativity.
  CHECK(cup(zero_cochain(1, 2), gam).is_zero());
  CHECK(cup(cup(eta, nu), gam) == cup(eta, cup(nu, gam)));
  CHECK(cup(cup(gam, gam), eta) == cup(gam, cup(gam, eta)));
  CHECK(cup(xi_cochain(), cup(eta, eta)) == cup(cup(xi_cochain(), eta), eta));

  // Coboundary is a derivation for this pairing: with p = deg(second),
  // d(a cup b) = a cup db + (-1)^p (da) cup b on arbitrary cochains.
  Cochain a = one_cochain(rp("x^2"), rp("x*y - y^2"), rp("3*y^2"));
  Cochain b = one_cochain(rp("y"), rp("0"), rp("x - 4*y"));
  b.t = 2;
  Cochain lhs = coboundary(cup(a, b));
  Cochain rhs = add(cup(a, coboundary(b)),
                    scale(-1, cup(coboundary(a), b)));
  CHECK(lhs == rhs);
  Cochain c0 = invariant_cochain(rp("x + y"));
  CHECK(coboundary(cup(a, c0)) ==
        add(cup(a, coboundary(c0)), cup(coboundary(a), c0)));
}

TEST_CASE("bounding tables for the degree sixteen relation") {
  // eta gamma + beta (b4 + b2^2 - 2 delta) entry by entry.
  Poly m = b4_poly() + b2_poly() * b2_poly() - mpq_class(2) * delta_poly();
  Cochain T = add(cup(eta_cochain(), gamma_cochain()), beta_cochain(m));

  CHECK(T.at({1, 1}) == rp("x^3*y"));
  CHECK(T.at({2, 1}) == rp("-x^4 - x*y^3"));
  CHECK(T.at({3, 1}) == rp("x^4 + x^3*y - x*y^3"));
  CHECK(T.at({1, 2}) == rp("-x^4 + x^3*y"));
  CHECK(T.at({2, 2}) == rp("-2*x*y^3"));
  CHECK(T.at({3, 2}) == rp("x^4 + x^3*y"));
  CHECK(T.at({1, 3}) == rp("x^3*y - x*y^3 + y^4"));
  CHECK(T.at({2, 3}) == rp("x^4 - x*y^3"));
  CHECK(T.at({3, 3}) == rp("x^4 + x^3*y + y^4"));

  Cochain phi = one_cochain(rp("-x*y^3"), rp("-x*y^3"), rp("x^4 - x*y^3"));
  CHECK(coboundary(phi) == T);
}

TEST_CASE("the fifteen presented relations hold at cochain level") {
  auto reports = verify_e2_relations();
  REQUIRE(reports.size() == 15);
  for (const auto& r : reports) {
    CAPTURE(r.name);
    CHECK(r.lhs_cocycle);
    CHECK(r.rhs_cocycle);
    CHECK(r.holds);
  }
  CHECK(reports[0].name == "b4^2 = b2^2 delta - 4 delta^2");
  CHECK(reports[11].name == "b4 xi = b2^2 xi + 2 delta xi + delta eta gamma");
  CHECK(reports[11].s == 2);
  CHECK(reports[11].t == 16);
}

TEST_CASE("additive chart agrees three ways through the checked range") {
  auto chart = e2_chart(48, 4);
  CHECK(chart.size() > 100);
  for (const auto& e : chart) {
    CAPTURE(e.u);
    CAPTURE(e.s);
    CHECK(e.consistent());
  }

  // Spot bidegrees, including a negative Adams column.
  auto at = [&](long u, long s) -> const E2Entry& {
    for (const auto& e : chart)
      if (e.u == u && e.s == s) return e;
    throw std::runtime_error("bidegree missing from chart");
  };
  CHECK(at(4, 0).families == AbGroup{1, {}});
  CHECK(at(8, 0).families == AbGroup{3, {}});
  CHECK(at(-2, 2).families == AbGroup{0, {2}});
  CHECK(at(2, 2).families == AbGroup{0, {1}});
  CHECK(at(6, 2).families == AbGroup{0, {1, 1, 2}});
  CHECK(at(3, 1).families == AbGroup{0, {1}});
  CHECK(at(11, 3).families == AbGroup{0, {1, 1, 1, 1}});

  // The monomial listing spells out negative delta powers.
  bool saw_beta = false;
  for (const auto& cls : e2_classes(8, 4))
    if (cls.name == "xi delta^-1" && cls.u == -2 && cls.s == 2 &&
        cls.order_exp == 2)
      saw_beta = true;
  CHECK(saw_beta);
}

TEST_CASE("sign action for the level three tower") {
  for (long w = 0; w <= 16; ++w)
    for (long s = 0; s <= 8; ++s)
      CHECK(cohomology_level3(s, w) == cohomology_level3_resolution(s, w));

  // Invariants are the level three forms of even total degree.
  for (long w = 0; w <= 12; ++w)
    CHECK(cohomology_level3(0, w).free_rank ==
          long(mf_level3_basis(w).size()));

  CHECK(cohomology_level3(1, 1) == AbGroup{0, {1}});  // a1 is negated
  CHECK(cohomology_level3(2, 2) == AbGroup{0, {1}});  // a1^2 survives
}
