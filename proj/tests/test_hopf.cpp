#include "qell/hopf.hpp"

#include "doctest.h"
#include "qell/ec.hpp"
#include "qell/parse.hpp"
#include "util.hpp"

using namespace qell;

TEST_CASE("right unit carries the printed structure maps") {
  const Hopf& H = hopf();
  auto G = H.Gamma;
  CHECK(H.eta_R.images[0] == parse_poly(G, "a1 + 2*s"));
  CHECK(H.eta_R.images[1] == parse_poly(G, "a2 + 3*r - s^2 - a1*s"));
  CHECK(H.eta_R.images[2] == parse_poly(G, "a3 + 2*t + a1*r"));
  CHECK(H.eta_R.images[3] ==
        parse_poly(G, "a4 + 3*r^2 + 2*r*a2 - 2*s*t - a1*t - a1*r*s - a3*s"));
  CHECK(H.eta_R.images[4] ==
        parse_poly(G, "a6 + r^3 + a2*r^2 + a4*r - t^2 - a1*r*t - a3*t"));
  for (size_t i = 0; i < H.A->gens.size(); ++i)
    CHECK(H.eta_L.images[i] == Poly::gen(G, H.A->gens[i].name));

  CHECK(kz(H.d0(Poly::constant(H.A, 7))));
  CHECK(H.d0(Poly::gen(H.A, "a1")) == parse_poly(G, "2*s"));
  // d(a2) = r + s^2 + (multiples of 2 and a1)
  Poly da2 = reduce_mod2k(H.d0(Poly::gen(H.A, "a2")), 1);
  CHECK(slice(da2, A1, 0) == parse_poly(G, "r + s^2"));
}

TEST_CASE("right unit agrees with the transformation at random points") {
  const Hopf& H = hopf();
  auto g = testutil::rng();
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<mpq_class> vals;
    for (int i = 0; i < 8; ++i) vals.push_back(testutil::rand_q(g));
    Curve<mpq_class> E{{vals[0], vals[1], vals[2], vals[3], vals[4]}};
    Iso<mpq_class> phi{vals[5], vals[6], vals[7], 1};
    Curve<mpq_class> E2 = phi(E);
    for (int i = 0; i < 5; ++i)
      CHECK(eval_poly(H.eta_R.images[i], vals, mpq_class(0)) == E2.a[i]);
  }
}

TEST_CASE("counit and comultiplication satisfy the algebroid axioms") {
  const Hopf& H = hopf();
  for (const auto& gen : H.A->gens) {
    Poly a = Poly::gen(H.A, gen.name);
    CHECK(H.counit(H.eta_L(a)) == a);
    CHECK(H.counit(H.eta_R(a)) == a);
  }

  // Counit neutrality on both tensor factors.
  RingMap eps_left{H.GammaGamma, H.Gamma, {}, {}};
  RingMap eps_right{H.GammaGamma, H.Gamma, {}, {}};
  for (const auto& gen : H.GammaGamma->gens) {
    std::string n = gen.name;
    bool primed = n.back() == '\'';
    std::string base = primed ? n.substr(0, n.size() - 1) : n;
    bool rst = base == "r" || base == "s" || base == "t";
    eps_left.images.push_back(rst && !primed ? Poly::zero(H.Gamma)
                                             : Poly::gen(H.Gamma, base));
    eps_right.images.push_back(rst && primed ? Poly::zero(H.Gamma)
                                             : Poly::gen(H.Gamma, base));
  }
  for (const auto& gen : H.Gamma->gens) {
    Poly x = Poly::gen(H.Gamma, gen.name);
    CHECK(eps_left(H.psi(x)) == x);
    CHECK(eps_right(H.psi(x)) == x);
  }

  // Unit coactions and the first cobar identity.
  for (const auto& gen : H.A->gens) {
    Poly a = Poly::gen(H.A, gen.name);
    CHECK(H.psi(H.eta_L(a)) == H.incl_L(H.eta_L(a)));
    CHECK(H.psi(H.eta_R(a)) == H.incl_R(H.eta_R(a)));
    CHECK(kz(H.d1(H.d0(a))));
  }
}

TEST_CASE("degree zero differential obeys the two sided leibniz rule") {
  const Hopf& H = hopf();
  auto g = testutil::rng(7);
  auto rand_a = [&] {
    Poly p = Poly::zero(H.A);
    for (int k = 0; k < 4; ++k) {
      Exp e = exp_zero();
      for (size_t i = 0; i < H.A->gens.size(); ++i)
        e[i] = static_cast<int16_t>(testutil::rand_int(g, 0, 2));
      p.add_term(e, testutil::rand_q(g));
    }
    return p;
  };
  for (int rep = 0; rep < 25; ++rep) {
    Poly x = rand_a(), y = rand_a();
    CHECK(H.d0(x * y) == H.eta_L(x) * H.d0(y) + H.d0(x) * H.eta_R(y));
  }
}

TEST_CASE("order five morphism ring relations") {
  const Hopf& H = hopf();
  auto cons = tate_constraints();
  auto rels = lambda1_relations();
  CHECK(rels[0] == cons[0]);
  CHECK(rels[1] == -cons[1]);
  // The identity coordinate change satisfies every relation.
  for (const auto& rel : rels) CHECK(kz(H.counit(rel)));

  auto rep = lambda1_relations_check(0xC0FFEE, 500);
  CHECK(rep.first_is_a4);
  CHECK(rep.second_is_a6);
  CHECK(rep.samples == 500);
  CHECK(rep.failures == 0);
}
