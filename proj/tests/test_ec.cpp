#include "qell/ec.hpp"

#include <vector>

#include "doctest.h"
#include "qell/fp.hpp"
#include "qell/poly.hpp"
#include "qell/ratfunc.hpp"
#include "qell/ring.hpp"
#include "qell/tate.hpp"
#include "util.hpp"

using namespace qell;
using testutil::rand_int;
using testutil::rand_q;

namespace {

Curve<mpq_class> rand_curve(std::mt19937_64& g) {
  for (;;) {
    Curve<mpq_class> c{{rand_q(g), rand_q(g), rand_q(g), rand_q(g), rand_q(g)}};
    if (c.disc() != 0) return c;
  }
}

Iso<mpq_class> rand_iso(std::mt19937_64& g) {
  return {rand_q(g), rand_q(g), rand_q(g), rand_q(g, true)};
}

}  // namespace

TEST_CASE("b-invariant identities") {
  auto g = testutil::rng(11);
  for (int i = 0; i < 25; ++i) {
    auto c = rand_curve(g);
    CHECK(c.b2() * c.b6() - c.b4() * c.b4() == 4 * c.b8());
    CHECK(1728 * c.disc() == c.c4() * c.c4() * c.c4() - c.c6() * c.c6());
  }
}

TEST_CASE("coordinate changes scale the invariants") {
  auto g = testutil::rng(12);
  for (int i = 0; i < 25; ++i) {
    auto c = rand_curve(g);
    auto phi = rand_iso(g);
    auto c2 = phi(c);
    mpq_class l = phi.lam, l2 = l * l, l4 = l2 * l2;
    CHECK(c2.c4() == l4 * c.c4());
    CHECK(c2.c6() == l4 * l2 * c.c6());
    CHECK(c2.disc() == l4 * l4 * l4 * c.disc());
  }
}

TEST_CASE("composition and inversion of coordinate changes") {
  auto g = testutil::rng(13);
  for (int i = 0; i < 25; ++i) {
    auto c = rand_curve(g);
    auto phi = rand_iso(g);
    auto psi = rand_iso(g);
    CHECK(psi(phi(c)) == phi.then(psi)(c));
    CHECK(phi.then(phi.inverse()).is_identity());
    CHECK(phi.inverse().then(phi).is_identity());
    CHECK(phi.inverse()(phi(c)) == c);
  }
}

TEST_CASE("group law over a prime field") {
  const uint64_t p = 61;
  Curve<Fp64> c{{Fp64(1, p), Fp64(2, p), Fp64(3, p), Fp64(4, p), Fp64(5, p)}};
  REQUIRE(!c.disc().is_zero());

  std::vector<ECPoint<Fp64>> pts;
  pts.push_back(ECPoint<Fp64>::infinity(c.a1()));
  for (uint64_t x = 0; x < p; ++x)
    for (uint64_t y = 0; y < p; ++y) {
      ECPoint<Fp64> q{Fp64(x, p), Fp64(y, p), false};
      if (on_curve(c, q)) pts.push_back(q);
    }
  REQUIRE(pts.size() > 20);

  auto g = testutil::rng(14);
  for (int i = 0; i < 60; ++i) {
    auto& P = pts[rand_int(g, 0, (long)pts.size() - 1)];
    auto& Q = pts[rand_int(g, 0, (long)pts.size() - 1)];
    auto& R = pts[rand_int(g, 0, (long)pts.size() - 1)];
    CHECK(on_curve(c, ec_add(c, P, Q)));
    CHECK(ec_add(c, P, Q) == ec_add(c, Q, P));
    CHECK(ec_add(c, ec_add(c, P, Q), R) == ec_add(c, P, ec_add(c, Q, R)));
    CHECK(ec_add(c, P, ec_neg(c, P)).inf);
  }
  for (int i = 0; i < 20; ++i) {
    auto& P = pts[rand_int(g, 0, (long)pts.size() - 1)];
    long m = rand_int(g, -6, 6), n = rand_int(g, -6, 6);
    CHECK(ec_add(c, ec_mul(c, m, P), ec_mul(c, n, P)) == ec_mul(c, m + n, P));
  }
}

TEST_CASE("the origin has order five on T(b)") {
  auto R = make_ring("zb", {{"b", 1, false}});
  using F = RatFunc;
  F b = F::gen(R, "b");
  auto c = curve_T(b);
  ECPoint<F> P{zero_like(b), zero_like(b), false};
  REQUIRE(on_curve(c, P));

  auto P2 = ec_add(c, P, P);
  CHECK(P2.x == b);
  CHECK(P2.y == b * b);
  auto P4 = ec_add(c, P2, P2);
  CHECK(P4 == ec_neg(c, P));
  CHECK(P4.x == zero_like(b));
  CHECK(P4.y == b);
  CHECK(ec_add(c, P4, P).inf);
  CHECK(ec_mul(c, 5, P).inf);
  for (int n = 1; n < 5; ++n) CHECK(!ec_mul(c, n, P).inf);
}

TEST_CASE("division polynomial values at the origin") {
  auto R = make_ring("zb", {{"b", 1, false}});
  Poly b = Poly::gen(R, "b");
  auto c = curve_T(b);
  Poly x0 = zero_like(b);
  // psi5(0) = (b4 b8 - b6^2) b6^2 - b8^3 vanishes identically on T(b).
  CHECK(kz(psi5(c, x0)));
  CHECK(!kz(psi3(c, x0)));

  // On the universal 3-torsion curve y^2 + a1 xy + a3 y = x^3 the origin
  // is killed by psi3 instead.
  auto R3 = make_ring("zb3", {{"a1", 1, false}, {"a3", 3, false}});
  Poly a1 = Poly::gen(R3, "a1"), a3 = Poly::gen(R3, "a3"), z3 = zero_like(a1);
  Curve<Poly> c3{{a1, z3, a3, z3, z3}};
  CHECK(kz(psi3(c3, z3)));
  CHECK(!kz(psi5(c3, z3)));
}

TEST_CASE("order five on the whole a1,u family") {
  auto R = make_ring("b5f", {{"a1", 1, false}, {"u", 1, false}});
  using F = RatFunc;
  F a1 = F::gen(R, "a1"), u = F::gen(R, "u");
  auto c = curve_T1_order5(a1, u);
  ECPoint<F> P{zero_like(a1), zero_like(a1), false};
  REQUIRE(on_curve(c, P));
  CHECK(ec_mul(c, 5, P).inf);
  for (int n = 1; n < 5; ++n) CHECK(!ec_mul(c, n, P).inf);
  // a2^3 + a3^2 = a1 a2 a3 characterizes this locus.
  F a2 = c.a2(), a3 = c.a3();
  CHECK(a2 * a2 * a2 + a3 * a3 == a1 * a2 * a3);
}

TEST_CASE("tate normal form round trip") {
  auto g = testutil::rng(15);
  int done = 0;
  while (done < 20) {
    mpq_class b = rand_q(g, true), cc = rand_q(g);
    auto model = curve_T(b, cc);
    if (model.disc() == 0) continue;
    ECPoint<mpq_class> origin{0, 0, false};
    REQUIRE(on_curve(model, origin));

    auto phi = rand_iso(g);
    auto scrambled = phi(model);
    auto moved = phi(origin);
    REQUIRE(on_curve(scrambled, moved));

    auto tf = tate_normal(scrambled, moved);
    CHECK(tf.curve == model);
    CHECK(tf.iso(scrambled) == tf.curve);
    CHECK(tf.iso(moved) == origin);
    ++done;
  }
}

TEST_CASE("tate normal form lands on T(b,c) with the expected moduli") {
  // For the a1,u curve: b = -a2^3/a3^2 and c = 1 - a1 a2/a3.
  auto g = testutil::rng(16);
  int done = 0;
  while (done < 20) {
    mpq_class a1 = rand_q(g), u = rand_q(g, true);
    if (a1 == u) continue;
    auto c = curve_T1_order5(a1, u);
    if (c.disc() == 0) continue;
    ECPoint<mpq_class> origin{0, 0, false};
    auto tf = tate_normal(c, origin);
    mpq_class a2 = c.a2(), a3 = c.a3();
    mpq_class b = -a2 * a2 * a2 / (a3 * a3);
    mpq_class cm = 1 - a1 * a2 / a3;
    CHECK(tf.curve == curve_T(b, cm));
    ++done;
  }
}
