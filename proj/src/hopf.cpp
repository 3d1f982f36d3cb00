#include "qell/hopf.hpp"

#include <random>

#include "qell/ec.hpp"
#include "qell/fp.hpp"
#include "qell/parse.hpp"
#include "qell/tate.hpp"

namespace qell {

const Hopf& hopf() {
  static const Hopf H = [] {
    Hopf h;
    h.A = ring_A();
    h.Gamma = ring_Gamma();
    h.GammaGamma = ring_GammaGamma();
    h.eta_L = name_map(h.A, h.Gamma);

    // The right unit is the universal (r, s, t, 1) coordinate change.
    Curve<Poly> E{{Poly::gen(h.Gamma, "a1"), Poly::gen(h.Gamma, "a2"),
                   Poly::gen(h.Gamma, "a3"), Poly::gen(h.Gamma, "a4"),
                   Poly::gen(h.Gamma, "a6")}};
    Iso<Poly> phi{Poly::gen(h.Gamma, "r"), Poly::gen(h.Gamma, "s"),
                  Poly::gen(h.Gamma, "t"), Poly::constant(h.Gamma, 1)};
    Curve<Poly> E2 = phi(E);
    h.eta_R =
        RingMap{h.A, h.Gamma, {E2.a[0], E2.a[1], E2.a[2], E2.a[3], E2.a[4]},
                {}};

    std::vector<Poly> eps;
    for (const auto& g : h.A->gens) eps.push_back(Poly::gen(h.A, g.name));
    for (int k = 0; k < 3; ++k) eps.push_back(Poly::zero(h.A));
    h.counit = RingMap{h.Gamma, h.A, eps, {}};

    h.incl_L = name_map(h.Gamma, h.GammaGamma);
    RingMap flat = h.incl_L;
    auto GG = h.GammaGamma;
    Poly r2 = Poly::gen(GG, "r'"), s2 = Poly::gen(GG, "s'"),
         t2 = Poly::gen(GG, "t'");

    // Composition of coordinate changes with lambda = 1.
    std::vector<Poly> co;
    for (const auto& g : h.A->gens) co.push_back(Poly::gen(GG, g.name));
    co.push_back(Poly::gen(GG, "r") + r2);
    co.push_back(Poly::gen(GG, "s") + s2);
    co.push_back(Poly::gen(GG, "t") + Poly::gen(GG, "s") * r2 + t2);
    h.psi = RingMap{h.Gamma, h.GammaGamma, co, {}};

    // 1 (x) x: scalars pass through the left factor by the right unit.
    std::vector<Poly> right;
    for (const auto& im : h.eta_R.images) right.push_back(flat(im));
    right.push_back(r2);
    right.push_back(s2);
    right.push_back(t2);
    h.incl_R = RingMap{h.Gamma, h.GammaGamma, right, {}};
    return h;
  }();
  return H;
}

std::array<Poly, 2> tate_constraints() {
  auto G = ring_Gamma();
  Poly z = Poly::zero(G);
  Curve<Poly> T{{Poly::gen(G, "a1"), Poly::gen(G, "a2"), Poly::gen(G, "a3"),
                 z, z}};
  Iso<Poly> phi{Poly::gen(G, "r"), Poly::gen(G, "s"), Poly::gen(G, "t"),
                Poly::constant(G, 1)};
  Curve<Poly> T2 = phi(T);
  return {T2.a4(), T2.a6()};
}

std::array<Poly, 3> lambda1_relations() {
  auto G = ring_Gamma();
  return {
      parse_poly(G, "3*r^2 - (2*s*t + a1*r*s + a3*s + a1*t - 2*a2*r)"),
      parse_poly(G, "t^2 - (r^3 + a2*r^2 - a1*r*t - a3*t)"),
      parse_poly(
          G,
          "s^6 - (-3*a1*s^5 + 9*r*s^4 + 3*a2*s^4 - 3*a1^2*s^4 + 4*t*s^3"
          " + 20*a1*r*s^3 + 6*a1*a2*s^3 + 2*a3*s^3 - a1^3*s^3 + 6*a1*t*s^2"
          " - 27*r^2*s^2 - 18*a2*r*s^2 + 12*a1^2*r*s^2 - 3*a2^2*s^2"
          " + 3*a1^2*a2*s^2 + 3*a1*a3*s^2 - 12*r*t*s - 4*a2*t*s"
          " + 2*a1^2*t*s - 33*a1*r^2*s - 20*a1*a2*r*s - 6*a3*r*s"
          " + a1^3*r*s - 3*a1*a2^2*s - 2*a3*a2*s + a1^2*a3*s + 4*t^2"
          " - 2*a1*r*t - 2*a1*a2*t + 4*a3*t + 27*r^3 + 27*a2*r^2"
          " - 2*a1^2*r^2 + 9*a2^2*r - a1^2*a2*r - a1*a3*r)"),
  };
}

Lambda1Report lambda1_relations_check(uint64_t seed, long samples) {
  Lambda1Report rep;
  auto cons = tate_constraints();
  auto rels = lambda1_relations();
  rep.first_is_a4 = rels[0] == cons[0];
  rep.second_is_a6 = rels[1] == -cons[1];

  std::mt19937_64 g(seed);
  const uint64_t primes[] = {7, 11, 13, 101, 1009, 10007};
  while (rep.samples < samples) {
    uint64_t p = primes[g() % 6];
    Fp64 a1v(g() % p, p), uv(g() % p, p);
    if (kz(uv)) continue;
    auto C = curve_T1_order5(a1v, uv);
    if (kz(C.disc())) continue;

    // A point of exact order 5 moved to the origin gives a coordinate
    // change between two curves in Tate shape, our universal solution.
    long n = 1 + static_cast<long>(g() % 4);
    ECPoint<Fp64> origin{Fp64(0, p), Fp64(0, p), false};
    auto tf = tate_t1(C, ec_mul(C, n, origin));

    Fp64 z(0, p);
    std::vector<Fp64> vals = {C.a1(),    C.a2(),    C.a3(),    z, z,
                              tf.iso.r, tf.iso.s, tf.iso.t};
    bool bad = false;
    for (const auto& rel : rels)
      if (!kz(eval_poly(rel, vals, z, [&](const mpq_class& c) {
            return Fp64::from_q(c, p);
          })))
        bad = true;
    ++rep.samples;
    if (bad) ++rep.failures;
  }
  return rep;
}

}  // namespace qell
