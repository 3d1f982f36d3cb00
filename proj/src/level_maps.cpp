#include "qell/level_maps.hpp"

#include <map>
#include <stdexcept>

#include "qell/snf.hpp"

namespace qell {

Poly psi_ell(const Poly& p, long ell) {
  Poly r(p.ring);
  for (const auto& [e, c] : p.terms) {
    long w = p.ring->weight(e);
    mpz_class num(1), den(1);
    mpz_ui_pow_ui((w >= 0 ? num : den).get_mpz_t(),
                  static_cast<unsigned long>(ell),
                  static_cast<unsigned long>(w >= 0 ? w : -w));
    r.add_term(e, c * mpq_class(num, den));
  }
  return r;
}

Curve<Poly> universal_curve() {
  RingPtr A = ring_A();
  return {{Poly::gen(A, "a1"), Poly::gen(A, "a2"), Poly::gen(A, "a3"),
           Poly::gen(A, "a4"), Poly::gen(A, "a6")}};
}

PolyT<CycQ> to_cyc(const Poly& p) {
  PolyT<CycQ> r(p.ring);
  for (const auto& [e, c] : p.terms) r.terms.emplace(e, CycQ(c));
  return r;
}

Poly to_rational(const PolyT<CycQ>& p) {
  Poly r(p.ring);
  for (const auto& [e, c] : p.terms) {
    if (c.c[1] != 0 || c.c[2] != 0 || c.c[3] != 0)
      throw std::domain_error("to_rational: coefficient is not rational");
    if (c.c[0] != 0) r.terms.emplace(e, c.c[0]);
  }
  return r;
}

const Level3& level3() {
  static const Level3 L = [] {
    Level3 l;
    l.A = ring_A();
    l.B = ring_B3();
    Poly a1 = Poly::gen(l.B, "a1");
    Poly a3 = Poly::gen(l.B, "a3");
    Poly z = Poly::zero(l.B);
    l.fstar = RingMap{l.A, l.B, {a1, z, a3, z, z}, {}};
    l.qstar = RingMap{
        l.A, l.B,
        {a1, z, 3 * a3, -6 * a1 * a3, -(9 * a3 * a3 + a1.pow(3) * a3)},
        {}};
    l.minus_one = RingMap{l.B, l.B, {-a1, -a3}, {}};
    l.fcurve = Curve<Poly>{{l.fstar.images[0], l.fstar.images[1],
                            l.fstar.images[2], l.fstar.images[3],
                            l.fstar.images[4]}};
    l.qcurve = Curve<Poly>{{l.qstar.images[0], l.qstar.images[1],
                            l.qstar.images[2], l.qstar.images[3],
                            l.qstar.images[4]}};
    return l;
  }();
  return L;
}

// The transfer-like operator on the even subring Z[1/3][a1^2, a1 a3, a3^2];
// its values on the three quadratic generators determine it multiplicatively
// term by term.
Poly Level3::tstar(const Poly& p) const {
  if (p.ring != B) throw std::invalid_argument("tstar: wrong ring");
  Poly a1 = Poly::gen(B, "a1");
  Poly a3 = Poly::gen(B, "a3");
  Poly tA = -3 * a1 * a1;
  Poly tB = mpq_class(1, 3) * a1.pow(4) - 9 * a1 * a3;
  Poly tC = mpq_class(-1, 27) * a1.pow(6) + 2 * a1.pow(3) * a3 - 27 * a3 * a3;
  int i1 = B->gen_index("a1"), i3 = B->gen_index("a3");
  Poly out = Poly::zero(B);
  for (const auto& [e, c] : p.terms) {
    long i = e[i1], j = e[i3];
    if (i < 0 || j < 0 || (i + j) % 2 != 0)
      throw std::domain_error("tstar: monomial outside the even subring");
    long beta = j % 2;
    out += c * (tA.pow((i - beta) / 2) * tB.pow(beta) * tC.pow((j - beta) / 2));
  }
  return out;
}

namespace {

// (c3 z^3 + c2 z^2 + c1 z + c0) / 5 for a primitive fifth root of unity z.
CycQ cyc5(int c3, int c2, int c1, int c0) {
  CycQ r;
  r.c = {mpq_class(c0, 5), mpq_class(c1, 5), mpq_class(c2, 5),
         mpq_class(c3, 5)};
  for (auto& q : r.c) q.canonicalize();
  return r;
}

}  // namespace

const Level5& level5() {
  static const Level5 L = [] {
    Level5 l;
    l.A = ring_A();
    l.B = ring_B5();
    Poly a1 = Poly::gen(l.B, "a1");
    Poly u = Poly::gen(l.B, "u");
    Poly z = Poly::zero(l.B);
    Poly v2 = a1 * u - u * u;
    Poly v3 = a1 * u * u - u.pow(3);
    l.fstar = RingMap{l.A, l.B, {a1, v2, v3, z, z}, {}};
    Poly q4 = -10 * u.pow(4) + 30 * a1 * u.pow(3) - 25 * a1 * a1 * u * u +
              5 * a1.pow(3) * u;
    Poly q6 = -20 * u.pow(6) + 59 * a1 * u.pow(5) - 70 * a1 * a1 * u.pow(4) +
              45 * a1.pow(3) * u.pow(3) - 15 * a1.pow(4) * u * u +
              a1.pow(5) * u;
    l.qstar = RingMap{l.A, l.B, {a1, v2, v3, q4, q6}, {}};
    l.two_star = RingMap{l.B, l.B, {a1 - 2 * u, a1 - u}, {}};
    using CPoly = PolyT<CycQ>;
    CPoly ca1 = CPoly::gen(l.B, "a1");
    CPoly cu = CPoly::gen(l.B, "u");
    CPoly ta1 = cyc5(-8, -6, -14, -7) * ca1 + cyc5(14, -2, 12, 6) * cu;
    CPoly tu = cyc5(-1, -7, -8, -4) * ca1 + cyc5(8, 6, 14, 7) * cu;
    l.tstar_cyc = RingMapT<CycQ>{l.B, l.B, {ta1, tu}, {}};
    l.fcurve = Curve<Poly>{{l.fstar.images[0], l.fstar.images[1],
                            l.fstar.images[2], l.fstar.images[3],
                            l.fstar.images[4]}};
    l.qcurve = Curve<Poly>{{l.qstar.images[0], l.qstar.images[1],
                            l.qstar.images[2], l.qstar.images[3],
                            l.qstar.images[4]}};
    l.delta_au = l.fcurve.disc();
    return l;
  }();
  return L;
}

const G5Ring& g5() {
  static const G5Ring G = [] {
    G5Ring g;
    g.G = ring_G5();
    g.B = ring_B5();
    Poly a1 = Poly::gen(g.B, "a1");
    Poly u = Poly::gen(g.B, "u");
    Poly b1 = a1 - u;
    g.b2 = u * u + b1 * b1;
    g.b4 = u.pow(3) * b1 - u * b1.pow(3);
    g.delta = u * u * b1 * b1;
    return g;
  }();
  return G;
}

Poly G5Ring::reduce(Poly p) const {
  int ib4 = G->gen_index("b4");
  Poly rel = Poly::gen(G, "b2", 2) * Poly::gen(G, "delta") -
             4 * Poly::gen(G, "delta", 2);  // = b4^2
  Poly out = Poly::zero(G);
  for (const auto& [e, c] : p.terms) {
    int eb = e[ib4];
    if (eb < 2) {
      out.add_term(e, c);
      continue;
    }
    Exp e2 = e;
    e2[ib4] = static_cast<int16_t>(eb % 2);
    out += Poly::monomial(G, e2, c) * rel.pow(eb / 2);
  }
  return out;
}

Poly G5Ring::to_B(const Poly& g) const {
  if (g.ring != G) throw std::invalid_argument("to_B: wrong ring");
  return eval_poly(g, {b2, b4, delta}, Poly::zero(B),
                   [&](const mpq_class& c) { return Poly::constant(B, c); });
}

namespace {

// Homogeneous weight-w case. The monomials b2^i b4^e delta^j with e <= 1
// are a free basis of the invariant subring, so a solution is unique when
// it exists.
std::optional<Poly> invariant_expression(const G5Ring& g, const Poly& p,
                                         long w) {
  if (w < 0 || w % 2 != 0) return std::nullopt;
  int ib2 = g.G->gen_index("b2"), ib4 = g.G->gen_index("b4"),
      id = g.G->gen_index("delta");
  std::vector<Exp> cand;
  std::vector<Poly> imgs;
  for (int e = 0; e <= 1; ++e)
    for (long j = 0; 4 * j + 4 * e <= w; ++j) {
      Exp ex = exp_zero();
      ex[ib2] = static_cast<int16_t>((w - 4 * e - 4 * j) / 2);
      ex[ib4] = static_cast<int16_t>(e);
      ex[id] = static_cast<int16_t>(j);
      cand.push_back(ex);
      imgs.push_back(g.to_B(Poly::monomial(g.G, ex, 1)));
    }

  std::map<Exp, size_t> rows;
  auto touch = [&](const Poly& q) {
    for (const auto& [e, c] : q.terms) rows.emplace(e, rows.size());
  };
  for (const auto& q : imgs) touch(q);
  touch(p);

  QMat M(rows.size(), imgs.size());
  std::vector<mpq_class> rhs(rows.size());
  for (size_t c = 0; c < imgs.size(); ++c)
    for (const auto& [e, v] : imgs[c].terms) M.at(rows[e], c) = v;
  for (const auto& [e, v] : p.terms) rhs[rows[e]] = v;

  auto sol = solve_rational(M, rhs);
  if (!sol) return std::nullopt;
  Poly out = Poly::zero(g.G);
  for (size_t c = 0; c < cand.size(); ++c) out.add_term(cand[c], (*sol)[c]);
  return out;
}

}  // namespace

std::optional<Poly> G5Ring::from_B(const Poly& p) const {
  if (p.ring != B) throw std::invalid_argument("from_B: wrong ring");
  std::map<long, Poly> parts;
  for (const auto& [e, c] : p.terms) {
    auto [it, fresh] = parts.emplace(B->weight(e), Poly(B));
    it->second.add_term(e, c);
  }
  Poly out = Poly::zero(G);
  for (const auto& [w, part] : parts) {
    auto piece = invariant_expression(*this, part, w);
    if (!piece) return std::nullopt;
    out += *piece;
  }
  return out;
}

}  // namespace qell
