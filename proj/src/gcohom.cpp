#include "qell/gcohom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qell/ringmap.hpp"

namespace qell {

namespace {

const RingPtr& R5() {
  static RingPtr r = ring_R5();
  return r;
}

Poly xgen() { return Poly::gen(R5(), "x"); }
Poly ygen() { return Poly::gen(R5(), "y"); }

// Monomials x^a y^b of topological degree t, highest power of x first.
std::vector<Exp> degree_basis(long t) {
  std::vector<Exp> basis;
  if (t < 0 || t % 2) return basis;
  long d = t / 2;
  for (long b = 0; b <= d; ++b) {
    Exp e = exp_zero();
    e[0] = int16_t(d - b);
    e[1] = int16_t(b);
    basis.push_back(e);
  }
  return basis;
}

// Matrix of sigma on that basis: x^{d-b} y^b -> (-1)^b x^b y^{d-b}.
ZMat sigma_matrix(long t) {
  long d = t / 2;
  ZMat p(size_t(d + 1), size_t(d + 1));
  for (long b = 0; b <= d; ++b)
    p.at(size_t(d - b), size_t(b)) = (b % 2) ? -1 : 1;
  return p;
}

ZMat identity(size_t n) {
  ZMat r(n, n);
  for (size_t i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

ZMat mul(const ZMat& a, const ZMat& b) {
  ZMat r(a.m, b.n);
  for (size_t i = 0; i < a.m; ++i)
    for (size_t k = 0; k < a.n; ++k) {
      if (a.at(i, k) == 0) continue;
      for (size_t j = 0; j < b.n; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

ZMat add_mat(const ZMat& a, const ZMat& b) {
  ZMat r(a.m, a.n);
  for (size_t i = 0; i < a.a.size(); ++i) r.a[i] = a.a[i] + b.a[i];
  return r;
}

ZMat sub_mat(const ZMat& a, const ZMat& b) {
  ZMat r(a.m, a.n);
  for (size_t i = 0; i < a.a.size(); ++i) r.a[i] = a.a[i] - b.a[i];
  return r;
}

// H^s of the periodic complex .. -> M -(sigma-1)-> M -N-> M -(sigma-1)-> ..
// for a cyclic group of the given order acting through sigma.
AbGroup periodic_cohomology(const ZMat& sigma, long order, long s) {
  if (sigma.m == 0) return AbGroup{};
  ZMat aug = sub_mat(sigma, identity(sigma.m));
  ZMat norm = identity(sigma.m);
  ZMat pw = sigma;
  for (long i = 1; i < order; ++i) {
    norm = add_mat(norm, pw);
    pw = mul(pw, sigma);
  }
  if (s == 0) return AbGroup{long(kernel_basis(aug).size()), {}};
  if (s % 2) return homology_quotient(norm, aug);
  return homology_quotient(aug, norm);
}

long pow3(int s) {
  long r = 1;
  for (int i = 0; i < s; ++i) r *= 3;
  return r;
}

int tuple_index(const std::vector<int>& gs) {
  int idx = 0;
  int place = 1;
  for (int g : gs) {
    if (g < 1 || g > 3) throw std::invalid_argument("group element not in 1..3");
    idx += (g - 1) * place;
    place *= 3;
  }
  return idx;
}

std::vector<int> tuple_of(long idx, int s) {
  std::vector<int> gs(size_t(s), 0);
  for (int k = 0; k < s; ++k) {
    gs[size_t(k)] = int(idx % 3) + 1;
    idx /= 3;
  }
  return gs;
}

bool sigma_invariant(const Poly& p) { return sigma_r5(p) == p; }

long merged_t(const Cochain& a, const Cochain& b) {
  if (a.t == b.t || b.is_zero()) return a.t;
  if (a.is_zero()) return b.t;
  throw std::invalid_argument("cochains valued in different degrees");
}

std::vector<mpq_class> cochain_coords(const Cochain& c,
                                      const std::vector<Exp>& basis) {
  std::vector<mpq_class> v;
  v.reserve(c.vals.size() * basis.size());
  for (const auto& p : c.vals)
    for (const auto& e : basis) v.push_back(p.coeff(e));
  return v;
}

std::string power_name(const char* g, long e) {
  if (e == 0) return "";
  std::string s = g;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string class_name(std::initializer_list<std::pair<const char*, long>> ps) {
  std::string out;
  for (const auto& [g, e] : ps) {
    std::string p = power_name(g, e);
    if (p.empty()) continue;
    if (!out.empty()) out += " ";
    out += p;
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Poly sigma_r5(const Poly& p, long power) {
  static const RingMap sig{R5(), R5(), {ygen(), -xgen()}, {}};
  long k = ((power % 4) + 4) % 4;
  Poly out = p;
  for (long i = 0; i < k; ++i) out = sig(out);
  return out;
}

std::vector<GradedSummand> decompose_action(long t) {
  if (t % 2) throw std::domain_error("decompose_action: degree must be even");
  std::vector<GradedSummand> out;
  if (t < 0) return out;
  long d = t / 2;
  for (long a = d; 2 * a > d; --a)
    out.push_back({(d % 2) ? SummandKind::Psi : SummandKind::Tau, int(a),
                   int(d - a)});
  if (d % 2 == 0)
    out.push_back({(d % 4 == 0) ? SummandKind::R : SummandKind::Rneg,
                   int(d / 2), int(d / 2)});
  return out;
}

AbGroup summand_cohomology(SummandKind k, long s) {
  if (s < 0) return AbGroup{};
  switch (k) {
    case SummandKind::R:
      if (s == 0) return AbGroup{1, {}};
      return (s % 2) ? AbGroup{} : AbGroup{0, {2}};
    case SummandKind::Rneg:
      return (s % 2) ? AbGroup{0, {1}} : AbGroup{};
    case SummandKind::Tau:
      if (s == 0) return AbGroup{1, {}};
      return (s % 2) ? AbGroup{} : AbGroup{0, {1}};
    case SummandKind::Psi:
      return (s % 2) ? AbGroup{0, {1}} : AbGroup{};
  }
  return AbGroup{};
}

AbGroup cohomology(long s, long t) {
  AbGroup total;
  if (t < 0 || t % 2) return total;
  for (const auto& sm : decompose_action(t)) {
    AbGroup part = summand_cohomology(sm.kind, s);
    total.free_rank += part.free_rank;
    for (long e : part.two_exponents) total.two_exponents.push_back(e);
  }
  std::sort(total.two_exponents.begin(), total.two_exponents.end());
  return total;
}

AbGroup cohomology_resolution(long s, long t) {
  if (t < 0 || t % 2) return AbGroup{};
  return periodic_cohomology(sigma_matrix(t), 4, s);
}

Poly& Cochain::at(const std::vector<int>& gs) {
  if (int(gs.size()) != s) throw std::invalid_argument("tuple length");
  return vals[size_t(tuple_index(gs))];
}

const Poly& Cochain::at(const std::vector<int>& gs) const {
  if (int(gs.size()) != s) throw std::invalid_argument("tuple length");
  return vals[size_t(tuple_index(gs))];
}

bool Cochain::is_zero() const {
  for (const auto& p : vals)
    if (!p.is_zero()) return false;
  return true;
}

Cochain zero_cochain(int s, long t) {
  Cochain c;
  c.s = s;
  c.t = t;
  c.vals.assign(size_t(pow3(s)), Poly::zero(R5()));
  return c;
}

Cochain invariant_cochain(const Poly& p) {
  Cochain c = zero_cochain(0, p.is_zero() ? 0 : weight(p));
  c.vals[0] = p;
  return c;
}

Cochain coboundary(const Cochain& phi) {
  Cochain out = zero_cochain(phi.s + 1, phi.t);
  for (long idx = 0; idx < pow3(phi.s + 1); ++idx) {
    auto gs = tuple_of(idx, phi.s + 1);
    std::vector<int> head(gs.begin() + 1, gs.end());
    Poly acc = sigma_r5(phi.at(head), gs[0]);
    int sign = 1;
    for (int i = 0; i < phi.s; ++i) {
      sign = -sign;
      int merged = (gs[size_t(i)] + gs[size_t(i) + 1]) % 4;
      if (merged == 0) continue;  // normalized: the identity slot is zero
      std::vector<int> ms;
      ms.reserve(size_t(phi.s));
      for (int k = 0; k <= phi.s; ++k) {
        if (k == i) {
          ms.push_back(merged);
        } else if (k != i + 1) {
          ms.push_back(gs[size_t(k)]);
        }
      }
      acc += mpq_class(sign) * phi.at(ms);
    }
    std::vector<int> tail(gs.begin(), gs.end() - 1);
    acc += mpq_class(-sign) * phi.at(tail);
    out.vals[size_t(idx)] = acc;
  }
  return out;
}

Cochain cup(const Cochain& phi, const Cochain& psi) {
  int p = phi.s, q = psi.s;
  Cochain out = zero_cochain(p + q, phi.t + psi.t);
  for (long idx = 0; idx < pow3(p + q); ++idx) {
    auto gs = tuple_of(idx, p + q);
    std::vector<int> front(gs.begin(), gs.begin() + q);
    std::vector<int> back(gs.begin() + q, gs.end());
    long shift = 0;
    for (int g : front) shift += g;
    out.vals[size_t(idx)] = sigma_r5(phi.at(back), shift) * psi.at(front);
  }
  return out;
}

Cochain add(const Cochain& a, const Cochain& b) {
  if (a.s != b.s) throw std::invalid_argument("cochain degree mismatch");
  Cochain out = zero_cochain(a.s, merged_t(a, b));
  for (size_t i = 0; i < out.vals.size(); ++i)
    out.vals[i] = a.vals[i] + b.vals[i];
  return out;
}

Cochain sub(const Cochain& a, const Cochain& b) {
  return add(a, scale(-1, b));
}

Cochain scale(const mpq_class& c, const Cochain& a) {
  Cochain out = a;
  for (auto& p : out.vals) p = c * p;
  return out;
}

Cochain poly_mul(const Poly& p, const Cochain& a) {
  if (!sigma_invariant(p))
    throw std::invalid_argument("poly_mul: multiplier is not invariant");
  Cochain out = a;
  out.t = (p.is_zero() ? 0 : weight(p)) + a.t;
  for (auto& v : out.vals) v = p * v;
  return out;
}

Poly b2_poly() { return xgen() * xgen() + ygen() * ygen(); }

Poly b4_poly() {
  Poly x = xgen(), y = ygen();
  return x.pow(3) * y - x * y.pow(3);
}

Poly delta_poly() { return xgen().pow(2) * ygen().pow(2); }

Cochain eta_cochain() {
  Cochain c = zero_cochain(1, 2);
  c.at({1}) = xgen();
  c.at({2}) = xgen() + ygen();
  c.at({3}) = ygen();
  return c;
}

Cochain nu_cochain() {
  Cochain c = zero_cochain(1, 4);
  c.at({1}) = xgen() * ygen();
  c.at({3}) = xgen() * ygen();
  return c;
}

Cochain gamma_cochain() {
  Cochain c = zero_cochain(1, 6);
  c.at({1}) = xgen().pow(3);
  c.at({2}) = xgen().pow(3) + ygen().pow(3);
  c.at({3}) = ygen().pow(3);
  return c;
}

Cochain beta_cochain(const Poly& m) {
  if (!sigma_invariant(m))
    throw std::invalid_argument("beta_cochain: value is not invariant");
  Cochain c = zero_cochain(2, m.is_zero() ? 0 : weight(m));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i + j >= 4) c.at({i, j}) = m;
  return c;
}

Cochain xi_cochain() { return beta_cochain(delta_poly()); }

Cochain comparison_1(const Poly& m) {
  Cochain c = zero_cochain(1, m.is_zero() ? 0 : weight(m));
  Poly acc = Poly::zero(R5());
  for (int i = 1; i <= 3; ++i) {
    acc += sigma_r5(m, i - 1);
    c.at({i}) = acc;
  }
  return c;
}

std::optional<Cochain> coboundary_witness(const Cochain& target) {
  if (target.s < 1)
    throw std::invalid_argument("coboundary_witness: need degree >= 1");
  auto basis = degree_basis(target.t);
  if (basis.empty())
    return target.is_zero() ? std::optional<Cochain>(
                                  zero_cochain(target.s - 1, target.t))
                            : std::nullopt;

  size_t nmono = basis.size();
  size_t cols = size_t(pow3(target.s - 1)) * nmono;
  size_t rows = size_t(pow3(target.s)) * nmono;

  ZMat A(rows, cols);
  for (size_t jt = 0; jt < size_t(pow3(target.s - 1)); ++jt)
    for (size_t jm = 0; jm < nmono; ++jm) {
      Cochain unit = zero_cochain(target.s - 1, target.t);
      unit.vals[jt] = Poly::monomial(R5(), basis[jm], 1);
      auto img = cochain_coords(coboundary(unit), basis);
      size_t col = jt * nmono + jm;
      for (size_t r = 0; r < rows; ++r) {
        if (img[r].get_den() != 1)
          throw std::logic_error("coboundary matrix not integral");
        A.at(r, col) = img[r].get_num();
      }
    }

  // Clear denominators, which must be powers of 5 for an exact answer.
  auto tv = cochain_coords(target, basis);
  mpz_class lead = 1;
  for (const auto& q : tv) lead = lcm(lead, q.get_den());
  mpz_class probe = lead;
  while (probe % 5 == 0) probe /= 5;
  if (probe != 1)
    throw std::domain_error("coboundary_witness: coefficients outside Z[1/5]");
  std::vector<mpz_class> b(rows);
  for (size_t r = 0; r < rows; ++r) {
    mpq_class scaled = tv[r] * mpq_class(lead);
    b[r] = scaled.get_num();
  }

  auto sol = solve_localized(A, b, {5});
  if (!sol) return std::nullopt;
  Cochain w = zero_cochain(target.s - 1, target.t);
  for (size_t jt = 0; jt < size_t(pow3(target.s - 1)); ++jt)
    for (size_t jm = 0; jm < nmono; ++jm) {
      mpq_class c = (*sol)[jt * nmono + jm] / mpq_class(lead);
      c.canonicalize();
      if (c != 0) w.vals[jt].add_term(basis[jm], c);
    }
  return w;
}

std::vector<RelationReport> verify_e2_relations() {
  Poly b2 = b2_poly(), b4 = b4_poly(), dl = delta_poly();
  Cochain eta = eta_cochain(), nu = nu_cochain(), gam = gamma_cochain();
  Cochain xi = xi_cochain();

  std::vector<RelationReport> out;
  auto push = [&](const std::string& name, const Cochain& lhs,
                  const Cochain& rhs) {
    RelationReport rep;
    rep.name = name;
    rep.s = lhs.s;
    rep.t = merged_t(lhs, rhs);
    rep.lhs_cocycle = coboundary(lhs).is_zero();
    rep.rhs_cocycle = coboundary(rhs).is_zero();
    Cochain diff = sub(lhs, rhs);
    if (lhs.s == 0) {
      rep.holds = diff.is_zero();
    } else {
      rep.holds = coboundary_witness(diff).has_value();
    }
    out.push_back(rep);
  };

  auto ic = [](const Poly& p) { return invariant_cochain(p); };
  Cochain zero1 = zero_cochain(1, 0), zero2 = zero_cochain(2, 0);

  push("b4^2 = b2^2 delta - 4 delta^2", ic(b4 * b4),
       ic(b2 * b2 * dl - mpq_class(4) * dl * dl));
  push("2 eta = 0", scale(2, eta), zero1);
  push("2 nu = 0", scale(2, nu), zero1);
  push("2 gamma = 0", scale(2, gam), zero1);
  push("4 xi = 0", scale(4, xi), zero2);
  push("nu^2 = 2 xi", cup(nu, nu), scale(2, xi));
  push("gamma^2 = (b2^2 + delta) eta^2", cup(gam, gam),
       poly_mul(b2 * b2 + dl, cup(eta, eta)));
  push("eta nu = 0", cup(eta, nu), zero2);
  push("b2 nu = 0", poly_mul(b2, nu), zero1);
  push("b2 xi = delta eta^2", poly_mul(b2, xi), poly_mul(dl, cup(eta, eta)));
  push("nu gamma = 0", cup(nu, gam), zero2);
  push("b4 xi = b2^2 xi + 2 delta xi + delta eta gamma", poly_mul(b4, xi),
       add(add(poly_mul(b2 * b2, xi), scale(2, poly_mul(dl, xi))),
           poly_mul(dl, cup(eta, gam))));
  push("b4 nu = 0", poly_mul(b4, nu), zero1);
  push("b4 gamma = (b4 + delta) b2 eta", poly_mul(b4, gam),
       poly_mul((b4 + dl) * b2, eta));
  push("gamma b2 = eta (b2^2 + b4)", poly_mul(b2, gam),
       poly_mul(b2 * b2 + b4, eta));
  return out;
}

std::vector<E2Class> e2_classes(long u_max, long s_max) {
  std::vector<E2Class> out;
  auto emit = [&](std::string name, long u, long s, int order_exp) {
    if (u <= u_max && s <= s_max) out.push_back({std::move(name), u, s, order_exp});
  };

  // Free part: b2^a b4^b delta^c with b <= 1.
  for (long a = 0; 4 * a <= u_max; ++a)
    for (long b = 0; b <= 1; ++b)
      for (long c = 0; 4 * a + 8 * b + 8 * c <= u_max; ++c)
        emit(class_name({{"b2", a}, {"b4", b}, {"delta", c}}),
             4 * a + 8 * b + 8 * c, 0, 0);

  // eta^e b2^a b4^b delta^c, e >= 1.
  for (long e = 1; e <= s_max; ++e)
    for (long a = 0; e + 4 * a <= u_max; ++a)
      for (long b = 0; b <= 1; ++b)
        for (long c = 0; e + 4 * a + 8 * b + 8 * c <= u_max; ++c)
          emit(class_name({{"eta", e}, {"b2", a}, {"b4", b}, {"delta", c}}),
               e + 4 * a + 8 * b + 8 * c, e, 1);

  // gamma eta^e delta^c.
  for (long e = 0; 1 + e <= s_max; ++e)
    for (long c = 0; 5 + e + 8 * c <= u_max; ++c)
      emit(class_name({{"gamma", 1}, {"eta", e}, {"delta", c}}),
           5 + e + 8 * c, 1 + e, 1);

  // xi^h eta^e delta^c, h >= 1, c >= -h (so xi^h delta^c is polynomial).
  for (long h = 1; 2 * h <= s_max; ++h)
    for (long e = 0; 2 * h + e <= s_max; ++e)
      for (long c = -h; 6 * h + e + 8 * c <= u_max; ++c)
        emit(class_name({{"xi", h}, {"eta", e}, {"delta", c}}),
             6 * h + e + 8 * c, 2 * h + e, e == 0 ? 2 : 1);

  // xi^h gamma eta^e delta^c, h >= 1, c >= -h.
  for (long h = 1; 2 * h + 1 <= s_max; ++h)
    for (long e = 0; 2 * h + e + 1 <= s_max; ++e)
      for (long c = -h; 6 * h + 5 + e + 8 * c <= u_max; ++c)
        emit(class_name({{"xi", h}, {"gamma", 1}, {"eta", e}, {"delta", c}}),
             6 * h + 5 + e + 8 * c, 2 * h + e + 1, 1);

  // nu xi^h delta^c, h >= 0, c >= -h.
  for (long h = 0; 2 * h + 1 <= s_max; ++h)
    for (long c = -h; 3 + 6 * h + 8 * c <= u_max; ++c)
      emit(class_name({{"nu", 1}, {"xi", h}, {"delta", c}}),
           3 + 6 * h + 8 * c, 2 * h + 1, 1);

  return out;
}

std::vector<E2Entry> e2_chart(long u_max, long s_max) {
  std::map<std::pair<long, long>, AbGroup> fam;
  for (const auto& cls : e2_classes(u_max, s_max)) {
    AbGroup& g = fam[{cls.u, cls.s}];
    if (cls.order_exp == 0) {
      g.free_rank += 1;
    } else {
      g.two_exponents.push_back(cls.order_exp);
    }
  }
  for (auto& [k, g] : fam)
    std::sort(g.two_exponents.begin(), g.two_exponents.end());

  std::vector<E2Entry> out;
  for (long s = 0; s <= s_max; ++s)
    for (long t = 0; t - s <= u_max; t += 2) {
      E2Entry e;
      e.u = t - s;
      e.s = s;
      auto it = fam.find({e.u, e.s});
      if (it != fam.end()) e.families = it->second;
      e.summands = cohomology(s, t);
      e.resolution = cohomology_resolution(s, t);
      out.push_back(e);
    }
  return out;
}

AbGroup cohomology_level3(long s, long w) {
  if (w < 0 || s < 0) return AbGroup{};
  long even = 0, odd = 0;
  for (long j = 0; 3 * j <= w; ++j) {
    long i = w - 3 * j;
    ((i + j) % 2 ? odd : even) += 1;
  }
  AbGroup g;
  if (s == 0) {
    g.free_rank = even;
  } else if (s % 2) {
    g.two_exponents.assign(size_t(odd), 1);
  } else {
    g.two_exponents.assign(size_t(even), 1);
  }
  return g;
}

AbGroup cohomology_level3_resolution(long s, long w) {
  if (w < 0) return AbGroup{};
  std::vector<int> signs;
  for (long j = 0; 3 * j <= w; ++j) signs.push_back((w - 3 * j + j) % 2 ? -1 : 1);
  ZMat sigma(signs.size(), signs.size());
  for (size_t i = 0; i < signs.size(); ++i) sigma.at(i, i) = signs[i];
  return periodic_cohomology(sigma, 2, s);
}

}  // namespace qell
