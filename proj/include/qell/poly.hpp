#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qell/exp.hpp"
#include "qell/rational.hpp"
#include "qell/ring.hpp"

namespace qell {

// Sparse multivariate polynomial over K, tagged with its ring descriptor.
// Invariant: no stored coefficient is zero, every exponent is exp_valid.
template <class K = mpq_class>
struct PolyT {
  RingPtr ring;
  std::map<Exp, K> terms;

  PolyT() = default;
  explicit PolyT(RingPtr r) : ring(std::move(r)) {}

  static PolyT zero(RingPtr r) { return PolyT(std::move(r)); }

  static PolyT constant(RingPtr r, K c) {
    PolyT p(std::move(r));
    if (!kz(c)) p.terms.emplace(exp_zero(), std::move(c));
    return p;
  }

  static PolyT monomial(RingPtr r, const Exp& e, K c) {
    PolyT p(std::move(r));
    if (!p.ring->exp_valid(e))
      throw std::invalid_argument("monomial: exponent not valid in ring");
    if (!kz(c)) p.terms.emplace(e, std::move(c));
    return p;
  }

  static PolyT gen(const RingPtr& r, const std::string& g, int e = 1) {
    return monomial(r, r->exp(g, e), K(1));
  }

  bool is_zero() const { return terms.empty(); }

  K coeff(const Exp& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? K(0) : it->second;
  }

  void add_term(const Exp& e, const K& c) {
    if (kz(c)) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (kz(it->second)) terms.erase(it);
    }
  }

  PolyT& operator+=(const PolyT& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }

  PolyT& operator-=(const PolyT& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms) add_term(e, K(-c));
    return *this;
  }

  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }

  friend PolyT operator-(const PolyT& a) {
    PolyT r(a.ring);
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, K(-c));
    return r;
  }

  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    a.check_same_ring(b);
    PolyT r(a.ring);
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) r.add_term(ea + eb, K(ca * cb));
    return r;
  }

  PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

  friend PolyT operator*(const K& c, const PolyT& a) {
    PolyT r(a.ring);
    if (kz(c)) return r;
    for (const auto& [e, ce] : a.terms) r.add_term(e, K(c * ce));
    return r;
  }

  friend PolyT operator*(const PolyT& a, const K& c) { return c * a; }
  PolyT& operator*=(const K& c) { return *this = c * *this; }

  friend bool operator==(const PolyT& a, const PolyT& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

  PolyT pow(long e) const {
    if (e < 0) {
      if (terms.size() == 1) return inv_monomial().pow(-e);
      throw std::domain_error("pow: negative power of a non-monomial");
    }
    PolyT r = constant(ring, K(1));
    PolyT x = *this;
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) r *= x;
      if (k > 1) x *= x;
    }
    return r;
  }

  // Inverse of a single term whose exponent involves only invertible
  // generators (or whose negation stays valid).
  PolyT inv_monomial() const {
    if (terms.size() != 1)
      throw std::domain_error("inv_monomial: not a monomial");
    const auto& [e, c] = *terms.begin();
    return monomial(ring, exp_zero() - e, K(inv(c)));
  }

  void check_same_ring(const PolyT& o) const {
    if (ring != o.ring)
      throw std::invalid_argument("polynomials from different rings");
  }
};

using Poly = PolyT<mpq_class>;

template <class K>
bool is_homogeneous(const PolyT<K>& p) {
  if (p.terms.empty()) return true;
  long w = p.ring->weight(p.terms.begin()->first);
  for (const auto& [e, c] : p.terms)
    if (p.ring->weight(e) != w) return false;
  return true;
}

// Weight of a homogeneous polynomial (zero polynomial reports weight 0).
template <class K>
long weight(const PolyT<K>& p) {
  if (p.terms.empty()) return 0;
  if (!is_homogeneous(p)) throw std::domain_error("weight: not homogeneous");
  return p.ring->weight(p.terms.begin()->first);
}

// Evaluation into any commutative algebra V. vals[i] substitutes gens[i];
// embed maps coefficients into V. Negative exponents use inv(V).
template <class V, class K, class Embed>
V eval_poly(const PolyT<K>& p, const std::vector<V>& vals, const V& zero,
            Embed embed) {
  V acc = zero;
  for (const auto& [e, c] : p.terms) {
    V term = embed(c);
    for (size_t i = 0; i < p.ring->gens.size(); ++i) {
      int16_t ei = e[i];
      if (ei == 0) continue;
      V b = ei > 0 ? vals[i] : inv(vals[i]);
      for (int16_t k = 0; k < (ei > 0 ? ei : int16_t(-ei)); ++k)
        term = term * b;
    }
    acc = acc + term;
  }
  return acc;
}

template <class V, class K>
V eval_poly(const PolyT<K>& p, const std::vector<V>& vals, const V& zero) {
  return eval_poly(p, vals, zero, [](const K& c) { return V(c); });
}

// Terms with exponent exactly e at generator g, with that factor removed.
template <class K>
PolyT<K> slice(const PolyT<K>& p, int g, int e) {
  PolyT<K> r(p.ring);
  for (const auto& [ex, c] : p.terms)
    if (ex[g] == e) {
      Exp e2 = ex;
      e2[g] = 0;
      r.terms.emplace(e2, c);
    }
  return r;
}

template <class K>
long min_exp(const PolyT<K>& p, int g) {
  long m = V2_INF;
  for (const auto& [ex, c] : p.terms)
    if (ex[g] < m) m = ex[g];
  return m;
}

// Discard terms with exponent at generator g of at least j.
template <class K>
PolyT<K> drop_from(const PolyT<K>& p, int g, long j) {
  PolyT<K> r(p.ring);
  for (const auto& [ex, c] : p.terms)
    if (ex[g] < j) r.terms.emplace(ex, c);
  return r;
}

// Reduce every coefficient to its canonical representative in [0, 2^k).
// Requires 2-integral coefficients (odd denominators are inverted).
Poly reduce_mod2k(const Poly& p, unsigned long k);

// Truncated representative of N / (2^k v1^j): coefficients mod 2^k, then
// terms with v1-exponent at least j dropped. The fraction is zero in the
// 2, v1 torsion module exactly when this reduction is empty.
Poly reduce_truncated(const Poly& n, unsigned long k, long j, int v1_index);

// Polynomial whose coefficients are bit i of each (mod 2^k reduced)
// coefficient of p; p must already have coefficients in [0, 2^k).
Poly bit_digit(const Poly& p, unsigned long i);

template <class K>
bool kz(const PolyT<K>& p) {
  return p.is_zero();
}

// Units of these rings are monomials in the invertible generators.
template <class K>
PolyT<K> inv(const PolyT<K>& p) {
  return p.inv_monomial();
}

template <class K>
PolyT<K> zero_like(const PolyT<K>& p) {
  return PolyT<K>::zero(p.ring);
}

template <class K>
PolyT<K> one_like(const PolyT<K>& p) {
  return PolyT<K>::constant(p.ring, K(1));
}

}  // namespace qell
