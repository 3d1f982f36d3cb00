#pragma once

#include "qell/poly.hpp"

namespace qell {

// Fraction of two polynomials. Reduction only strips a common monomial
// factor and rescales the denominator's first coefficient to one, so
// equality is tested by cross multiplication rather than structurally.
template <class K = mpq_class>
struct RatFuncT {
  PolyT<K> num, den;

  RatFuncT() = default;

  explicit RatFuncT(PolyT<K> n)
      : num(std::move(n)), den(PolyT<K>::constant(num.ring, K(1))) {}

  RatFuncT(PolyT<K> n, PolyT<K> d) : num(std::move(n)), den(std::move(d)) {
    num.check_same_ring(den);
    if (den.is_zero()) throw std::domain_error("rational function: 0 denominator");
    normalize();
  }

  static RatFuncT constant(const RingPtr& r, const K& c) {
    return RatFuncT(PolyT<K>::constant(r, c));
  }

  static RatFuncT gen(const RingPtr& r, const std::string& g) {
    return RatFuncT(PolyT<K>::gen(r, g));
  }

  const RingPtr& ring() const { return num.ring; }
  bool is_zero() const { return num.is_zero(); }

  void normalize() {
    if (num.is_zero()) {
      den = PolyT<K>::constant(num.ring, K(1));
      return;
    }
    Exp m = num.terms.begin()->first;
    auto shrink = [&](const PolyT<K>& p) {
      for (const auto& [e, c] : p.terms)
        for (int i = 0; i < MAX_GENS; ++i)
          if (e[i] < m[i]) m[i] = e[i];
    };
    shrink(num);
    shrink(den);
    for (int i = 0; i < MAX_GENS; ++i)
      if (m[i] < 0 && !(static_cast<size_t>(i) < num.ring->gens.size() &&
                        num.ring->gens[i].invertible))
        m[i] = 0;
    if (!qell::is_zero(m)) {
      auto shift = [&](PolyT<K>& p) {
        PolyT<K> q(p.ring);
        for (const auto& [e, c] : p.terms) q.terms.emplace(e - m, c);
        p = std::move(q);
      };
      shift(num);
      shift(den);
    }
    K lead = den.terms.begin()->second;
    if (!(lead == K(1))) {
      K s = inv(lead);
      num = s * num;
      den = s * den;
    }
  }

  friend RatFuncT operator+(const RatFuncT& a, const RatFuncT& b) {
    return RatFuncT(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFuncT operator-(const RatFuncT& a, const RatFuncT& b) {
    return RatFuncT(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFuncT operator-(const RatFuncT& a) { return {-a.num, a.den}; }
  friend RatFuncT operator*(const RatFuncT& a, const RatFuncT& b) {
    return RatFuncT(a.num * b.num, a.den * b.den);
  }
  friend RatFuncT operator/(const RatFuncT& a, const RatFuncT& b) {
    if (b.is_zero()) throw std::domain_error("rational function: divide by 0");
    return RatFuncT(a.num * b.den, a.den * b.num);
  }

  RatFuncT& operator+=(const RatFuncT& o) { return *this = *this + o; }
  RatFuncT& operator-=(const RatFuncT& o) { return *this = *this - o; }
  RatFuncT& operator*=(const RatFuncT& o) { return *this = *this * o; }
  RatFuncT& operator/=(const RatFuncT& o) { return *this = *this / o; }

  friend bool operator==(const RatFuncT& a, const RatFuncT& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator!=(const RatFuncT& a, const RatFuncT& b) {
    return !(a == b);
  }
};

using RatFunc = RatFuncT<mpq_class>;

template <class K>
bool kz(const RatFuncT<K>& f) {
  return f.is_zero();
}

template <class K>
RatFuncT<K> inv(const RatFuncT<K>& f) {
  if (f.is_zero()) throw std::domain_error("rational function: inverse of 0");
  return {f.den, f.num};
}

template <class K>
RatFuncT<K> zero_like(const RatFuncT<K>& f) {
  return RatFuncT<K>(PolyT<K>::zero(f.num.ring));
}

template <class K>
RatFuncT<K> one_like(const RatFuncT<K>& f) {
  return RatFuncT<K>::constant(f.num.ring, K(1));
}

}  // namespace qell
