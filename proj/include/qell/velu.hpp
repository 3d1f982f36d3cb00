#pragma once

#include <vector>

#include "qell/ec.hpp"

namespace qell {

// Quotient of C by the finite subgroup whose monic kernel polynomial has
// power sums encoded by the elementary symmetric functions s1, s2, s3 of
// its roots (higher symmetric functions do not enter the formulas).
// n is the degree of the kernel polynomial.
template <class K>
Curve<K> velu_quotient(const Curve<K>& c, const K& s1, const K& s2,
                       const K& s3, long n) {
  K B2 = c.b2(), B4 = c.b4(), B6 = c.b6();
  K p1 = s1 * s1 - k_int(s1, 2) * s2;            // power sum x1^2 + ...
  K p2 = s1 * s1 * s1 - k_int(s1, 3) * s1 * s2 + k_int(s1, 3) * s3;
  K t = c.kint(6) * p1 + B2 * s1 + c.kint(n) * B4;
  K w = c.kint(10) * p2 + c.kint(2) * B2 * p1 + c.kint(3) * B4 * s1 +
        c.kint(n) * B6;
  return {{c.a1(), c.a2(), c.a3(), c.a4() - c.kint(5) * t,
           c.a6() - B2 * t - c.kint(7) * w}};
}

// Kernel polynomial given by monic coefficients, constant term first:
// psi(x) = x^n + coeffs[n-1] x^{n-1} + ... + coeffs[0].
template <class K>
Curve<K> velu_quotient(const Curve<K>& c, const std::vector<K>& coeffs) {
  long n = (long)coeffs.size();
  if (n < 1) return c;
  K z = zero_like(c.a1());
  K s1 = z - coeffs[n - 1];
  K s2 = n >= 2 ? coeffs[n - 2] : z;
  K s3 = n >= 3 ? z - coeffs[n - 3] : z;
  return velu_quotient(c, s1, s2, s3, n);
}

// Degree-3 isogeny from the universal 3-torsion curve
// y^2 + a1 xy + a3 y = x^3 (kernel polynomial x).
template <class K>
Curve<K> velu3(const Curve<K>& c) {
  K z = zero_like(c.a1());
  return velu_quotient(c, z, z, z, 1);
}

// Degree-5 isogeny from the Tate normal curve with kernel x(x + a2).
template <class K>
Curve<K> velu5(const Curve<K>& c) {
  K z = zero_like(c.a1());
  return velu_quotient(c, z - c.a2(), z, z, 2);
}

}  // namespace qell
