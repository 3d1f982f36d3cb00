#include "qell/poly.hpp"

namespace qell {

Poly reduce_mod2k(const Poly& p, unsigned long k) {
  Poly r(p.ring);
  for (const auto& [e, c] : p.terms) r.add_term(e, mpq_class(mod2k(c, k)));
  return r;
}

Poly reduce_truncated(const Poly& n, unsigned long k, long j, int v1_index) {
  if (k == 0 || j <= 0) return Poly::zero(n.ring);
  return drop_from(reduce_mod2k(n, k), v1_index, j);
}

Poly bit_digit(const Poly& p, unsigned long i) {
  Poly r(p.ring);
  for (const auto& [e, c] : p.terms) {
    if (c.get_den() != 1 || c < 0)
      throw std::domain_error("bit_digit: coefficients must be reduced first");
    if (mpz_tstbit(c.get_num().get_mpz_t(), i))
      r.terms.emplace(e, mpq_class(1));
  }
  return r;
}

}  // namespace qell
