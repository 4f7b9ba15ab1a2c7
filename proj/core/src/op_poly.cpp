#include "wwm/op_poly.hpp"

#include <algorithm>

#include "combinatorics.hpp"

namespace wwm {

namespace operators {
OpPoly oscillator_hamiltonian() {
  return scale(HbarCoeff(Rational(1, 2)), OpPoly::monomial(2, 0) + OpPoly::monomial(0, 2));
}
}  // namespace operators

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
  // (Q^a P^b)(Q^c P^d): only the inner P^b Q^c needs reordering.
  static const GaussianRational minus_i{Rational(0), Rational(-1)};
  OpPoly r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const HbarCoeff c = ca * cb;
      const unsigned kmax = std::min(ea.p, eb.q);
      for (unsigned k = 0; k <= kmax; ++k) {
        Integer weight = detail::factorial(k) * detail::binomial(ea.p, k) * detail::binomial(eb.q, k);
        GaussianRational factor = pow(minus_i, k) * GaussianRational(Rational(weight));
        r.add_term({ea.q + eb.q - k, ea.p + eb.p - k}, (c * factor).shifted(k));
      }
    }
  }
  return r;
}

OpPoly pow(const OpPoly& a, unsigned exponent) {
  OpPoly result = OpPoly::one();
  for (unsigned k = 0; k < exponent; ++k) result = result * a;
  return result;
}

OpPoly commutator(const OpPoly& a, const OpPoly& b) { return a * b - b * a; }

OpPoly adjoint(const OpPoly& a) {
  // (c Q^a P^b)† = c* P^b Q^a
  OpPoly r;
  for (const auto& [e, c] : a.terms())
    r += scale(c.conj(), OpPoly::monomial(0, e.p) * OpPoly::monomial(e.q, 0));
  return r;
}

OpPoly weyl_quantize(const PhasePoly& f) {
  OpPoly r;
  for (const auto& [e, c] : f.terms()) {
    const unsigned m = e.q;
    const OpPoly pn = OpPoly::monomial(0, e.p);
    OpPoly sym;
    for (unsigned k = 0; k <= m; ++k) {
      OpPoly word = OpPoly::monomial(k, 0) * pn * OpPoly::monomial(m - k, 0);
      sym += scale(HbarCoeff(Rational(detail::binomial(m, k))), word);
    }
    Rational norm(Integer(1), Integer(1) << m);
    r += scale(c * GaussianRational(norm), sym);
  }
  return r;
}

OpPoly weyl_quantize_p_sided(const PhasePoly& f) {
  OpPoly r;
  for (const auto& [e, c] : f.terms()) {
    const unsigned n = e.p;
    const OpPoly qm = OpPoly::monomial(e.q, 0);
    OpPoly sym;
    for (unsigned k = 0; k <= n; ++k) {
      OpPoly word = OpPoly::monomial(0, k) * qm * OpPoly::monomial(0, n - k);
      sym += scale(HbarCoeff(Rational(detail::binomial(n, k))), word);
    }
    Rational norm(Integer(1), Integer(1) << n);
    r += scale(c * GaussianRational(norm), sym);
  }
  return r;
}

}  // namespace wwm
