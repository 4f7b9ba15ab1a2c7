#include "wwm/phase_poly.hpp"

#include <cmath>
#include <stdexcept>

#include "combinatorics.hpp"

namespace wwm {

PhasePoint PhasePoint::make(double q, double p) {
  if (!std::isfinite(q) || !std::isfinite(p)) throw std::invalid_argument("phase point must be finite");
  return {q, p};
}

PhasePoly operator*(const PhasePoly& f, const PhasePoly& g) {
  PhasePoly r;
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms()) r.add_term({ef.q + eg.q, ef.p + eg.p}, cf * cg);
  return r;
}

PhasePoly derive(const PhasePoly& f, Var var, unsigned order) {
  PhasePoly r;
  for (const auto& [e, c] : f.terms()) {
    unsigned n = var == Var::q ? e.q : e.p;
    if (order > n) continue;
    Exponents d = e;
    (var == Var::q ? d.q : d.p) -= order;
    r.add_term(d, c * GaussianRational(Rational(detail::falling(n, order))));
  }
  return r;
}

std::complex<double> evaluate(const PhasePoly& f, const PhasePoint& pt, const Rational& hbar) {
  if (sgn(hbar) <= 0) throw std::invalid_argument("hbar must be positive");
  const Rational q = exact_rational(pt.q);
  const Rational p = exact_rational(pt.p);
  Rational re(0), im(0);
  for (const auto& [e, c] : f.terms()) {
    GaussianRational value = c.substitute(hbar);
    Rational qp(1);
    for (unsigned k = 0; k < e.q; ++k) qp *= q;
    for (unsigned k = 0; k < e.p; ++k) qp *= p;
    re += value.re() * qp;
    im += value.im() * qp;
  }
  return {re.get_d(), im.get_d()};
}

PhasePoly substitute_hbar(const PhasePoly& f, const Rational& hbar) {
  PhasePoly r;
  for (const auto& [e, c] : f.terms()) r.add_term(e, HbarCoeff(c.substitute(hbar)));
  return r;
}

PhasePoly classical_limit(const PhasePoly& f) {
  PhasePoly r;
  for (const auto& [e, c] : f.terms()) r.add_term(e, c.truncated(1));
  return r;
}

PhasePoly conj(const PhasePoly& f) {
  PhasePoly r;
  for (const auto& [e, c] : f.terms()) r.add_term(e, c.conj());
  return r;
}

NumericPoly::NumericPoly(const PhasePoly& f, const Rational& hbar) {
  terms_.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) terms_.push_back({e.q, e.p, c.substitute(hbar).to_complex()});
}

std::complex<double> NumericPoly::operator()(double q, double p) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    double m = 1.0;
    for (unsigned k = 0; k < t.q; ++k) m *= q;
    for (unsigned k = 0; k < t.p; ++k) m *= p;
    sum += t.c * m;
  }
  return sum;
}

}  // namespace wwm
