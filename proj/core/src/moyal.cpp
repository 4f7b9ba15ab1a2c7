#include "wwm/moyal.hpp"

#include <algorithm>

#include "combinatorics.hpp"

namespace wwm {

PhasePoly star(const PhasePoly& f, const PhasePoly& g) {
  // Monomial pair (q^a p^b) ⋆ (q^c p^d). The order-n term is
  //   (1/n!)(iħ/2)^n Σ_k C(n,k)(−1)^k (∂q^{n−k}∂p^k f)(∂p^{n−k}∂q^k g),
  // every surviving product lands on q^{a+c−n} p^{b+d−n}, and n never
  // exceeds min(a+b, c+d), so the series is finite by construction.
  static const GaussianRational half_i{Rational(0), Rational(1, 2)};
  PhasePoly r;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      const HbarCoeff c = cf * cg;
      const unsigned nmax = std::min(ef.total(), eg.total());
      for (unsigned n = 0; n <= nmax; ++n) {
        if (n > ef.q + eg.q || n > ef.p + eg.p) continue;
        Integer sum = 0;
        // k = number of p-derivatives on f (and q-derivatives on g).
        const unsigned klo = n > ef.q ? n - ef.q : 0;
        const unsigned khi = std::min({n, ef.p, eg.q});
        for (unsigned k = klo; k <= khi; ++k) {
          if (n - k > eg.p) continue;
          Integer term = detail::binomial(n, k) * detail::falling(ef.q, n - k) * detail::falling(ef.p, k) *
                         detail::falling(eg.q, k) * detail::falling(eg.p, n - k);
          if (k % 2) sum -= term;
          else sum += term;
        }
        if (sum == 0) continue;
        Rational weight(sum, detail::factorial(n));
        weight.canonicalize();
        GaussianRational factor = pow(half_i, n) * GaussianRational(weight);
        r.add_term({ef.q + eg.q - n, ef.p + eg.p - n}, (c * factor).shifted(n));
      }
    }
  }
  return r;
}

PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g) { return star(f, g) - star(g, f); }

PhasePoly dequantize(const OpPoly& a) {
  PhasePoly r;
  for (const auto& [e, c] : a.terms())
    r += scale(c, star(PhasePoly::monomial(e.q, 0), PhasePoly::monomial(0, e.p)));
  return r;
}

GapReport assumption_I_gap(const OpPoly& a, const UniPoly& f, std::optional<PhasePoint> pt,
                           const Rational& hbar) {
  GapReport report;
  report.quantity = a;
  report.function = f;
  report.symbol_of_fA = dequantize(apply(f, a));
  report.f_of_symbol = apply(f, dequantize(a));
  report.gap = report.symbol_of_fA - report.f_of_symbol;
  report.point = pt;
  report.hbar = hbar;
  if (pt) report.gap_at_point = evaluate(report.gap, *pt, hbar);
  return report;
}

bool assumption_II_check(const OpPoly& a, const OpPoly& b) {
  return dequantize(a + b) == dequantize(a) + dequantize(b);
}

}  // namespace wwm
