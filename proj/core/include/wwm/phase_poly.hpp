#pragma once

#include <complex>
#include <vector>

#include "wwm/poly_common.hpp"

namespace wwm {

struct SymbolTag {};

/// Commutative polynomial in the phase-space coordinates (q, p) with
/// ħ-graded Gaussian-rational coefficients. This is the Weyl symbol of an
/// operator, i.e. the hidden-variable quantity as a function on phase space.
using PhasePoly = detail::BiPoly<SymbolTag>;

enum class Var { q, p };

/// A phase-space point (q0, p0), the hidden-variable parameter.
struct PhasePoint {
  double q = 0.0;
  double p = 0.0;

  /// Throws std::invalid_argument unless both coordinates are finite.
  static PhasePoint make(double q, double p);

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

namespace symbols {
inline PhasePoly q() { return PhasePoly::monomial(1, 0); }
inline PhasePoly p() { return PhasePoly::monomial(0, 1); }
inline PhasePoly hbar() { return PhasePoly::constant(HbarCoeff::hbar()); }
inline PhasePoly i() { return PhasePoly::constant(GaussianRational::i()); }
}  // namespace symbols

/// Ordinary commutative product.
PhasePoly operator*(const PhasePoly& f, const PhasePoly& g);

/// Exact partial derivative of the requested order.
PhasePoly derive(const PhasePoly& f, Var var, unsigned order = 1);

/// Exact substitution of ħ and the (dyadic-exact) point coordinates; the
/// only rounding is the final conversion to double. Requires hbar > 0.
std::complex<double> evaluate(const PhasePoly& f, const PhasePoint& pt, const Rational& hbar);

/// Replaces ħ by a number, leaving a polynomial whose coefficients are all
/// ħ-grade 0.
PhasePoly substitute_hbar(const PhasePoly& f, const Rational& hbar);

/// Drops every term of ħ-grade >= 1.
PhasePoly classical_limit(const PhasePoly& f);

/// Complex-conjugates every coefficient.
PhasePoly conj(const PhasePoly& f);

/// Floating-point image of a symbol at fixed ħ, for bulk evaluation on
/// grids where exact evaluation would be wasteful.
class NumericPoly {
 public:
  NumericPoly(const PhasePoly& f, const Rational& hbar);

  std::complex<double> operator()(double q, double p) const;

 private:
  struct Term {
    unsigned q;
    unsigned p;
    std::complex<double> c;
  };
  std::vector<Term> terms_;
};

}  // namespace wwm
