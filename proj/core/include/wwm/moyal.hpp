#pragma once

#include <complex>
#include <optional>

#include "wwm/uni_poly.hpp"

namespace wwm {

/// Groenewold–Moyal product
///   f ⋆ g = f exp((iħ/2)(←∂q →∂p − ←∂p →∂q)) g,
/// so that q ⋆ p = qp + iħ/2. For polynomials the series is finite and is
/// summed exactly.
PhasePoly star(const PhasePoly& f, const PhasePoly& g);

/// f ⋆ g − g ⋆ f
PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g);

/// Weyl symbol of a normal-ordered operator: Q̂^a P̂^b ↦ q^a ⋆ p^b, linearly.
PhasePoly dequantize(const OpPoly& a);

/// How far the symbol of f(Â) is from f applied to the symbol of Â.
struct GapReport {
  OpPoly quantity;
  UniPoly function;
  PhasePoly symbol_of_fA;  ///< dequantize(f(Â))
  PhasePoly f_of_symbol;   ///< f(dequantize(Â)), commutative powers
  PhasePoly gap;           ///< symbol_of_fA − f_of_symbol
  std::optional<PhasePoint> point;
  Rational hbar{1};
  std::optional<std::complex<double>> gap_at_point;

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

GapReport assumption_I_gap(const OpPoly& a, const UniPoly& f,
                           std::optional<PhasePoint> pt = std::nullopt,
                           const Rational& hbar = 1);

/// dequantize(A + B) == dequantize(A) + dequantize(B), decided exactly.
bool assumption_II_check(const OpPoly& a, const OpPoly& b);

}  // namespace wwm
