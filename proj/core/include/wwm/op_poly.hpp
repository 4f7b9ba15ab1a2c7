#pragma once

#include "wwm/phase_poly.hpp"

namespace wwm {

struct OperatorTag {};

/// Noncommutative polynomial in Q̂, P̂ kept in canonical normal order: the
/// key (a, b) stands for the word Q̂^a P̂^b, every Q̂ to the left of every P̂.
/// Two operators are equal iff their canonical maps are identical.
using OpPoly = detail::BiPoly<OperatorTag>;

namespace operators {
inline OpPoly Q() { return OpPoly::monomial(1, 0); }
inline OpPoly P() { return OpPoly::monomial(0, 1); }
inline OpPoly identity() { return OpPoly::one(); }
/// (Q̂² + P̂²)/2
OpPoly oscillator_hamiltonian();
}  // namespace operators

/// Operator composition A·B, re-expressed in normal order with
///   P̂^b Q̂^c = sum_k (-iħ)^k k! C(b,k) C(c,k) Q̂^(c-k) P̂^(b-k).
OpPoly operator*(const OpPoly& a, const OpPoly& b);

OpPoly pow(const OpPoly& a, unsigned exponent);

/// AB - BA
OpPoly commutator(const OpPoly& a, const OpPoly& b);

/// Hermitian adjoint, with ħ treated as real.
OpPoly adjoint(const OpPoly& a);

/// Weyl (symmetric) quantization by McCoy's formula
///   W(q^m p^n) = 2^-m sum_k C(m,k) Q̂^k P̂^n Q̂^(m-k),
/// extended linearly.
OpPoly weyl_quantize(const PhasePoly& f);

/// Same map through the P̂-sided form
///   W(q^m p^n) = 2^-n sum_k C(n,k) P̂^k Q̂^m P̂^(n-k).
/// Kept as an independent self-check of weyl_quantize.
OpPoly weyl_quantize_p_sided(const PhasePoly& f);

}  // namespace wwm
