#include "wwm/vn.hpp"

#include <cmath>
#include <stdexcept>

#include "wwm/errors.hpp"

namespace wwm {

double check_linearity(const DensityMatrix& u, std::span<const OpPoly> ops, std::span<const double> coeffs,
                       const Rational& hbar) {
  if (ops.empty()) throw std::invalid_argument("check_linearity needs at least one quantity");
  if (ops.size() != coeffs.size()) throw std::invalid_argument("one coefficient per quantity required");
  OpPoly combined;
  double separate = 0.0;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    combined += scale(HbarCoeff(exact_rational(coeffs[k])), ops[k]);
    separate += coeffs[k] * trace_expectation(u, ops[k], hbar);
  }
  return std::abs(trace_expectation(u, combined, hbar) - separate);
}

Witness dispersion_free_witness(const DensityMatrix& u, const Rational& hbar) {
  using namespace operators;
  const OpPoly h = oscillator_hamiltonian();
  const Rational inv_two_hbar = Rational(1) / (2 * hbar);
  const OpPoly number = scale(HbarCoeff(inv_two_hbar), OpPoly::monomial(2, 0) + OpPoly::monomial(0, 2)) -
                        scale(HbarCoeff(Rational(1, 2)), identity());
  const std::pair<const char*, OpPoly> family[] = {
      {"q", Q()},          {"p", P()},          {"q+p", Q() + P()}, {"q-p", Q() - P()},
      {"H", h},            {"Q^2", Q() * Q()}, {"P^2", P() * P()}, {"N", number},
  };
  for (const auto& [name, op] : family) {
    const double dis = dispersion(u, op, hbar);
    if (dis > kWitnessThreshold) return {name, op, dis};
  }
  throw NumericalContractError(
      "no dispersive quantity found in the witness family; this is a truncation artifact");
}

bool is_homogeneous(const DensityMatrix& u) {
  const Eigen::MatrixXcd& rho = u.matrix();
  const double idempotency = (rho * rho - rho).cwiseAbs().maxCoeff();
  return idempotency <= 1e-10 && std::abs(rho.trace() - 1.0) <= DensityMatrix::kTraceTol;
}

namespace {

double real_value(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z.real()))) {
    throw ImaginaryResidueError(std::string(what) + " has imaginary part " + std::to_string(z.imag()) +
                                "; the quantity is not Hermitian");
  }
  return z.real();
}

}  // namespace

double hv_value(const PhasePoint& point, const OpPoly& a, const Rational& hbar) {
  return real_value(evaluate(dequantize(a), point, hbar), "hidden-variable value");
}

HvDispersionReport hv_dispersion(const PhasePoint& point, const OpPoly& a, const Rational& hbar) {
  return hv_dispersion(point, a, UniPoly::monomial(2), hbar);
}

HvDispersionReport hv_dispersion(const PhasePoint& point, const OpPoly& a, const UniPoly& f,
                                 const Rational& hbar) {
  // Both readings are formed symbolically and evaluated last.
  const GapReport gap = assumption_I_gap(a, f, point, hbar);
  HvDispersionReport r;
  r.point = point;
  r.quantity = a;
  r.function = f;
  r.hbar = hbar;
  r.gap_polynomial = gap.gap;
  // A': f(A) is measured by measuring A and applying f, so its value is
  // f(Ã(λ)) and the difference to f applied to the value vanishes.
  const PhasePoly aprime = gap.f_of_symbol - apply(f, dequantize(a));
  r.aprime_reading = real_value(evaluate(aprime, point, hbar), "A' reading");
  r.assumption_I_reading = real_value(*gap.gap_at_point, "assumption I reading");
  r.negative = r.assumption_I_reading < 0.0;
  return r;
}

AverageCheck hv_average_check(const DensityMatrix& u, const OpPoly& a, const GridSpec& spec,
                              const Rational& hbar) {
  return {trace_expectation(u, a, hbar), overlap_expectation(u, dequantize(a), spec, hbar)};
}

}  // namespace wwm
