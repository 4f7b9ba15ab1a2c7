#pragma once

#include <span>
#include <string>
#include <utility>

#include "wwm/moyal.hpp"
#include "wwm/wigner.hpp"

namespace wwm {

/// |Exp(Σ aᵢ Rᵢ) − Σ aᵢ Exp(Rᵢ)| with Exp the trace functional. Coefficients
/// are converted exactly to rationals before forming the combination.
double check_linearity(const DensityMatrix& u, std::span<const OpPoly> ops,
                       std::span<const double> coeffs, const Rational& hbar = 1);

struct Witness {
  std::string name;
  OpPoly quantity;
  double dispersion = 0.0;
};

inline constexpr double kWitnessThreshold = 1e-6;

/// First member of {q̂, p̂, q̂+p̂, q̂−p̂, Ĥ, Q̂², P̂², N̂} whose dispersion in U
/// exceeds kWitnessThreshold. Throws NumericalContractError if none does,
/// which can only be a truncation artifact.
Witness dispersion_free_witness(const DensityMatrix& u, const Rational& hbar = 1);

/// U² = U (max-norm 1e-10) with unit trace, i.e. a rank-1 projector.
bool is_homogeneous(const DensityMatrix& u);

/// Dispersion-free value of A at λ: its Weyl symbol evaluated at the point.
/// Throws ImaginaryResidueError when the value is not real.
double hv_value(const PhasePoint& point, const OpPoly& a, const Rational& hbar = 1);

struct HvDispersionReport {
  PhasePoint point;
  OpPoly quantity;
  UniPoly function;  ///< x² for the dispersion reading
  Rational hbar{1};
  /// Under A' the value of f(A) is f(value of A); always exactly 0.
  double aprime_reading = 0.0;
  /// Symbol of f(Â) minus f(symbol of Â), at the point.
  double assumption_I_reading = 0.0;
  PhasePoly gap_polynomial;
  bool negative = false;

  friend bool operator==(const HvDispersionReport&, const HvDispersionReport&) = default;
};

HvDispersionReport hv_dispersion(const PhasePoint& point, const OpPoly& a, const Rational& hbar = 1);
HvDispersionReport hv_dispersion(const PhasePoint& point, const OpPoly& a, const UniPoly& f,
                                 const Rational& hbar = 1);

struct AverageCheck {
  double trace = 0.0;    ///< tr(U Â)
  double overlap = 0.0;  ///< ∫ W · dequantize(Â)
};

inline constexpr double kAverageTol = 1e-6;

AverageCheck hv_average_check(const DensityMatrix& u, const OpPoly& a, const GridSpec& spec,
                              const Rational& hbar = 1);

}  // namespace wwm
