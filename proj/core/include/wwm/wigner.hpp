#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "wwm/fock.hpp"

namespace wwm {

/// Rectangular sampling lattice, endpoints included on both axes.
struct GridSpec {
  double q_min = -8.0;
  double q_max = 8.0;
  int nq = 257;
  double p_min = -8.0;
  double p_max = 8.0;
  int np = 257;

  /// "qmin:qmax:nq,pmin:pmax:np"
  static GridSpec parse(std::string_view text);

  double dq() const { return (q_max - q_min) / (nq - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
  double q(int i) const { return q_min + i * dq(); }
  double p(int j) const { return p_min + j * dp(); }

  /// Throws std::invalid_argument on fewer than two points or empty ranges.
  void validate() const;
};

struct WignerGrid {
  GridSpec spec;
  std::vector<double> values;  ///< row-major, q outer
  double max_imag_residue = 0.0;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * spec.np + j]; }
  /// Trapezoid sum of the samples times the cell area.
  double integral() const;
  /// Header `q,p,w`, row-major, 17 significant digits.
  void write_csv(std::ostream& out) const;
};

/// Imaginary part tolerated in a sample before the computation is rejected.
inline constexpr double kWignerImagTol = 1e-8;

/// W(q,p) = (1/πħ) ∫ ⟨q+y|U|q−y⟩ e^{−2ipy/ħ} dy, with ⟨x|n⟩ the Hermite
/// functions and the y integral done by a trapezoid rule whose step is
/// chosen from the grid's largest |p| and the state's highest level.
WignerGrid wigner_grid(const DensityMatrix& u, const GridSpec& spec, const Rational& hbar = 1);

/// Boundary magnitude of W·f above which a grid is rejected as too small.
inline constexpr double kBoundaryDecayTol = 1e-12;

/// ∫∫ W f dq dp by the trapezoid rule on the grid. Throws GridError if
/// |W f| on the grid boundary exceeds kBoundaryDecayTol.
double overlap_expectation(const WignerGrid& w, const PhasePoly& f, const Rational& hbar = 1);
double overlap_expectation(const DensityMatrix& u, const PhasePoly& f, const GridSpec& spec,
                           const Rational& hbar = 1);

/// Normalised Hermite functions φ_0..φ_n at ξ via the stable three-term
/// recurrence (oscillator eigenfunctions in units where ħ = 1).
std::vector<double> hermite_functions(int n, double xi);

}  // namespace wwm
