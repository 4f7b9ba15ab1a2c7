#pragma once

#include <Eigen/Dense>

#include <span>

#include "wwm/op_poly.hpp"

namespace wwm {

/// Levels kept beyond (state level + operator degree) before a truncated
/// matrix element is trusted. The top corner of truncated ladder algebra is
/// always wrong; the buffer keeps it away from anything we read.
inline constexpr int kTruncationBuffer = 8;

/// An operator represented on the first `dim()` oscillator levels.
struct FockMatrix {
  Eigen::MatrixXcd entries;
  Rational hbar{1};

  int dim() const { return static_cast<int>(entries.rows()); }
};

struct LadderMatrices {
  FockMatrix q;
  FockMatrix p;
};

/// Q̂ = sqrt(ħ/2)(a + a†), P̂ = i sqrt(ħ/2)(a† − a) on N levels.
/// Throws std::invalid_argument for N < 2 or ħ <= 0.
LadderMatrices build_matrices(int dim, const Rational& hbar);

/// Substitutes the ladder matrices into the normal-ordered form of `a`.
/// Throws std::invalid_argument when dim < degree(a) + kTruncationBuffer.
FockMatrix op_to_matrix(const OpPoly& a, int dim, const Rational& hbar);

/// Statistical operator: Hermitian, positive semidefinite, unit trace.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kEigenTol = 1e-10;
  static constexpr double kTraceTol = 1e-12;

  /// Validates the invariants; throws std::invalid_argument on violation.
  explicit DensityMatrix(Eigen::MatrixXcd rho);

  /// |ψ⟩⟨ψ| for a normalised copy of ψ.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  const Eigen::MatrixXcd& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }

  /// Highest level n with a row or column of U above `tol`; -1 if none.
  int max_level(double tol = 1e-14) const;
  double purity() const;
  /// Same state embedded in a larger space by zero padding.
  DensityMatrix padded(int dim) const;

 private:
  Eigen::MatrixXcd rho_;
};

/// Projector onto |n⟩ in an N-level space.
DensityMatrix fock_state(int n, int dim);

/// Convex combination; weights must be non-negative and sum to 1 (1e-12).
DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> states);

/// tr(U Â). Enforces the truncation policy (dimension and N→2N stability)
/// and requires the result to be real to 1e-10.
double trace_expectation(const DensityMatrix& u, const OpPoly& a, const Rational& hbar = 1);

/// tr(U Â²) − tr(U Â)², with Â² formed exactly before substitution.
double dispersion(const DensityMatrix& u, const OpPoly& a, const Rational& hbar = 1);

}  // namespace wwm
