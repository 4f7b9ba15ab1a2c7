#include "wwm/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wwm/errors.hpp"

namespace wwm {
namespace {

constexpr double kStabilityTol = 1e-8;
constexpr double kRealTol = 1e-10;

void require_hbar(const Rational& hbar) {
  if (sgn(hbar) <= 0) throw std::invalid_argument("hbar must be positive");
}

// Sum over monomials of c(ħ) Q^a P^b using cached powers.
Eigen::MatrixXcd substitute(const OpPoly& a, const LadderMatrices& ladder, const Rational& hbar) {
  const int n = ladder.q.dim();
  const unsigned deg = a.degree();
  std::vector<Eigen::MatrixXcd> qpow{Eigen::MatrixXcd::Identity(n, n)};
  std::vector<Eigen::MatrixXcd> ppow{Eigen::MatrixXcd::Identity(n, n)};
  for (unsigned k = 1; k <= deg; ++k) {
    qpow.push_back(qpow.back() * ladder.q.entries);
    ppow.push_back(ppow.back() * ladder.p.entries);
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [e, c] : a.terms()) {
    const std::complex<double> value = c.substitute(hbar).to_complex();
    if (e.q == 0) m += value * ppow[e.p];
    else if (e.p == 0) m += value * qpow[e.q];
    else m.noalias() += value * (qpow[e.q] * ppow[e.p]);
  }
  return m;
}

std::complex<double> raw_trace(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& op) {
  // tr(ρ A) = Σ_ij ρ_ij A_ji
  return (rho.transpose().array() * op.array()).sum();
}

std::complex<double> checked_trace(const DensityMatrix& u, const OpPoly& a, const Rational& hbar) {
  require_hbar(hbar);
  const int level = std::max(u.max_level(), 0);
  const int needed = level + static_cast<int>(a.degree()) + kTruncationBuffer;
  if (u.dim() < needed) {
    throw TruncationError("dimension " + std::to_string(u.dim()) + " too small: state level " +
                          std::to_string(level) + " with operator degree " + std::to_string(a.degree()) +
                          " needs at least " + std::to_string(needed));
  }
  const std::complex<double> value = raw_trace(u.matrix(), op_to_matrix(a, u.dim(), hbar).entries);
  const int doubled = 2 * u.dim();
  const std::complex<double> check = raw_trace(u.padded(doubled).matrix(), op_to_matrix(a, doubled, hbar).entries);
  if (std::abs(value - check) >= kStabilityTol) {
    throw TruncationError("trace unstable under N -> 2N: |delta| = " + std::to_string(std::abs(value - check)));
  }
  return value;
}

double real_part_checked(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > kRealTol * std::max(1.0, std::abs(z.real()))) {
    throw ImaginaryResidueError(std::string(what) + " has imaginary residue " + std::to_string(z.imag()) +
                                "; the quantity is not Hermitian or the truncation failed");
  }
  return z.real();
}

}  // namespace

LadderMatrices build_matrices(int dim, const Rational& hbar) {
  if (dim < 2) throw std::invalid_argument("Fock dimension must be at least 2");
  require_hbar(hbar);
  Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) lower(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXcd raise = lower.adjoint();
  const double s = std::sqrt(hbar.get_d() / 2.0);
  const std::complex<double> i(0.0, 1.0);
  return {FockMatrix{s * (lower + raise), hbar}, FockMatrix{i * s * (raise - lower), hbar}};
}

FockMatrix op_to_matrix(const OpPoly& a, int dim, const Rational& hbar) {
  const int needed = static_cast<int>(a.degree()) + kTruncationBuffer;
  if (dim < needed) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " too small for operator degree " +
                                std::to_string(a.degree()) + " (need >= " + std::to_string(needed) + ")");
  }
  return {substitute(a, build_matrices(dim, hbar), hbar), hbar};
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) throw std::invalid_argument("density matrix must be square");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - 1.0) > kTraceTol) throw std::invalid_argument("density matrix trace is not 1");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kEigenTol) throw std::invalid_argument("density matrix is not positive");
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("zero state vector");
  const Eigen::VectorXcd v = psi / norm;
  Eigen::MatrixXcd rho = v * v.adjoint();
  rho = (rho + rho.adjoint()) / 2.0;
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

int DensityMatrix::max_level(double tol) const {
  for (int n = dim() - 1; n >= 0; --n) {
    if (rho_.row(n).cwiseAbs().maxCoeff() > tol || rho_.col(n).cwiseAbs().maxCoeff() > tol) return n;
  }
  return -1;
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

DensityMatrix DensityMatrix::padded(int dim) const {
  if (dim < this->dim()) throw std::invalid_argument("cannot pad to a smaller dimension");
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(dim, dim);
  big.topLeftCorner(this->dim(), this->dim()) = rho_;
  return DensityMatrix(std::move(big));
}

DensityMatrix fock_state(int n, int dim) {
  if (dim < 1 || n < 0 || n >= dim) throw std::invalid_argument("Fock level out of range");
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  rho(n, n) = 1.0;
  return DensityMatrix(std::move(rho));
}

DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> states) {
  if (weights.empty() || weights.size() != states.size())
    throw std::invalid_argument("mixture needs one weight per state");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("mixture weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > DensityMatrix::kTraceTol) throw std::invalid_argument("mixture weights must sum to 1");
  const int dim = states.front().dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dim() != dim) throw std::invalid_argument("mixture states differ in dimension");
    rho += weights[k] * states[k].matrix();
  }
  return DensityMatrix(std::move(rho));
}

double trace_expectation(const DensityMatrix& u, const OpPoly& a, const Rational& hbar) {
  return real_part_checked(checked_trace(u, a, hbar), "tr(U A)");
}

double dispersion(const DensityMatrix& u, const OpPoly& a, const Rational& hbar) {
  const double mean = trace_expectation(u, a, hbar);
  const double second = trace_expectation(u, a * a, hbar);
  return second - mean * mean;
}

}  // namespace wwm
