#include <gtest/gtest.h>

#include <array>

#include "support/random_poly.hpp"
#include "wwm/errors.hpp"
#include "wwm/fock.hpp"

namespace wwm {
namespace {

using operators::P;
using operators::Q;

OpPoly H() { return operators::oscillator_hamiltonian(); }

DensityMatrix half_half(int dim) {
  const std::array<double, 2> w{0.5, 0.5};
  const std::array<DensityMatrix, 2> s{fock_state(0, dim), fock_state(1, dim)};
  return mixture(w, s);
}

TEST(BuildMatrices, TwoLevelLadder) {
  const auto m = build_matrices(2, 1);
  EXPECT_NEAR(m.q.entries(0, 1).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(m.q.entries(1, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(m.q.entries(0, 0), std::complex<double>(0.0));
  EXPECT_THROW(build_matrices(1, 1), std::invalid_argument);
  EXPECT_THROW(build_matrices(4, 0), std::invalid_argument);
}

TEST(BuildMatrices, HermitianAndCanonical) {
  for (int n : {2, 5, 16, 64}) {
    const auto m = build_matrices(n, Rational(3, 2));
    EXPECT_LT((m.q.entries - m.q.entries.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((m.p.entries - m.p.entries.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    const Eigen::MatrixXcd c = m.q.entries * m.p.entries - m.p.entries * m.q.entries;
    const Eigen::MatrixXcd expected = std::complex<double>(0.0, 1.5) * Eigen::MatrixXcd::Identity(n, n);
    EXPECT_LT((c - expected).topLeftCorner(n - 1, n - 1).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(OpToMatrix, HamiltonianSpectrum) {
  const auto h = op_to_matrix(H(), 16, 1).entries;
  for (int n = 0; n < 15; ++n) EXPECT_NEAR(h(n, n).real(), n + 0.5, 1e-12);
  EXPECT_NEAR(h(15, 15).real(), 7.5 + 0.0, 1e-12);  // truncated: only the a†a half survives
  EXPECT_LT((h - Eigen::MatrixXcd(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(OpToMatrix, IdentityAndErrors) {
  EXPECT_TRUE(op_to_matrix(operators::identity(), 12, 1).entries == Eigen::MatrixXcd::Identity(12, 12));
  EXPECT_THROW(op_to_matrix(Q() * Q() * Q(), 10, 1), std::invalid_argument);
  EXPECT_NO_THROW(op_to_matrix(Q() * Q() * Q(), 11, 1));
}

TEST(OpToMatrix, SquareMatchesOnInterior) {
  const auto h = op_to_matrix(H(), 32, 1).entries;
  const auto h2 = op_to_matrix(H() * H(), 32, 1).entries;
  EXPECT_LT(((h * h) - h2).topLeftCorner(28, 28).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(States, FockAndMixture) {
  const auto s = fock_state(0, 8);
  EXPECT_NEAR(s.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(s.purity(), 1.0, 1e-15);
  const auto m = half_half(8);
  EXPECT_NEAR(m.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(m.purity(), 0.5, 1e-15);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m.matrix());
  EXPECT_EQ((eig.eigenvalues().array() > 1e-12).count(), 2);
}

TEST(States, Errors) {
  EXPECT_THROW(fock_state(8, 8), std::invalid_argument);
  EXPECT_THROW(fock_state(-1, 8), std::invalid_argument);
  const std::array<DensityMatrix, 2> s{fock_state(0, 4), fock_state(1, 4)};
  EXPECT_THROW(mixture(std::array{0.7, 0.7}, s), std::invalid_argument);
  EXPECT_THROW(mixture(std::array{1.5, -0.5}, s), std::invalid_argument);
  EXPECT_THROW(mixture(std::array{1.0}, s), std::invalid_argument);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{bad}, std::invalid_argument);
  bad(0, 0) = 1.0;
  bad(1, 1) = 0.0;
  bad(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix{bad}, std::invalid_argument);
}

TEST(TraceExpectation, Examples) {
  EXPECT_NEAR(trace_expectation(fock_state(0, 64), H(), 1), 0.5, 1e-12);
  for (int n : {0, 3, 7}) EXPECT_NEAR(trace_expectation(fock_state(n, 64), operators::identity(), 1), 1.0, 1e-14);
  EXPECT_NEAR(trace_expectation(half_half(64), H(), 1), 1.0, 1e-12);
}

TEST(TraceExpectation, ScalesWithHbar) {
  EXPECT_NEAR(trace_expectation(fock_state(2, 32), H(), Rational(1, 3)), 2.5 / 3.0, 1e-12);
}

TEST(TraceExpectation, NonHermitianRaisesImaginaryResidue) {
  EXPECT_THROW(trace_expectation(fock_state(0, 32), Q() * P(), 1), ImaginaryResidueError);
}

TEST(TraceExpectation, InsufficientDimensionIsATruncationError) {
  // level 5 + degree 4 + buffer 8 = 17
  EXPECT_THROW(trace_expectation(fock_state(5, 16), H() * H(), 1), TruncationError);
  EXPECT_NO_THROW(trace_expectation(fock_state(5, 17), H() * H(), 1));
}

TEST(TraceExpectation, StableUnderDoubling) {
  testing::PolyGen gen(3);
  for (int k = 0; k < 10; ++k) {
    const OpPoly a = weyl_quantize(gen.real_symbol(4));
    const double small = trace_expectation(fock_state(3, 24), a, 1);
    const double large = trace_expectation(fock_state(3, 48), a, 1);
    ASSERT_NEAR(small, large, 1e-8);
  }
}

TEST(Dispersion, Examples) {
  EXPECT_NEAR(dispersion(fock_state(0, 64), Q(), 1), 0.5, 1e-9);
  for (int n = 0; n < 6; ++n) EXPECT_NEAR(dispersion(fock_state(n, 64), H(), 1), 0.0, 1e-10);
  EXPECT_NEAR(dispersion(half_half(64), H(), 1), 0.25, 1e-9);
}

TEST(Dispersion, NonNegativeForHermitianQuantities) {
  testing::PolyGen gen(4);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < 30; ++k) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(32);
    for (int n = 0; n < 6; ++n) psi(n) = {gauss(gen.rng()), gauss(gen.rng())};
    const OpPoly a = weyl_quantize(gen.real_symbol(3));
    ASSERT_GE(dispersion(DensityMatrix::pure(psi), a, 1), -1e-10);
  }
}

}  // namespace
}  // namespace wwm
