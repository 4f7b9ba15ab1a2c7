#include <gtest/gtest.h>

#include <array>

#include "support/random_poly.hpp"
#include "support/random_state.hpp"
#include "wwm/errors.hpp"
#include "wwm/vn.hpp"

namespace wwm {
namespace {

using operators::P;
using operators::Q;

OpPoly H() { return operators::oscillator_hamiltonian(); }

using testing::random_density;

TEST(CheckLinearity, Examples) {
  const auto ground = fock_state(0, 32);
  const std::array ops{Q(), P()};
  EXPECT_LE(check_linearity(ground, ops, std::array{2.0, 3.0}), 1e-10);
  const std::array squares{Q() * Q(), P() * P()};
  EXPECT_LE(check_linearity(ground, squares, std::array{0.5, 0.5}), 1e-10);
  EXPECT_NEAR(trace_expectation(ground, H()),
              0.5 * trace_expectation(ground, squares[0]) + 0.5 * trace_expectation(ground, squares[1]), 1e-10);
  EXPECT_THROW(check_linearity(ground, std::span<const OpPoly>{}, std::span<const double>{}), std::invalid_argument);
}

TEST(CheckLinearity, RandomCases) {
  testing::PolyGen gen(41);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  for (int k = 0; k < 50; ++k) {
    const auto u = random_density(gen.rng(), 4, 24, 2);
    const std::array ops{weyl_quantize(gen.real_symbol(3)), weyl_quantize(gen.real_symbol(3)),
                         weyl_quantize(gen.real_symbol(2))};
    const std::array c{coeff(gen.rng()), coeff(gen.rng()), coeff(gen.rng())};
    ASSERT_LE(check_linearity(u, ops, c), 1e-10);
  }
}

TEST(DispersionFreeWitness, GroundState) {
  const Witness w = dispersion_free_witness(fock_state(0, 32));
  EXPECT_EQ(w.name, "q");
  EXPECT_EQ(w.quantity, Q());
  EXPECT_NEAR(w.dispersion, 0.5, 1e-9);
}

TEST(DispersionFreeWitness, FockStatesNeverWitnessedByH) {
  for (int n = 0; n < 8; ++n) {
    const Witness w = dispersion_free_witness(fock_state(n, 32));
    EXPECT_GT(w.dispersion, kWitnessThreshold);
    EXPECT_NE(w.name, "H");
  }
}

TEST(DispersionFreeWitness, MaximallyMixed) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(32, 32);
  for (int n = 0; n < 4; ++n) rho(n, n) = 0.25;
  const Witness w = dispersion_free_witness(DensityMatrix(rho));
  EXPECT_EQ(w.name, "q");
  EXPECT_GT(w.dispersion, 0.0);
}

TEST(DispersionFreeWitness, RandomStatesAreDispersive) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 50; ++k) ASSERT_GT(dispersion_free_witness(random_density(rng, 8, 32, 1 + k % 4)).dispersion, 1e-6);
}

TEST(DispersionFreeWitness, TooSmallDimensionIsReported) {
  EXPECT_THROW(dispersion_free_witness(fock_state(0, 6)), TruncationError);
}

TEST(IsHomogeneous, Examples) {
  EXPECT_TRUE(is_homogeneous(fock_state(0, 8)));
  const std::array w{0.5, 0.5};
  const std::array s{fock_state(0, 8), fock_state(1, 8)};
  EXPECT_FALSE(is_homogeneous(mixture(w, s)));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(0) = psi(1) = 1.0 / std::sqrt(2.0);
  EXPECT_TRUE(is_homogeneous(DensityMatrix::pure(psi)));
}

TEST(IsHomogeneous, MixturesOfDistinctPureStatesAreNot) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> weight(0.05, 0.95);
  for (int k = 0; k < 30; ++k) {
    const auto a = random_density(rng, 6, 12, 1);
    const auto b = random_density(rng, 6, 12, 1);
    ASSERT_TRUE(is_homogeneous(a));
    const double t = weight(rng);
    const std::array w{t, 1.0 - t};
    const std::array s{a, b};
    ASSERT_FALSE(is_homogeneous(mixture(w, s)));
  }
}

TEST(HvValue, Examples) {
  EXPECT_DOUBLE_EQ(hv_value({1, 1}, H()), 1.0);
  EXPECT_DOUBLE_EQ(hv_value({3, -2}, Q()), 3.0);
  EXPECT_DOUBLE_EQ(hv_value({0, 0}, H() * H()), -0.25);
  EXPECT_THROW(hv_value({1, 1}, Q() * P()), ImaginaryResidueError);
}

TEST(HvDispersion, HamiltonianReadings) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int k = 0; k < 20; ++k) {
    const PhasePoint pt{coord(rng), coord(rng)};
    const auto r = hv_dispersion(pt, H());
    ASSERT_EQ(r.aprime_reading, 0.0);
    ASSERT_EQ(r.assumption_I_reading, -0.25);
    ASSERT_TRUE(r.negative);
    ASSERT_EQ(r.gap_polynomial, -PhasePoly::constant(HbarCoeff::term(2, Rational(1, 4))));
  }
}

TEST(HvDispersion, SingleVariableQuantityHasNoCorrection) {
  const auto r = hv_dispersion({2.5, -1.0}, Q());
  EXPECT_EQ(r.aprime_reading, 0.0);
  EXPECT_EQ(r.assumption_I_reading, 0.0);
  EXPECT_TRUE(r.gap_polynomial.is_zero());
}

TEST(HvDispersion, ClassicalLimit) {
  double previous = 1.0;
  for (long d : {10L, 100L, 1000L, 100000L}) {
    const double reading = hv_dispersion({0.5, 0.5}, H(), Rational(1, d)).assumption_I_reading;
    EXPECT_NEAR(reading, -0.25 / (double(d) * d), 1e-18);
    EXPECT_LT(std::abs(reading), previous);
    previous = std::abs(reading);
  }
  EXPECT_TRUE(classical_limit(hv_dispersion({0.5, 0.5}, H()).gap_polynomial).is_zero());
}

TEST(HvDispersion, ReadingEqualsStarCorrection) {
  testing::PolyGen gen(45);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int k = 0; k < 30; ++k) {
    const OpPoly a = weyl_quantize(gen.real_symbol(3));
    const PhasePoint pt{coord(gen.rng()), coord(gen.rng())};
    const auto r = hv_dispersion(pt, a);
    const PhasePoly sym = dequantize(a);
    ASSERT_EQ(r.aprime_reading, 0.0);
    ASSERT_EQ(r.gap_polynomial, star(sym, sym) - sym * sym);
    ASSERT_EQ(r.assumption_I_reading, evaluate(star(sym, sym) - sym * sym, pt, 1).real());
  }
}

TEST(HvDispersion, GeneralFunction) {
  const auto r = hv_dispersion({1.0, 0.0}, H(), UniPoly::monomial(3));
  EXPECT_EQ(r.aprime_reading, 0.0);
  // H⋆H⋆H = H³ − (5/4)ħ²H by hand; −5/8 at (1, 0). Checked against the
  // ground state: ⟨H³⟩_W − (5/4)⟨H⟩_W = 3/4 − 5/8 = ⟨0|Ĥ³|0⟩ = 1/8.
  EXPECT_DOUBLE_EQ(r.assumption_I_reading, -0.625);
  EXPECT_NEAR(trace_expectation(fock_state(0, 32), pow(H(), 3)), 0.125, 1e-12);
}

TEST(HvAverageCheck, Examples) {
  const GridSpec g;
  auto c = hv_average_check(fock_state(0, 32), H(), g);
  EXPECT_NEAR(c.trace, 0.5, 1e-12);
  EXPECT_NEAR(c.overlap, 0.5, 1e-6);
  c = hv_average_check(fock_state(0, 32), operators::identity(), g);
  EXPECT_NEAR(c.trace, 1.0, 1e-12);
  EXPECT_NEAR(c.overlap, 1.0, 1e-6);
  c = hv_average_check(fock_state(1, 32), H() * H(), g);
  EXPECT_NEAR(c.trace, 2.25, 1e-12);
  EXPECT_NEAR(c.overlap, 2.25, 1e-6);
}

}  // namespace
}  // namespace wwm
