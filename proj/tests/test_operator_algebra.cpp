#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/random_poly.hpp"
#include "wwm/fock.hpp"
#include "wwm/moyal.hpp"

namespace wwm {
namespace {

using operators::identity;
using operators::P;
using operators::Q;

const HbarCoeff i_hbar = HbarCoeff::term(1, GaussianRational::i());

OpPoly H() { return operators::oscillator_hamiltonian(); }

TEST(OpMul, SingleSwap) {
  EXPECT_EQ(P() * Q(), Q() * P() - scale(i_hbar, identity()));
  EXPECT_EQ(Q() * Q(), OpPoly::monomial(2, 0));
}

// Frozen from the reordering identity P²Q² = Q²P² − 4iħQP − 2ħ², and
// cross-checked against the Fock matrices below.
OpPoly hamiltonian_squared() {
  const Rational quarter(1, 4);
  return scale(HbarCoeff(quarter), OpPoly::monomial(4, 0) + OpPoly::monomial(0, 4)) +
         scale(HbarCoeff(Rational(1, 2)), OpPoly::monomial(2, 2)) - scale(i_hbar, OpPoly::monomial(1, 1)) -
         OpPoly::constant(HbarCoeff::term(2, Rational(1, 2)));
}

TEST(OpMul, HamiltonianSquared) { EXPECT_EQ(H() * H(), hamiltonian_squared()); }

TEST(OpMul, HamiltonianSquaredMatchesFockMatrices) {
  constexpr int N = 32;
  const auto h = op_to_matrix(H(), N, 1).entries;
  const auto h2 = op_to_matrix(hamiltonian_squared(), N, 1).entries;
  const int interior = N - 4;
  const Eigen::MatrixXcd diff =
      (h * h).topLeftCorner(interior, interior) - h2.topLeftCorner(interior, interior);
  EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-9);
}

TEST(OpAddScale, Examples) {
  EXPECT_EQ(scale(HbarCoeff(Rational(1, 2)), Q() * Q() + P() * P()), H());
  EXPECT_EQ(H() + OpPoly(), H());
  EXPECT_TRUE((scale(HbarCoeff(2), Q() * P()) + scale(HbarCoeff(-2), Q() * P())).is_zero());
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator(Q(), P()), scale(i_hbar, identity()));
  EXPECT_TRUE(commutator(Q(), Q() * Q()).is_zero());
  EXPECT_EQ(commutator(H(), Q()), scale(-i_hbar, P()));
}

TEST(Commutator, HamiltonianWithQMatchesFock) {
  constexpr int N = 24;
  const auto q = op_to_matrix(Q(), N, 1).entries;
  const auto h = op_to_matrix(H(), N, 1).entries;
  const auto c = op_to_matrix(commutator(H(), Q()), N, 1).entries;
  const int interior = N - 3;
  EXPECT_LT(((h * q - q * h) - c).topLeftCorner(interior, interior).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(WeylQuantize, Examples) {
  const PhasePoly q2 = PhasePoly::monomial(2, 0);
  EXPECT_EQ(weyl_quantize(q2), OpPoly::monomial(2, 0));
  EXPECT_EQ(weyl_quantize(PhasePoly::monomial(0, 3)), OpPoly::monomial(0, 3));
  const HbarCoeff half_i_hbar = HbarCoeff::term(1, GaussianRational(0, Rational(1, 2)));
  EXPECT_EQ(weyl_quantize(PhasePoly::monomial(1, 1)), Q() * P() - scale(half_i_hbar, identity()));

  const PhasePoly h = scale(HbarCoeff(Rational(1, 2)), q2 + PhasePoly::monomial(0, 2));
  const PhasePoly h2_minus = h * h - PhasePoly::constant(HbarCoeff::term(2, Rational(1, 4)));
  EXPECT_EQ(weyl_quantize(h2_minus), H() * H());
}

TEST(WeylQuantize, PSidedFormulaAgrees) {
  testing::PolyGen gen(11);
  for (int k = 0; k < 100; ++k) {
    const PhasePoly f = gen.symbol(6);
    ASSERT_EQ(weyl_quantize(f), weyl_quantize_p_sided(f));
  }
}

TEST(WeylQuantize, Linear) {
  testing::PolyGen gen(12);
  for (int k = 0; k < 100; ++k) {
    const PhasePoly f = gen.symbol(5), g = gen.symbol(5);
    const HbarCoeff a = gen.coeff(true, 1), b = gen.coeff(true, 1);
    ASSERT_EQ(weyl_quantize(scale(a, f) + scale(b, g)), scale(a, weyl_quantize(f)) + scale(b, weyl_quantize(g)));
  }
}

TEST(WeylQuantize, RealSymbolsGiveHermitianOperators) {
  testing::PolyGen gen(13);
  for (int k = 0; k < 50; ++k) {
    const OpPoly a = weyl_quantize(gen.real_symbol(5));
    ASSERT_EQ(adjoint(a), a);
  }
}

TEST(NormalOrdering, ClosedFormAgreesWithSwapRewriting) {
  testing::PolyGen gen(21);
  for (int k = 0; k < 100; ++k) {
    const OpPoly a = gen.op(4), b = gen.op(4);
    ASSERT_EQ(a * b, testing::multiply_by_swaps(a, b));
  }
}

TEST(NormalOrdering, MultiplicationIsAssociative) {
  testing::PolyGen gen(22);
  for (int k = 0; k < 100; ++k) {
    const OpPoly a = gen.op(4), b = gen.op(4), c = gen.op(4);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(NormalOrdering, CanonicalCommutationRelation) {
  EXPECT_EQ(Q() * P() - P() * Q(), scale(i_hbar, identity()));
}

TEST(Adjoint, ReversesProducts) {
  testing::PolyGen gen(23);
  for (int k = 0; k < 50; ++k) {
    const OpPoly a = gen.op(3), b = gen.op(3);
    ASSERT_EQ(adjoint(a * b), adjoint(b) * adjoint(a));
  }
}

TEST(OracleConsistency, MatrixOfProductIsProductOfMatrices) {
  testing::PolyGen gen(31);
  constexpr int N = 40;
  for (int k = 0; k < 20; ++k) {
    const OpPoly a = gen.op(4), b = gen.op(4);
    const auto ma = op_to_matrix(a, N, 1).entries;
    const auto mb = op_to_matrix(b, N, 1).entries;
    const auto mab = op_to_matrix(a * b, N, 1).entries;
    const int interior = N - static_cast<int>(a.degree() + b.degree()) - 1;
    const Eigen::MatrixXcd lhs = mab.topLeftCorner(interior, interior);
    const Eigen::MatrixXcd rhs = (ma * mb).topLeftCorner(interior, interior);
    ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
  }
}

}  // namespace
}  // namespace wwm
