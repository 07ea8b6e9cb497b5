#include <gtest/gtest.h>

#include "frozen.hpp"
#include "oracles.hpp"
#include "qdiv/harness.hpp"

using namespace qdiv;

namespace {

struct Pair {
  DensityMatrix a;
  DensityMatrix b;
};

Pair random_pair(Index n, std::uint64_t seed) {
  return {random_state(n, n, 2 * seed + 1), random_state(n, n, 2 * seed + 2)};
}

}  // namespace

TEST(RelativeEntropy, MatchesMatrixLogOracle) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Pair p = random_pair(3 + s % 2, s);
    const DivergenceValue d = relative_entropy(p.a, p.b);
    ASSERT_TRUE(d.finite);
    EXPECT_NEAR(d.value, oracle::relative_entropy_pd(p.a.matrix(), p.b.matrix()), 1e-10);
  }
}

TEST(RelativeEntropy, CommutingPairIsScalarKl) {
  const DensityMatrix a(oracle::diag({0.5, 0.5}));
  const DensityMatrix b(oracle::diag({0.75, 0.25}));
  EXPECT_NEAR(relative_entropy(a, b).value, oracle::kl({0.5, 0.5}, {0.75, 0.25}), 1e-15);
  EXPECT_NEAR(relative_entropy(a, b).value, 0.143841036225890, 1e-12);
}

TEST(RelativeEntropy, InfiniteOutsideSupportAndZeroOnSelf) {
  const DensityMatrix a(oracle::diag({0.5, 0.5}));
  const DensityMatrix b(oracle::diag({1.0, 0.0}));
  EXPECT_FALSE(relative_entropy(a, b).finite);
  EXPECT_TRUE(std::isinf(relative_entropy(a, b).value));
  EXPECT_TRUE(relative_entropy(b, a).finite);
  EXPECT_NEAR(relative_entropy(b, a).value, std::log(2.0), 1e-15);
  const DensityMatrix rho = random_state(4, 2, 3);
  EXPECT_NEAR(relative_entropy(rho, rho).value, 0.0, 1e-12);
}

TEST(RelativeEntropy, BuiltinExampleValues) {
  const ProblemInstance inst = paper_example();
  EXPECT_NEAR(relative_entropy(inst.a, inst.b).value, frozen::kRelativeEntropy, 1e-12);
  const KrausChannel ch = *inst.channel;
  EXPECT_NEAR(relative_entropy(qdiv::apply(ch, inst.a), qdiv::apply(ch, inst.b)).value,
              frozen::kImageRelativeEntropy, 1e-12);
  EXPECT_NEAR(relative_entropy_difference(inst.a, inst.b, ch).value, frozen::kRed, 1e-12);
}

TEST(ThetaDivergence, EndpointsAndCommutingClosedForm) {
  const Pair p = random_pair(3, 7);
  EXPECT_NEAR(theta_divergence(p.a, p.b, 0.0), 1.0, 1e-13);
  EXPECT_NEAR(theta_divergence(p.a, p.b, 1.0), 1.0, 1e-13);
  const DensityMatrix a(oracle::diag({0.2, 0.3, 0.5}));
  const DensityMatrix b(oracle::diag({0.6, 0.1, 0.3}));
  for (double th : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(theta_divergence(a, b, th),
                oracle::classical_theta({0.2, 0.3, 0.5}, {0.6, 0.1, 0.3}, th), 1e-14);
  }
  EXPECT_THROW(theta_divergence(a, b, 1.5), DomainError);
  EXPECT_THROW(theta_divergence(a, b, -0.1), DomainError);
}

TEST(ThetaDivergence, MatchesMatrixPowerOracle) {
  const Pair p = random_pair(4, 9);
  const double expected =
      (oracle::powm(p.a.matrix(), 0.3) * oracle::powm(p.b.matrix(), 0.7)).trace().real();
  EXPECT_NEAR(theta_divergence(p.a, p.b, 0.3), expected, 1e-11);
}

TEST(RenyiTheta, BelowRelativeEntropyAndExcludesOne) {
  const Pair p = random_pair(3, 4);
  const double d = relative_entropy(p.a, p.b).value;
  EXPECT_LT(renyi_theta(p.a, p.b, 0.9).value, d);
  EXPECT_NEAR(renyi_theta(p.a, p.b, 0.0).value, 0.0, 1e-13);
  EXPECT_THROW(renyi_theta(p.a, p.b, 1.0), DomainError);
  const DensityMatrix x(oracle::diag({1.0, 0.0}));
  const DensityMatrix y(oracle::diag({0.0, 1.0}));
  EXPECT_FALSE(renyi_theta(x, y, 0.5).finite);
}

TEST(Fidelity, MatchesSqrtOracleAndQubitClosedForm) {
  const Pair p = random_pair(4, 5);
  EXPECT_NEAR(fidelity(p.a, p.b), oracle::fidelity_pd(p.a.matrix(), p.b.matrix()), 1e-11);
  const Pair q = random_pair(2, 6);
  const Matrix ra = oracle::sqrt2x2(q.a.matrix());
  const double closed = oracle::sqrt2x2(ra * q.b.matrix() * ra).trace().real();
  EXPECT_NEAR(fidelity(q.a, q.b), closed, 1e-13);
  EXPECT_NEAR(fidelity(q.a, q.b), fidelity(q.b, q.a), 1e-13);
  EXPECT_NEAR(fidelity(q.a, q.a), 1.0, 1e-13);
}

TEST(Fidelity, PureStatesGiveOverlap) {
  Vector u(2), v(2);
  u << 1.0, 0.0;
  v << std::sqrt(0.3), std::sqrt(0.7);
  const DensityMatrix a(Matrix(u * u.adjoint()));
  const DensityMatrix b(Matrix(v * v.adjoint()));
  EXPECT_NEAR(fidelity(a, b), std::sqrt(0.3), 1e-14);
}

TEST(FTheta, HalfIsFidelityAndMatchesOracle) {
  const Pair p = random_pair(3, 8);
  EXPECT_NEAR(f_theta(p.a, p.b, 0.5), fidelity(p.a, p.b), 1e-13);
  const Matrix prod = oracle::powm(p.a.matrix(), 0.7) * oracle::powm(p.b.matrix(), 0.3);
  EXPECT_NEAR(f_theta(p.a, p.b, 0.7), oracle::schatten(prod, 1.0), 1e-11);
}

TEST(VonNeumannBound, SortedSpectraSum) {
  const DensityMatrix a(oracle::diag({0.1, 0.9}));
  const DensityMatrix b(oracle::diag({0.3, 0.7}));
  const double expected = std::pow(0.9, 0.4) * std::pow(0.7, 0.6) + std::pow(0.1, 0.4) * std::pow(0.3, 0.6);
  EXPECT_NEAR(vn_upper_bound(a, b, 0.4), expected, 1e-15);
}

TEST(SandwichedF, HalfIsFidelityAndCommutingReducesToTheta) {
  const Pair p = random_pair(3, 10);
  EXPECT_NEAR(sandwiched_f(p.a, p.b, 0.5), fidelity(p.a, p.b), 1e-12);
  EXPECT_NEAR(sandwiched_f(p.a, p.b, 1.0), 1.0, 1e-13);
  const DensityMatrix a(oracle::diag({0.2, 0.8}));
  const DensityMatrix b(oracle::diag({0.5, 0.5}));
  EXPECT_NEAR(sandwiched_f(a, b, 0.7), theta_divergence(a, b, 0.7), 1e-14);
}

TEST(SandwichedF, MatchesMatrixPowerOracle) {
  const Pair p = random_pair(3, 12);
  const double t = 0.8;
  const Matrix side = oracle::powm(p.b.matrix(), (1 - t) / (2 * t));
  const Matrix inner = side * p.a.matrix() * side;
  EXPECT_NEAR(sandwiched_f(p.a, p.b, t), oracle::powm(inner, t).trace().real(), 1e-11);
}

TEST(SandwichedF, RequiresSupportContainment) {
  const DensityMatrix a(oracle::diag({0.5, 0.5}));
  const DensityMatrix b(oracle::diag({1.0, 0.0}));
  EXPECT_THROW(sandwiched_f(a, b, 0.7), SupportError);
  EXPECT_THROW(sandwiched_renyi(b, a, 1.0), DomainError);
}

TEST(SandwichedRenyi, ApproachesRelativeEntropy) {
  const Pair p = random_pair(3, 13);
  const double d = relative_entropy(p.a, p.b).value;
  EXPECT_NEAR(sandwiched_renyi(p.a, p.b, 1.0 - 1e-5).value, d, 1e-4);
  EXPECT_LE(sandwiched_renyi(p.a, p.b, 0.99).value, d);
}

TEST(RecoverabilityLoss, BuiltinExampleValues) {
  const ProblemInstance inst = paper_example();
  EXPECT_NEAR(petz_fidelity_loss(inst.a, inst.b, *inst.channel), frozen::kPetzLoss, 1e-12);
  EXPECT_NEAR(std::abs(petz_fidelity_loss(inst.a, inst.b, *inst.channel) - frozen::kRoundedLhs),
              0.0, 5e-5);
  EXPECT_NEAR(std::abs(frozen::kRed - frozen::kRoundedRhs), 0.0, 5e-5);
}

TEST(RecoverabilityLoss, IdentityChannelLosesNothing) {
  const Pair p = random_pair(3, 14);
  EXPECT_NEAR(petz_fidelity_loss(p.a, p.b, identity_channel(3)), 0.0, 1e-11);
  EXPECT_NEAR(relative_entropy_difference(p.a, p.b, identity_channel(3)).value, 0.0, 1e-13);
}

TEST(DeltaTilde, TraceFormMatchesDilation) {
  for (std::uint64_t s = 0; s < 4; ++s) {
    const Pair p = random_pair(3, 20 + s);
    const KrausChannel ch = random_channel(3, 2, 2, 30 + s);
    for (double t : {0.5, 0.7, 0.95}) {
      EXPECT_NEAR(delta_tilde(p.a, p.b, ch, t).value, delta_tilde_dilated(p.a, p.b, ch, t).value,
                  1e-10);
    }
  }
}

TEST(DeltaTilde, HalfEqualsPetzFidelityLoss) {
  const Pair p = random_pair(3, 3);
  const KrausChannel ch = random_channel(3, 3, 2, 3);
  EXPECT_NEAR(delta_tilde(p.a, p.b, ch, 0.5).value, petz_fidelity_loss(p.a, p.b, ch), 1e-11);
}

TEST(DeltaTilde, BuiltinExampleCurveValues) {
  const ProblemInstance inst = paper_example();
  const KrausChannel& ch = *inst.channel;
  EXPECT_NEAR(delta_tilde(inst.a, inst.b, ch, 0.5).value, frozen::kPetzLoss, 1e-12);
  EXPECT_NEAR(delta_tilde(inst.a, inst.b, ch, 0.9).value, frozen::kDeltaTilde09, 1e-9);
  EXPECT_NEAR(delta_tilde(inst.a, inst.b, ch, 0.99).value, frozen::kDeltaTilde099, 1e-9);
  EXPECT_NEAR(delta_tilde(inst.a, inst.b, ch, 0.999).value, frozen::kDeltaTilde0999, 1e-9);
}

TEST(DeltaTilde, DomainAndWellPosedness) {
  const ProblemInstance inst = paper_example();
  EXPECT_THROW(delta_tilde(inst.a, inst.b, *inst.channel, 0.4), DomainError);
  EXPECT_THROW(delta_tilde(inst.a, inst.b, *inst.channel, 1.0), DomainError);
  const DensityMatrix singular(oracle::diag({1.0, 0.0}));
  EXPECT_THROW(delta_tilde(singular, singular, *inst.channel, 0.7), IllPosedError);
}

TEST(RecoveryProbe, EndpointsMatchNorms) {
  const ProblemInstance inst = paper_example();
  const KrausChannel& ch = *inst.channel;
  // θ = 0: ‖V A^{1/2}‖₂ = 1.
  EXPECT_NEAR(recovery_probe(inst.a, inst.b, ch, 0.0), 1.0, 1e-13);
  // θ = 1 recovers the Petz fidelity.
  EXPECT_NEAR(recovery_probe(inst.a, inst.b, ch, 1.0), frozen::kPetzFidelity, 1e-12);
}

TEST(StatePower, MatchesMatrixPowerOracle) {
  const DensityMatrix rho = random_state(3, 2, 1);
  const Matrix x = 3.0 * random_state(3, 3, 2).matrix();
  const double expected = (rho.matrix() * oracle::powm(x, 0.4)).trace().real();
  EXPECT_NEAR(state_power(rho, HermitianMatrix(x), 0.4), expected, 1e-12);
  EXPECT_THROW(state_power(rho, HermitianMatrix(oracle::diag({1.0, 0.0, 1.0})), 0.5), DomainError);
}

TEST(StateFunctionalGap, CommutingCaseAndScaling) {
  // ρ and x diagonal: every functional is a weighted scalar sum.
  const DensityMatrix rho(oracle::diag({0.25, 0.75}));
  const HermitianMatrix x(oracle::diag({2.0, 0.5}));
  const double fx = 0.25 * 2.0 + 0.75 * 0.5;
  const double fsx = 0.25 * std::sqrt(2.0) + 0.75 * std::sqrt(0.5);
  const double fxlx = 0.25 * 2.0 * std::log(2.0) + 0.75 * 0.5 * std::log(0.5);
  const double rhs = fx * (std::log(fx) + 2.0 * (0.5 * std::log(fx) - std::log(fsx)));
  EXPECT_NEAR(corollary3_rhs(rho, x), rhs, 1e-15);
  EXPECT_NEAR(corollary3_gap(rho, x), fxlx - rhs, 1e-15);
  EXPECT_GE(corollary3_gap(rho, x), 0.0);
  EXPECT_NEAR(corollary3_gap(rho, HermitianMatrix(oracle::diag({3.0, 3.0}))), 0.0, 1e-14);
}
