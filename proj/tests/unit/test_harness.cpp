#include <gtest/gtest.h>

#include "frozen.hpp"
#include "oracles.hpp"
#include "qdiv/ensembles.hpp"
#include "qdiv/harness.hpp"

using namespace qdiv;

namespace {

ProblemInstance commuting_pair() {
  return {"commuting", DensityMatrix(oracle::diag({0.5, 0.5})),
          DensityMatrix(oracle::diag({0.75, 0.25})), std::nullopt};
}

}  // namespace

TEST(Grid, UniformIncludesEndpoints) {
  const Grid g = Grid::uniform(0.0, 1.0, 101);
  EXPECT_EQ(g.points.size(), 101u);
  EXPECT_EQ(g.points.front(), 0.0);
  EXPECT_EQ(g.points.back(), 1.0);
  EXPECT_NEAR(g.step(), 0.01, 1e-16);
  EXPECT_THROW(Grid::uniform(0.0, 1.0, 2), DomainError);
  EXPECT_THROW(Grid::uniform(1.0, 0.0, 5), DomainError);
}

TEST(SecondDifference, SignTracksCurvature) {
  std::vector<double> convex, concave;
  for (int i = 0; i < 11; ++i) {
    const double x = i / 10.0;
    convex.push_back(std::exp(x * x));
    concave.push_back(std::exp(-x * x));
  }
  EXPECT_NEAR(min_log_second_difference(convex), 2.0 * 0.01, 1e-12);
  EXPECT_NEAR(min_log_second_difference(concave), -2.0 * 0.01, 1e-12);
  EXPECT_THROW(min_log_second_difference({1.0, 0.0, 1.0}), DomainError);
  EXPECT_EQ(min_forward_difference({1.0, 3.0, 2.5}), -0.5);
}

TEST(InstanceNames, RoundTrip) {
  for (auto c : {LogConvexCurve::ThetaDivergence, LogConvexCurve::FTheta,
                 LogConvexCurve::SandwichedF, LogConvexCurve::RecoveryProbe,
                 LogConvexCurve::StatePower}) {
    EXPECT_EQ(parse_logconvex_curve(to_string(c)), c);
  }
  for (auto c : {MonotoneCurve::RenyiTheta, MonotoneCurve::SandwichedRenyi,
                 MonotoneCurve::DeltaTilde, MonotoneCurve::SecantFTheta}) {
    EXPECT_EQ(parse_monotone_curve(to_string(c)), c);
  }
  EXPECT_FALSE(parse_logconvex_curve("nope").has_value());
}

TEST(ProblemInstance, ValidateRejectsMismatch) {
  ProblemInstance inst{"bad", random_state(2, 2, 1), random_state(3, 3, 2), std::nullopt};
  EXPECT_THROW(inst.validate(), DimensionError);
  ProblemInstance chan{"bad", random_state(3, 3, 1), random_state(3, 3, 2), identity_channel(2)};
  EXPECT_THROW(chan.validate(), DimensionError);
}

TEST(LogConvexityScan, PassesOnRandomInstance) {
  const ProblemInstance inst = random_pd_instance(3, 5);
  for (auto c : {LogConvexCurve::ThetaDivergence, LogConvexCurve::FTheta,
                 LogConvexCurve::StatePower}) {
    const ScanReport r = logconvexity_scan(c, inst, Grid::uniform(0.0, 1.0, 51));
    EXPECT_TRUE(r.passed()) << r.curve << " " << *r.min_logconvexity_slack;
    EXPECT_FALSE(r.failure_is_finding);
  }
  EXPECT_TRUE(logconvexity_scan(LogConvexCurve::SandwichedF, inst, Grid::uniform(0.5, 1.0, 51))
                  .passed());
  EXPECT_THROW(
      logconvexity_scan(LogConvexCurve::SandwichedF, inst, Grid::uniform(0.2, 1.0, 11)),
      DomainError);
}

TEST(LogConvexityScan, RecoveryProbeFailsOnBuiltinExample) {
  const ScanReport r = logconvexity_scan(LogConvexCurve::RecoveryProbe, paper_example(),
                                         Grid::uniform(0.0, 1.0, 101));
  EXPECT_TRUE(r.failure_is_finding);
  EXPECT_FALSE(r.passed());
  EXPECT_LT(*r.min_logconvexity_slack, -1e-6);
}

TEST(MonotonicityScan, DeltaTildeDecreasesOnBuiltinExample) {
  const ScanReport r = monotonicity_scan(MonotoneCurve::DeltaTilde, paper_example(),
                                         Grid::uniform(0.5, 0.999, 101));
  EXPECT_TRUE(r.failure_is_finding);
  EXPECT_FALSE(r.passed());
  EXPECT_GE(r.values.front() - r.values.back(), 0.01);
  EXPECT_THROW(monotonicity_scan(MonotoneCurve::RenyiTheta, paper_example(),
                                 Grid::uniform(0.0, 1.0, 11)),
               DomainError);
}

TEST(SecantLimit, CommutingPairTargetsScalarKl) {
  const std::vector<double> hs{1e-1, 1e-2, 1e-3};
  for (auto q : {LimitQuantity::RenyiTheta, LimitQuantity::LnFThetaSecant,
                 LimitQuantity::SandwichedRenyi}) {
    const LimitReport r = secant_limit_check(q, commuting_pair(), hs);
    EXPECT_NEAR(r.target, oracle::kl({0.5, 0.5}, {0.75, 0.25}), 1e-15);
    EXPECT_TRUE(r.passed()) << r.quantity;
    EXPECT_LT(r.target - r.values.back(), 1e-3);
  }
  EXPECT_THROW(secant_limit_check(LimitQuantity::RenyiTheta, commuting_pair(), {1e-2, 1e-1}),
               DomainError);
}

TEST(SecantLimit, DeltaTildeNearTargetOnBuiltinExample) {
  const LimitReport r =
      secant_limit_check(LimitQuantity::DeltaTilde, paper_example(), {1e-1, 1e-2, 1e-3});
  EXPECT_NEAR(r.target, frozen::kRed, 1e-12);
  EXPECT_LT(std::abs(r.values.back() - r.target), 0.01);
}

TEST(InequalitySuite, AllPassOnEachStratum) {
  for (int stratum = 0; stratum < 3; ++stratum) {
    const ProblemInstance inst = stratified_instance(3, 100 + stratum, stratum);
    for (const CheckRecord& c : inequality_suite(inst)) {
      EXPECT_TRUE(c.pass) << inst.label << " " << c.name << " slack " << c.slack;
    }
  }
}

TEST(PinchingWitness, DichotomyAroundOneHalf) {
  EXPECT_FALSE(theorem6_construction(0.5).has_value());
  for (int k = 2; k <= 18; ++k) {
    if (k == 10) continue;
    const auto rec = theorem6_construction(k / 20.0);
    ASSERT_TRUE(rec.has_value()) << k;
    EXPECT_TRUE(rec->violation) << k;
    EXPECT_GT(rec->margin, 0.0);
    EXPECT_NEAR(recompute_margin(*rec), rec->margin, 1e-12);
  }
  EXPECT_THROW(theorem6_construction(1.0), DomainError);
}

TEST(PinchingWitness, ThreeQuartersClosedForm) {
  const auto rec = theorem6_construction(0.75);
  ASSERT_TRUE(rec);
  // Pinched pair: diag(1/2,1/2) vs diag(1,0) gives (1/2)^{3/4}.
  EXPECT_NEAR(rec->rhs, std::pow(2.0, -0.75), 1e-14);
  EXPECT_NEAR(rec->lhs, frozen::kPinchingWitnessUnpinched, 1e-9);
  // Unpinched: A^{3/4} e₁ has norm ‖A^{3/4}e₁‖ with A eigenvalues 3/4, 1/4.
  const double l1 = std::pow(0.75, 0.75), l2 = std::pow(0.25, 0.75);
  EXPECT_NEAR(rec->lhs, std::sqrt((l1 * l1 + l2 * l2) / 2.0), 1e-13);
}

TEST(BuiltinCounterexample, ViolatesWithExpectedValues) {
  const CounterexampleRecord rec = reproduce_paper_counterexample();
  EXPECT_TRUE(rec.violation);
  EXPECT_NEAR(rec.lhs, frozen::kRoundedLhs, 2e-3);
  EXPECT_NEAR(rec.rhs, frozen::kRoundedRhs, 2e-3);
  EXPECT_GT(rec.margin, 0.01);
  EXPECT_NEAR(recompute_margin(rec), rec.margin, 1e-14);
}

TEST(ConjectureSearch, DeterministicAcrossWorkerCounts) {
  SearchConfig cfg;
  cfg.trials = 30;
  cfg.seed = 7;
  cfg.include_paper_instance = true;
  cfg.workers = 1;
  const auto serial = conjecture_search(cfg);
  cfg.workers = 4;
  const auto parallel = conjecture_search(cfg);
  ASSERT_EQ(serial.size(), parallel.size());
  ASSERT_FALSE(serial.empty());
  EXPECT_EQ(serial.front().label, "paper-example");
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].seed, parallel[i].seed);
    EXPECT_EQ(serial[i].margin, parallel[i].margin);
  }
  cfg.conjecture = "eq5";
  EXPECT_THROW(conjecture_search(cfg), DomainError);
}

TEST(ConjectureSearch, EqualPairsNeverViolate) {
  SearchConfig cfg;
  cfg.trials = 12;
  cfg.ensemble = SearchEnsemble::EqualPairs;
  EXPECT_TRUE(conjecture_search(cfg).empty());
}

TEST(RotatedScan, ZeroRotationIsPetz) {
  const ProblemInstance inst = paper_example();
  const RotatedScanReport r = rotated_scan(inst, Grid::uniform(-1.0, 1.0, 21));
  EXPECT_NEAR(r.fidelities[10], frozen::kPetzFidelity, 1e-12);
  EXPECT_GE(r.max_fidelity, r.fidelities[10]);
  EXPECT_NEAR(r.rhs, frozen::kRed, 1e-12);
}

TEST(CompleteBasis, UnitaryWithGivenFirstColumn) {
  const Vector x = random_unit_vector(4, 3);
  const Matrix u = complete_basis(x);
  EXPECT_LT(max_abs(u.adjoint() * u - Matrix::Identity(4, 4)), 1e-13);
  EXPECT_LT((u.col(0) - x).norm(), 1e-15);
}

TEST(SpectralPinching, RankOneCheckPasses) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const Index n = 2 + static_cast<Index>(s % 3);
    const Theorem9Report r = theorem9_check(random_state(n, n, s), random_unit_vector(n, s),
                                            Grid::uniform(0.0, 1.0, 21));
    EXPECT_TRUE(r.pass) << s << " " << r.inequality_slack << " " << r.max_g_discrepancy;
  }
}

TEST(ClassicalOracle, MatchesThetaDivergenceOnDiagonalPairs) {
  const std::vector<double> p{0.1, 0.2, 0.7}, q{0.3, 0.3, 0.4};
  const std::vector<double> w(3, 1.0 / 3.0);
  std::vector<double> x, y;
  for (int i = 0; i < 3; ++i) x.push_back(3.0 * p[i]), y.push_back(3.0 * q[i]);
  const Grid g = Grid::uniform(0.0, 1.0, 11);
  const ScanReport r = classical_lemma1_oracle(w, x, y, g);
  const DensityMatrix a(oracle::diag({0.1, 0.2, 0.7})), b(oracle::diag({0.3, 0.3, 0.4}));
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    EXPECT_NEAR(r.values[i], theta_divergence(a, b, g.points[i]), 1e-12);
  }
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(classical_lemma1_oracle({0.5, 0.6}, {1, 1}, {1, 1}, g), DomainError);
}

TEST(ClassicalRecovery, IdentityAndConstantChannels) {
  const std::vector<double> p{0.2, 0.8}, q{0.5, 0.5};
  const ClassicalRecoveryRecord id = classical_recovery_check(p, q, Eigen::MatrixXd::Identity(2, 2));
  EXPECT_NEAR(id.lhs, 0.0, 1e-14);
  EXPECT_NEAR(id.rhs, 0.0, 1e-14);
  EXPECT_TRUE(id.pass);
  // Constant channel forgets everything: recovery returns q, rhs is KL(p‖q).
  const ClassicalRecoveryRecord flat = classical_recovery_check(p, q, Eigen::MatrixXd::Ones(1, 2));
  const double bc = std::sqrt(0.2 * 0.5) + std::sqrt(0.8 * 0.5);
  EXPECT_NEAR(flat.lhs, -2.0 * std::log(bc), 1e-14);
  EXPECT_NEAR(flat.rhs, oracle::kl(p, q), 1e-14);
  EXPECT_TRUE(flat.pass);
}
