#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdiv/quantum.hpp"

using namespace qdiv;

namespace {

Matrix random_pd(Index n, std::uint64_t seed) { return random_state(n, n, seed).matrix(); }

}  // namespace

TEST(Tolerances, RejectNonPositive) {
  Tolerances t;
  EXPECT_NO_THROW(t.validate());
  t.trace = 0.0;
  EXPECT_THROW(t.validate(), DomainError);
  t = {};
  t.support_clip = std::nan("");
  EXPECT_THROW(t.validate(), DomainError);
}

TEST(HermitianMatrix, ValidatesShapeAndSymmetry) {
  EXPECT_THROW(HermitianMatrix(Matrix::Zero(2, 3)), DimensionError);
  Matrix m(2, 2);
  m << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0;
  EXPECT_THROW(HermitianMatrix{m}, ValidationError);
  m(1, 0) = Complex(0.0, -1.0);
  EXPECT_NO_THROW(HermitianMatrix{m});
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(HermitianMatrix{m}, ValidationError);
}

TEST(HermitianMatrix, HermitizedAveragesTheAdjoint) {
  Matrix m(2, 2);
  m << 1.0, 2.0, 0.0, 3.0;
  const HermitianMatrix h = HermitianMatrix::hermitized(m);
  EXPECT_DOUBLE_EQ(h.matrix()(0, 1).real(), 1.0);
  EXPECT_DOUBLE_EQ(h.matrix()(1, 0).real(), 1.0);
}

TEST(HermitianEig, NonIncreasingAndReconstructs) {
  const Matrix m = random_pd(5, 3);
  const SpectralDecomposition spec = hermitian_eig(HermitianMatrix(m));
  for (Index i = 1; i < spec.dim(); ++i) {
    EXPECT_GE(spec.eigenvalues(i - 1), spec.eigenvalues(i));
  }
  EXPECT_LT(max_abs(spec.reconstruct() - m), 1e-14);
  const Matrix gram = spec.eigenvectors.adjoint() * spec.eigenvectors;
  EXPECT_LT(max_abs(gram - Matrix::Identity(5, 5)), 1e-13);
}

TEST(PsdSupport, RejectsNegativeEigenvalues) {
  const auto spec = hermitian_eig(HermitianMatrix(oracle::diag({1.0, -1e-3})));
  EXPECT_THROW(psd_support(spec), NotPsdError);
  const auto tiny = hermitian_eig(HermitianMatrix(oracle::diag({1.0, -1e-15})));
  EXPECT_EQ(psd_support(tiny).rank, 1);
}

TEST(MatPower, MatchesSchurPade) {
  const Matrix m = random_pd(4, 11);
  const HermitianMatrix h(m);
  for (double p : {0.5, -0.5, 0.3, 1.7, -1.0}) {
    EXPECT_LT(max_abs(mat_power(h, Complex(p, 0.0)) - oracle::powm(m, p)), 1e-10) << p;
  }
  EXPECT_LT(max_abs(mat_power(h, Complex(0.5, 0.0)) - oracle::sqrtm(m)), 1e-12);
}

TEST(MatPower, ImaginaryExponentIsUnitaryOnFullRank) {
  const Matrix m = random_pd(3, 5);
  const Matrix u = mat_power(HermitianMatrix(m), Complex(0.0, 0.7));
  EXPECT_LT(max_abs(u * u.adjoint() - Matrix::Identity(3, 3)), 1e-12);
  const Matrix expected = (Complex(0.0, 0.7) * oracle::logm(m)).exp();
  EXPECT_LT(max_abs(u - expected), 1e-10);
}

TEST(MatPower, ZeroExponentIsSupportProjector) {
  const Matrix m = oracle::diag({0.6, 0.4, 0.0});
  const Matrix p = mat_power(HermitianMatrix(m), Complex(0.0, 0.0));
  EXPECT_LT(max_abs(p - oracle::diag({1.0, 1.0, 0.0})), 1e-15);
  const Matrix inv = mat_power(HermitianMatrix(m), Complex(-1.0, 0.0));
  EXPECT_NEAR(inv(0, 0).real(), 1.0 / 0.6, 1e-14);
  EXPECT_EQ(inv(2, 2), Complex(0.0, 0.0));
}

TEST(MatLog, MatchesSchurPadeAndVanishesOnKernel) {
  const Matrix m = random_pd(4, 17);
  EXPECT_LT(max_abs(mat_log_support(HermitianMatrix(m)).matrix() - oracle::logm(m)), 1e-10);
  const HermitianMatrix l = mat_log_support(HermitianMatrix(oracle::diag({0.25, 0.0})));
  EXPECT_NEAR(l.matrix()(0, 0).real(), std::log(0.25), 1e-15);
  EXPECT_EQ(l.matrix()(1, 1), Complex(0.0, 0.0));
}

TEST(SchattenNorm, MatchesSvdOracle) {
  Matrix m = Matrix::Random(3, 4);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    EXPECT_NEAR(schatten_norm(m, p), oracle::schatten(m, p), 1e-12) << p;
  }
  EXPECT_NEAR(schatten_norm(m, 2.0), m.norm(), 1e-12);
  EXPECT_THROW(schatten_norm(m, 0.0), DomainError);
  EXPECT_THROW(schatten_norm(m, -1.0), DomainError);
}

TEST(TraceNorm, OfRankOneOuterProduct) {
  Vector u(2), v(2);
  u << 3.0, 4.0;
  v << 1.0, 0.0;
  EXPECT_NEAR(trace_norm(u * v.adjoint()), 5.0, 1e-14);
}

TEST(Kron, MatchesKroneckerProduct) {
  const Matrix a = Matrix::Random(2, 3);
  const Matrix b = Matrix::Random(3, 2);
  EXPECT_EQ(max_abs(kron(a, b) - oracle::kron(a, b)), 0.0);
}

TEST(PartialTrace, MatchesIndexLoops) {
  const Matrix m = Matrix::Random(6, 6);
  EXPECT_LT(max_abs(partial_trace(m, 2, 3, TraceOut::Second) - oracle::trace_out_second(m, 2, 3)),
            1e-14);
  EXPECT_LT(max_abs(partial_trace(m, 2, 3, TraceOut::First) - oracle::trace_out_first(m, 2, 3)),
            1e-14);
  const Matrix a = random_pd(2, 1), b = random_pd(3, 2);
  EXPECT_LT(max_abs(partial_trace(kron(a, b), 2, 3, TraceOut::First) - b), 1e-14);
  EXPECT_THROW(partial_trace(m, 2, 2, TraceOut::First), DimensionError);
}

TEST(Pinch, ZeroesOffDiagonalInGivenBasis) {
  const Matrix m = random_pd(3, 4);
  const HermitianMatrix p = pinch(HermitianMatrix(m), Matrix::Identity(3, 3));
  EXPECT_LT(max_abs(p.matrix() - Matrix(m.diagonal().asDiagonal())), 1e-15);

  const SpectralDecomposition spec = hermitian_eig(HermitianMatrix(m));
  const HermitianMatrix self = pinch(HermitianMatrix(m), spec.eigenvectors);
  EXPECT_LT(max_abs(self.matrix() - m), 1e-13);

  EXPECT_THROW(pinch(HermitianMatrix(m), 2.0 * Matrix::Identity(3, 3)), ValidationError);
}

TEST(RealTrace, RejectsLargeImaginaryPart) {
  Matrix m = Matrix::Identity(2, 2);
  EXPECT_DOUBLE_EQ(real_trace(m), 2.0);
  m(0, 0) = Complex(1.0, 1e-3);
  EXPECT_THROW(real_trace(m), NumericalError);
}
