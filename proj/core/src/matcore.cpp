#include "qdiv/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdiv {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

void require_finite(const Matrix& m, const char* what) {
  if (!all_finite(m)) throw ValidationError(std::string(what) + ": non-finite entry");
}

}  // namespace

void Tolerances::validate() const {
  for (double v : {hermiticity, recon, support_clip, trace}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("tolerances must be strictly positive and finite");
    }
  }
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

HermitianMatrix::HermitianMatrix(Matrix m, const Tolerances& tol) : m_(std::move(m)) {
  require_square(m_, "HermitianMatrix");
  require_finite(m_, "HermitianMatrix");
  const double asym = max_abs(m_ - m_.adjoint());
  if (asym > tol.hermiticity * (1.0 + max_abs(m_))) {
    std::ostringstream os;
    os << "HermitianMatrix: ‖M − M*‖_max = " << asym << " exceeds tolerance";
    throw ValidationError(os.str());
  }
}

HermitianMatrix HermitianMatrix::hermitized(const Matrix& m) {
  require_square(m, "HermitianMatrix");
  require_finite(m, "HermitianMatrix");
  Matrix h = 0.5 * (m + m.adjoint());
  return HermitianMatrix(std::move(h), Unchecked{});
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition hermitian_eig(const HermitianMatrix& m) {
  const Index n = m.dim();
  SpectralDecomposition out;
  if (n == 0) return out;
  const Matrix h = 0.5 * (m.matrix() + m.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw NumericalError("hermitian_eig: eigensolver failed");
  // Eigen sorts ascending; reverse to non-increasing.
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

SupportInfo psd_support(const SpectralDecomposition& spec, const Tolerances& tol) {
  SupportInfo info;
  if (spec.dim() == 0) return info;
  const double lmax = spec.eigenvalues.maxCoeff();
  const double scale = spec.eigenvalues.cwiseAbs().maxCoeff();
  const double lmin = spec.eigenvalues.minCoeff();
  if (lmin < -tol.support_clip * scale) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite (eigenvalue " << lmin << ")";
    throw NotPsdError(os.str());
  }
  info.threshold = tol.support_clip * std::max(lmax, 0.0);
  for (Index i = 0; i < spec.dim(); ++i) {
    if (info.in_support(spec.eigenvalues(i))) ++info.rank;
  }
  return info;
}

Matrix spectral_apply(const SpectralDecomposition& spec,
                      const std::function<Complex(double)>& f, const Tolerances& tol) {
  const SupportInfo support = psd_support(spec, tol);
  Vector d(spec.dim());
  for (Index i = 0; i < spec.dim(); ++i) {
    const double l = spec.eigenvalues(i);
    d(i) = support.in_support(l) ? f(l) : Complex(0.0);
  }
  return spec.eigenvectors * d.asDiagonal() * spec.eigenvectors.adjoint();
}

Matrix mat_power(const SpectralDecomposition& spec, Complex z, const Tolerances& tol) {
  Matrix out = spectral_apply(
      spec, [z](double l) { return std::exp(z * std::log(l)); }, tol);
  if (z.imag() == 0.0) out = 0.5 * (out + out.adjoint()).eval();
  return out;
}

Matrix mat_power(const HermitianMatrix& m, Complex z, const Tolerances& tol) {
  return mat_power(hermitian_eig(m), z, tol);
}

HermitianMatrix real_power(const SpectralDecomposition& spec, double z, const Tolerances& tol) {
  return HermitianMatrix::hermitized(mat_power(spec, Complex(z, 0.0), tol));
}

HermitianMatrix real_power(const HermitianMatrix& m, double z, const Tolerances& tol) {
  return real_power(hermitian_eig(m), z, tol);
}

HermitianMatrix mat_log_support(const SpectralDecomposition& spec, const Tolerances& tol) {
  return HermitianMatrix::hermitized(
      spectral_apply(spec, [](double l) { return Complex(std::log(l)); }, tol));
}

HermitianMatrix mat_log_support(const HermitianMatrix& m, const Tolerances& tol) {
  return mat_log_support(hermitian_eig(m), tol);
}

HermitianMatrix support_projector(const SpectralDecomposition& spec, const Tolerances& tol) {
  return HermitianMatrix::hermitized(
      spectral_apply(spec, [](double) { return Complex(1.0); }, tol));
}

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

double schatten_norm(const Matrix& m, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("schatten_norm: p must be positive and finite");
  }
  const RealVector s = singular_values(m);
  if (p == 1.0) return s.sum();
  double acc = 0.0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > 0.0) acc += std::pow(s(i), p);
  }
  return std::pow(acc, 1.0 / p);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& m, Index dim_first, Index dim_second, TraceOut which) {
  if (dim_first <= 0 || dim_second <= 0 || m.rows() != dim_first * dim_second ||
      m.cols() != dim_first * dim_second) {
    std::ostringstream os;
    os << "partial_trace: " << m.rows() << "x" << m.cols() << " matrix is not on C^"
       << dim_first << " ⊗ C^" << dim_second;
    throw DimensionError(os.str());
  }
  const Index k = dim_second;
  if (which == TraceOut::First) {
    Matrix out = Matrix::Zero(k, k);
    for (Index i = 0; i < dim_first; ++i) out += m.block(i * k, i * k, k, k);
    return out;
  }
  Matrix out(dim_first, dim_first);
  for (Index i = 0; i < dim_first; ++i) {
    for (Index j = 0; j < dim_first; ++j) out(i, j) = m.block(i * k, j * k, k, k).trace();
  }
  return out;
}

void require_orthonormal_basis(const Matrix& basis, const Tolerances& tol) {
  require_square(basis, "basis");
  require_finite(basis, "basis");
  const Index n = basis.rows();
  const double err = max_abs(basis.adjoint() * basis - Matrix::Identity(n, n));
  if (err > tol.recon) {
    std::ostringstream os;
    os << "basis is not orthonormal (‖V*V − I‖_max = " << err << ")";
    throw ValidationError(os.str());
  }
}

HermitianMatrix pinch(const HermitianMatrix& m, const Matrix& basis, const Tolerances& tol) {
  require_orthonormal_basis(basis, tol);
  if (basis.rows() != m.dim()) throw DimensionError("pinch: basis dimension mismatch");
  // Σ vᵢvᵢ* M vᵢvᵢ* = V diag(⟨vᵢ, M vᵢ⟩) V*.
  const Matrix& x = m.matrix();
  Vector d(m.dim());
  for (Index i = 0; i < m.dim(); ++i) {
    d(i) = basis.col(i).dot(x * basis.col(i));
  }
  return HermitianMatrix::hermitized(basis * d.asDiagonal() * basis.adjoint());
}

double real_trace(const Matrix& m) {
  const Complex tr = m.trace();
  if (std::abs(tr.imag()) > 1e-8 * std::max(1.0, std::abs(tr.real()))) {
    std::ostringstream os;
    os << "trace carries an imaginary residue " << tr.imag();
    throw NumericalError(os.str());
  }
  return tr.real();
}

RealVector psd_eigenvalues(const Matrix& m) {
  const SpectralDecomposition spec = hermitian_eig(HermitianMatrix::hermitized(m));
  return spec.eigenvalues.cwiseMax(0.0);
}

}  // namespace qdiv
