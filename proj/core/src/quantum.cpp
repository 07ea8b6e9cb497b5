#include "qdiv/quantum.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qdiv {

namespace {

HermitianMatrix validated(const Matrix& m, const Tolerances& tol) {
  tol.validate();
  return HermitianMatrix(m, tol);
}

void require_positive_definite(const DensityMatrix& m, const char* what) {
  if (!m.positive_definite()) {
    std::ostringstream os;
    os << what << " must be positive definite (rank " << m.rank() << " of " << m.dim() << ")";
    throw IllPosedError(os.str());
  }
}

Matrix gaussian_matrix(Index rows, Index cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix& m, const Tolerances& tol)
    : DensityMatrix(validated(m, tol), tol) {}

DensityMatrix::DensityMatrix(const HermitianMatrix& m, const Tolerances& tol)
    : mat_(m), spec_(hermitian_eig(m)), tol_(tol) {
  tol_.validate();
  if (dim() == 0) throw DimensionError("DensityMatrix: empty matrix");
  rank_ = psd_support(spec_, tol_).rank;
  const double tr = real_trace(mat_.matrix());
  if (std::abs(tr - 1.0) > tol_.trace) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr << " differs from 1";
    throw ValidationError(os.str());
  }
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ValidationError("KrausChannel: no Kraus operators");
  out_dim_ = kraus_.front().rows();
  in_dim_ = kraus_.front().cols();
  if (in_dim_ == 0 || out_dim_ == 0) throw DimensionError("KrausChannel: empty Kraus operator");
  for (const auto& k : kraus_) {
    if (k.rows() != out_dim_ || k.cols() != in_dim_) {
      throw DimensionError("KrausChannel: Kraus operators have inconsistent shapes");
    }
    if (!all_finite(k)) throw ValidationError("KrausChannel: non-finite entry");
  }
  const double residual = completeness_residual();
  if (residual > kCompletenessTol) {
    std::ostringstream os;
    os << "KrausChannel: not trace preserving (‖Σ K*K − I‖_max = " << residual << ")";
    throw ValidationError(os.str());
  }
}

double KrausChannel::completeness_residual() const {
  Matrix sum = Matrix::Zero(in_dim_, in_dim_);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return max_abs(sum - Matrix::Identity(in_dim_, in_dim_));
}

DensityMatrix random_state(Index dim, Index rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    std::ostringstream os;
    os << "random_state: rank " << rank << " out of range for dimension " << dim;
    throw DomainError(os.str());
  }
  std::mt19937_64 gen(seed);
  const Matrix g = gaussian_matrix(dim, rank, gen);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(HermitianMatrix::hermitized(rho));
}

KrausChannel random_channel(Index in_dim, Index out_dim, Index env_dim, std::uint64_t seed) {
  if (in_dim < 1 || out_dim < 1 || env_dim < 1) {
    throw DomainError("random_channel: dimensions must be positive");
  }
  if (env_dim * out_dim < in_dim) {
    throw DomainError("random_channel: need env_dim * out_dim >= in_dim for an isometry");
  }
  std::mt19937_64 gen(seed);
  const Matrix g = gaussian_matrix(env_dim * out_dim, in_dim, gen);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix v = qr.householderQ() * Matrix::Identity(env_dim * out_dim, in_dim);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(env_dim));
  for (Index i = 0; i < env_dim; ++i) kraus.emplace_back(v.middleRows(i * out_dim, out_dim));
  return KrausChannel(std::move(kraus));
}

KrausChannel identity_channel(Index dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel pinching_channel(const Matrix& basis, const Tolerances& tol) {
  require_orthonormal_basis(basis, tol);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(basis.cols()));
  for (Index i = 0; i < basis.cols(); ++i) {
    kraus.emplace_back(basis.col(i) * basis.col(i).adjoint());
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel diagonal_pinching(Index dim) {
  return pinching_channel(Matrix::Identity(dim, dim));
}

Matrix apply(const KrausChannel& channel, const Matrix& x) {
  if (x.rows() != channel.in_dim() || x.cols() != channel.in_dim()) {
    throw DimensionError("apply: input does not match channel input dimension");
  }
  Matrix out = Matrix::Zero(channel.out_dim(), channel.out_dim());
  for (const auto& k : channel.kraus()) out += k * x * k.adjoint();
  return out;
}

Matrix adjoint_apply(const KrausChannel& channel, const Matrix& y) {
  if (y.rows() != channel.out_dim() || y.cols() != channel.out_dim()) {
    throw DimensionError("adjoint_apply: input does not match channel output dimension");
  }
  Matrix out = Matrix::Zero(channel.in_dim(), channel.in_dim());
  for (const auto& k : channel.kraus()) out += k.adjoint() * y * k;
  return out;
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  return DensityMatrix(HermitianMatrix::hermitized(apply(channel, rho.matrix())),
                       rho.tolerances());
}

StinespringDilation stinespring(const KrausChannel& channel) {
  StinespringDilation d;
  d.env_dim = static_cast<Index>(channel.size());
  d.out_dim = channel.out_dim();
  d.isometry.resize(d.env_dim * d.out_dim, channel.in_dim());
  // V x = Σᵢ eᵢ ⊗ Kᵢ x
  for (Index i = 0; i < d.env_dim; ++i) {
    d.isometry.middleRows(i * d.out_dim, d.out_dim) = channel.kraus()[static_cast<std::size_t>(i)];
  }
  return d;
}

Matrix apply(const StinespringDilation& dilation, const Matrix& x) {
  if (x.rows() != dilation.in_dim() || x.cols() != dilation.in_dim()) {
    throw DimensionError("apply: input does not match dilation input dimension");
  }
  return partial_trace(dilation.isometry * x * dilation.isometry.adjoint(), dilation.env_dim,
                       dilation.out_dim, TraceOut::First);
}

HermitianMatrix petz_recover(const KrausChannel& channel, const DensityMatrix& reference,
                             const HermitianMatrix& y) {
  return rotated_petz_recover(channel, reference, 0.0, y);
}

HermitianMatrix rotated_petz_recover(const KrausChannel& channel, const DensityMatrix& reference,
                                     double t, const HermitianMatrix& y) {
  if (reference.dim() != channel.in_dim()) {
    throw DimensionError("recovery map: reference state does not match channel input");
  }
  if (y.dim() != channel.out_dim()) {
    throw DimensionError("recovery map: argument does not match channel output");
  }
  require_positive_definite(reference, "reference state B");
  const DensityMatrix image = apply(channel, reference);
  require_positive_definite(image, "channel image φ(B)");

  const Matrix outer = reference.power(Complex(0.5, t));
  const Matrix inner = image.power(Complex(-0.5, -t));
  const Matrix middle = adjoint_apply(channel, inner * y.matrix() * inner.adjoint());
  return HermitianMatrix::hermitized(outer * middle * outer.adjoint());
}

Matrix modular_power_apply(const DensityMatrix& a, const DensityMatrix& b, double theta,
                           const Matrix& x) {
  if (a.dim() != b.dim() || x.rows() != a.dim() || x.cols() != a.dim()) {
    throw DimensionError("modular_power_apply: dimension mismatch");
  }
  require_positive_definite(b, "B");
  return a.power(theta) * x * b.power(-theta);
}

}  // namespace qdiv
