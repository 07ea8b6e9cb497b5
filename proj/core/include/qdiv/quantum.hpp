#pragma once

// States, channels and recovery maps.

#include <cstdint>
#include <vector>

#include "qdiv/matcore.hpp"

namespace qdiv {

/// Positive semidefinite, unit-trace matrix. Its spectral decomposition is
/// computed once at construction and reused by the functional calculus.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m, const Tolerances& tol = {});
  explicit DensityMatrix(const HermitianMatrix& m, const Tolerances& tol = {});

  Index dim() const { return mat_.dim(); }
  Index rank() const { return rank_; }
  bool positive_definite() const { return rank_ == dim(); }

  const Matrix& matrix() const { return mat_.matrix(); }
  const HermitianMatrix& hermitian() const { return mat_; }
  const SpectralDecomposition& spectrum() const { return spec_; }
  const Tolerances& tolerances() const { return tol_; }

  Matrix power(Complex z) const { return mat_power(spec_, z, tol_); }
  Matrix power(double z) const { return mat_power(spec_, Complex(z, 0.0), tol_); }
  HermitianMatrix log() const { return mat_log_support(spec_, tol_); }
  HermitianMatrix support() const { return support_projector(spec_, tol_); }

 private:
  HermitianMatrix mat_;
  SpectralDecomposition spec_;
  Tolerances tol_;
  Index rank_ = 0;
};

/// CPTP map X ↦ Σᵢ KᵢXKᵢ* from Mₙ to M_k, with Σ Kᵢ*Kᵢ = Iₙ within 1e-9.
class KrausChannel {
 public:
  static constexpr double kCompletenessTol = 1e-9;

  explicit KrausChannel(std::vector<Matrix> kraus);

  Index in_dim() const { return in_dim_; }
  Index out_dim() const { return out_dim_; }
  std::size_t size() const { return kraus_.size(); }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  /// ‖Σ Kᵢ*Kᵢ − I‖_max.
  double completeness_residual() const;

 private:
  std::vector<Matrix> kraus_;
  Index in_dim_ = 0;
  Index out_dim_ = 0;
};

/// Isometry V: ℂⁿ → ℂᵐ⊗ℂᵏ with environment ℂᵐ as the first factor.
struct StinespringDilation {
  Matrix isometry;
  Index env_dim = 0;
  Index out_dim = 0;

  Index in_dim() const { return isometry.cols(); }
};

/// ρ = GG*/tr(GG*) with G a dim×rank standard complex Gaussian matrix.
DensityMatrix random_state(Index dim, Index rank, std::uint64_t seed);

/// Kraus operators Kᵢ = (⟨eᵢ|⊗I_k)V of a random isometry V (QR of a Gaussian
/// (m·k)×n matrix). Requires m·k ≥ n.
KrausChannel random_channel(Index in_dim, Index out_dim, Index env_dim, std::uint64_t seed);

KrausChannel identity_channel(Index dim);

/// Kraus operators are the rank-one projectors onto the columns of `basis`.
KrausChannel pinching_channel(const Matrix& basis, const Tolerances& tol = {});

/// Standard-basis pinching of ℂⁿ (zeroes off-diagonal entries).
KrausChannel diagonal_pinching(Index dim);

Matrix apply(const KrausChannel& channel, const Matrix& x);
Matrix adjoint_apply(const KrausChannel& channel, const Matrix& y);

/// apply() specialised to states; the output is re-validated as a state.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

StinespringDilation stinespring(const KrausChannel& channel);

/// tr_env(V X V*).
Matrix apply(const StinespringDilation& dilation, const Matrix& x);

/// B^{1/2} φ*(φ(B)^{−1/2} Y φ(B)^{−1/2}) B^{1/2}. Requires B and φ(B)
/// positive definite; throws IllPosedError otherwise.
HermitianMatrix petz_recover(const KrausChannel& channel, const DensityMatrix& reference,
                             const HermitianMatrix& y);

/// B^{1/2+it} φ*(φ(B)^{−1/2−it} Y (φ(B)^{−1/2−it})*) (B^{1/2+it})*.
/// At t = 0 this is exactly petz_recover.
HermitianMatrix rotated_petz_recover(const KrausChannel& channel, const DensityMatrix& reference,
                                     double t, const HermitianMatrix& y);

/// Δ^θ(X) = A^θ X B^{−θ} for the relative modular operator Δ(X) = A X B^{−1}.
Matrix modular_power_apply(const DensityMatrix& a, const DensityMatrix& b, double theta,
                           const Matrix& x);

}  // namespace qdiv
