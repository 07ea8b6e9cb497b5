#pragma once

// Dense complex linear algebra used by every other part of the library:
// Hermitian eigendecomposition, support-aware functional calculus,
// Schatten norms, tensor structure and pinching.

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "qdiv/error.hpp"

namespace qdiv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical thresholds shared by validation and functional calculus.
/// `support_clip` is relative to the largest eigenvalue of the matrix at hand.
struct Tolerances {
  double hermiticity = 1e-10;
  double recon = 1e-9;
  double support_clip = 1e-12;
  double trace = 1e-10;

  /// Throws DomainError unless every field is strictly positive and finite.
  void validate() const;
};

/// Largest absolute entry, ‖M‖_max.
double max_abs(const Matrix& m);

bool all_finite(const Matrix& m);

/// A square matrix that passed the Hermiticity check
/// ‖M − M*‖_max ≤ hermiticity × (1 + ‖M‖_max).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix m, const Tolerances& tol = {});

  /// Wraps (M + M*)/2 after checking shape and finiteness only.
  static HermitianMatrix hermitized(const Matrix& m);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  struct Unchecked {};
  HermitianMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}

  Matrix m_;
};

/// Eigenvalues in non-increasing order with matching orthonormal eigenvector
/// columns: M = U diag(λ) U*.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Index dim() const { return eigenvalues.size(); }
  Matrix reconstruct() const;
};

SpectralDecomposition hermitian_eig(const HermitianMatrix& m);

/// Eigenvalues above `support_clip × λ_max` form the numerical support.
/// Throws NotPsdError if some eigenvalue is below −support_clip × max|λ|.
struct SupportInfo {
  double threshold = 0.0;
  Index rank = 0;
  bool in_support(double eigenvalue) const { return eigenvalue > threshold; }
};
SupportInfo psd_support(const SpectralDecomposition& spec, const Tolerances& tol = {});

/// Applies `f` to the support eigenvalues and 0 on the kernel. Validates PSD.
Matrix spectral_apply(const SpectralDecomposition& spec,
                      const std::function<Complex(double)>& f,
                      const Tolerances& tol = {});

/// M^z on the support (λ ↦ exp(z ln λ)), 0 on the kernel. z = 0 is the support
/// projector, Re z < 0 a pseudo-inverse power, purely imaginary z a partial
/// isometry. Real exponents return a re-Hermitized result.
Matrix mat_power(const SpectralDecomposition& spec, Complex z, const Tolerances& tol = {});
Matrix mat_power(const HermitianMatrix& m, Complex z, const Tolerances& tol = {});

/// Real-exponent convenience returning a Hermitian result.
HermitianMatrix real_power(const SpectralDecomposition& spec, double z,
                           const Tolerances& tol = {});
HermitianMatrix real_power(const HermitianMatrix& m, double z, const Tolerances& tol = {});

/// ln on the support, 0 on the kernel.
HermitianMatrix mat_log_support(const SpectralDecomposition& spec, const Tolerances& tol = {});
HermitianMatrix mat_log_support(const HermitianMatrix& m, const Tolerances& tol = {});

HermitianMatrix support_projector(const SpectralDecomposition& spec, const Tolerances& tol = {});

/// Singular values in non-increasing order.
RealVector singular_values(const Matrix& m);

/// (Σ sᵢᵖ)^{1/p}. p ∈ (0, 1) is accepted as a quasi-norm; nothing in the
/// library evaluates it below 1. Throws DomainError for p ≤ 0.
double schatten_norm(const Matrix& m, double p);

inline double trace_norm(const Matrix& m) { return schatten_norm(m, 1.0); }

Matrix kron(const Matrix& a, const Matrix& b);

/// Which tensor factor of ℂᵐ⊗ℂᵏ is traced out.
enum class TraceOut { First, Second };

/// Reduced matrix of an (mk)×(mk) operator; index of |i⟩⊗|a⟩ is i·k + a.
Matrix partial_trace(const Matrix& m, Index dim_first, Index dim_second, TraceOut which);

/// Throws ValidationError unless the columns of `basis` form an orthonormal
/// basis of ℂⁿ within `tol.recon`.
void require_orthonormal_basis(const Matrix& basis, const Tolerances& tol = {});

/// Σᵢ PᵢMPᵢ with Pᵢ the projector onto column i of `basis`.
HermitianMatrix pinch(const HermitianMatrix& m, const Matrix& basis, const Tolerances& tol = {});

/// Real part of tr(M), rejecting imaginary residues above 1e-8 relative.
double real_trace(const Matrix& m);

/// Hermitian-part eigenvalues of a PSD-by-construction product, clipped at 0.
RealVector psd_eigenvalues(const Matrix& m);

}  // namespace qdiv
