#include "qdiv/divergences.hpp"

#include <cmath>
#include <sstream>

namespace qdiv {

namespace {

constexpr double kSupportResidual = 1e-8;

void require_range(double x, double lo, double hi, bool hi_open, const char* what) {
  const bool ok = std::isfinite(x) && x >= lo && (hi_open ? x < hi : x <= hi);
  if (!ok) {
    std::ostringstream os;
    os << what << ": parameter " << x << " outside [" << lo << ", " << hi << (hi_open ? ")" : "]");
    throw DomainError(os.str());
  }
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("states have different dimensions");
}

void require_pd(const DensityMatrix& m, const char* what) {
  if (!m.positive_definite()) {
    throw IllPosedError(std::string(what) + " must be positive definite");
  }
}

/// Σ μᵢ^t over the eigenvalues of a PSD-by-construction product. Rounding
/// noise below the support clip is dropped, since μ^t inflates it for t < 1.
double trace_power(const Matrix& m, double t) {
  const RealVector mu = psd_eigenvalues(m);
  const double floor = Tolerances{}.support_clip * (mu.size() > 0 ? mu.maxCoeff() : 0.0);
  double acc = 0.0;
  for (Index i = 0; i < mu.size(); ++i) {
    if (mu(i) > floor) acc += std::pow(mu(i), t);
  }
  return acc;
}

double log_or_inf(double base, double denom, bool& finite) {
  if (!(base > 0.0)) {
    finite = false;
    return std::numeric_limits<double>::infinity();
  }
  finite = true;
  return std::log(base) / denom;
}

struct ChannelImages {
  DensityMatrix a;
  DensityMatrix b;
};

ChannelImages images(const DensityMatrix& a, const DensityMatrix& b, const KrausChannel& channel) {
  require_same_dim(a, b);
  if (a.dim() != channel.in_dim()) throw DimensionError("state does not match channel input");
  return {apply(channel, a), apply(channel, b)};
}

/// (I_m ⊗ φ(A)^{s} φ(B)^{−s}) V B^{s} A^{1/2}
Matrix dilated_operator(const DensityMatrix& a, const DensityMatrix& b,
                        const KrausChannel& channel, double s) {
  const ChannelImages img = images(a, b, channel);
  require_pd(b, "B");
  require_pd(img.b, "φ(B)");
  const StinespringDilation dil = stinespring(channel);
  const Matrix left = img.a.power(s) * img.b.power(-s);
  const Matrix lifted = kron(Matrix::Identity(dil.env_dim, dil.env_dim), left);
  return lifted * dil.isometry * b.power(s) * a.power(0.5);
}

}  // namespace

bool support_contained(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b);
  const Index n = a.dim();
  const Matrix kernel_b = Matrix::Identity(n, n) - b.support().matrix();
  const SpectralDecomposition& spec = a.spectrum();
  const SupportInfo info = psd_support(spec, a.tolerances());
  for (Index i = 0; i < n; ++i) {
    if (!info.in_support(spec.eigenvalues(i))) continue;
    if ((kernel_b * spec.eigenvectors.col(i)).norm() > kSupportResidual) return false;
  }
  return true;
}

DivergenceValue relative_entropy(const DensityMatrix& a, const DensityMatrix& b) {
  if (!support_contained(a, b)) return DivergenceValue::infinite();
  const SpectralDecomposition& spec = a.spectrum();
  const SupportInfo info = psd_support(spec, a.tolerances());
  double a_log_a = 0.0;
  for (Index i = 0; i < spec.dim(); ++i) {
    const double l = spec.eigenvalues(i);
    if (info.in_support(l)) a_log_a += l * std::log(l);
  }
  const double a_log_b = real_trace(a.matrix() * b.log().matrix());
  return {a_log_a - a_log_b, true};
}

double theta_divergence(const DensityMatrix& a, const DensityMatrix& b, double theta) {
  require_range(theta, 0.0, 1.0, false, "theta_divergence");
  require_same_dim(a, b);
  return real_trace(a.power(theta) * b.power(1.0 - theta));
}

DivergenceValue renyi_theta(const DensityMatrix& a, const DensityMatrix& b, double theta) {
  require_range(theta, 0.0, 1.0, true, "renyi_theta");
  DivergenceValue out;
  out.value = log_or_inf(theta_divergence(a, b, theta), theta - 1.0, out.finite);
  return out;
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b);
  return trace_norm(a.power(0.5) * b.power(0.5));
}

double f_theta(const DensityMatrix& a, const DensityMatrix& b, double theta) {
  require_range(theta, 0.0, 1.0, false, "f_theta");
  require_same_dim(a, b);
  return trace_norm(a.power(theta) * b.power(1.0 - theta));
}

double vn_upper_bound(const DensityMatrix& a, const DensityMatrix& b, double theta) {
  require_range(theta, 0.0, 1.0, false, "vn_upper_bound");
  require_same_dim(a, b);
  const RealVector& la = a.spectrum().eigenvalues;
  const RealVector& lb = b.spectrum().eigenvalues;
  double acc = 0.0;
  for (Index j = 0; j < la.size(); ++j) {
    acc += std::pow(std::max(la(j), 0.0), theta) * std::pow(std::max(lb(j), 0.0), 1.0 - theta);
  }
  return acc;
}

double sandwiched_f(const DensityMatrix& a, const DensityMatrix& b, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("sandwiched_f: t must be positive");
  require_same_dim(a, b);
  if (!support_contained(a, b)) throw SupportError("sandwiched_f: supp(A) not contained in supp(B)");
  const Matrix side = b.power((1.0 - t) / (2.0 * t));
  return trace_power(side * a.matrix() * side, t);
}

DivergenceValue sandwiched_renyi(const DensityMatrix& a, const DensityMatrix& b, double t) {
  if (t == 1.0) throw DomainError("sandwiched_renyi: t = 1 is excluded");
  DivergenceValue out;
  out.value = log_or_inf(sandwiched_f(a, b, t), t - 1.0, out.finite);
  return out;
}

DivergenceValue relative_entropy_difference(const DensityMatrix& a, const DensityMatrix& b,
                                            const KrausChannel& channel) {
  const ChannelImages img = images(a, b, channel);
  const DivergenceValue before = relative_entropy(a, b);
  const DivergenceValue after = relative_entropy(img.a, img.b);
  if (!before.finite || !after.finite) return DivergenceValue::infinite();
  return {before.value - after.value, true};
}

double petz_fidelity_loss(const DensityMatrix& a, const DensityMatrix& b,
                          const KrausChannel& channel) {
  const ChannelImages img = images(a, b, channel);
  const HermitianMatrix recovered = petz_recover(channel, b, img.a.hermitian());
  const DensityMatrix r(recovered, a.tolerances());
  return -2.0 * std::log(fidelity(a, r));
}

DivergenceValue delta_tilde(const DensityMatrix& a, const DensityMatrix& b,
                            const KrausChannel& channel, double t) {
  require_range(t, 0.5, 1.0, true, "delta_tilde");
  const ChannelImages img = images(a, b, channel);
  require_pd(b, "B");
  require_pd(img.b, "φ(B)");
  if (!support_contained(a, b)) throw SupportError("delta_tilde: supp(A) not contained in supp(B)");
  const double s = (1.0 - t) / (2.0 * t);
  const Matrix image_side = img.b.power(-s);
  const Matrix inner = image_side * img.a.power(2.0 * s) * image_side;
  const Matrix outer = a.power(0.5) * b.power(s);
  const Matrix m = outer * adjoint_apply(channel, inner) * outer.adjoint();
  DivergenceValue out;
  out.value = log_or_inf(trace_power(m, t), t - 1.0, out.finite);
  return out;
}

DivergenceValue delta_tilde_dilated(const DensityMatrix& a, const DensityMatrix& b,
                                    const KrausChannel& channel, double t) {
  require_range(t, 0.5, 1.0, true, "delta_tilde_dilated");
  if (!support_contained(a, b)) throw SupportError("delta_tilde: supp(A) not contained in supp(B)");
  const double s = (1.0 - t) / (2.0 * t);
  const double norm = schatten_norm(dilated_operator(a, b, channel, s), 2.0 * t);
  DivergenceValue out;
  out.value = 2.0 * t * log_or_inf(norm, t - 1.0, out.finite);
  return out;
}

double recovery_probe(const DensityMatrix& a, const DensityMatrix& b, const KrausChannel& channel,
                      double theta) {
  require_range(theta, 0.0, 1.0, false, "recovery_probe");
  return schatten_norm(dilated_operator(a, b, channel, theta / 2.0), 2.0 / (1.0 + theta));
}

namespace {

SpectralDecomposition positive_definite_spectrum(const HermitianMatrix& x) {
  SpectralDecomposition spec = hermitian_eig(x);
  if (spec.dim() == 0 || !(spec.eigenvalues.minCoeff() > 0.0)) {
    throw DomainError("x must be positive definite");
  }
  return spec;
}

struct StateFunctionals {
  double of_x;
  double of_sqrt_x;
  double of_x_log_x;
};

StateFunctionals functionals(const DensityMatrix& rho, const HermitianMatrix& x) {
  if (rho.dim() != x.dim()) throw DimensionError("state and x have different dimensions");
  const SpectralDecomposition spec = positive_definite_spectrum(x);
  const Matrix x_log_x =
      spectral_apply(spec, [](double l) { return Complex(l * std::log(l)); });
  return {real_trace(rho.matrix() * x.matrix()),
          real_trace(rho.matrix() * mat_power(spec, Complex(0.5, 0.0))),
          real_trace(rho.matrix() * x_log_x)};
}

}  // namespace

double state_power(const DensityMatrix& rho, const HermitianMatrix& x, double theta) {
  if (rho.dim() != x.dim()) throw DimensionError("state and x have different dimensions");
  const SpectralDecomposition spec = positive_definite_spectrum(x);
  return real_trace(rho.matrix() * mat_power(spec, Complex(theta, 0.0)));
}

double corollary3_rhs(const DensityMatrix& rho, const HermitianMatrix& x) {
  const StateFunctionals f = functionals(rho, x);
  return f.of_x * (std::log(f.of_x) + 2.0 * (std::log(std::sqrt(f.of_x)) - std::log(f.of_sqrt_x)));
}

double corollary3_gap(const DensityMatrix& rho, const HermitianMatrix& x) {
  const StateFunctionals f = functionals(rho, x);
  const double rhs =
      f.of_x * (std::log(f.of_x) + 2.0 * (std::log(std::sqrt(f.of_x)) - std::log(f.of_sqrt_x)));
  return f.of_x_log_x - rhs;
}

}  // namespace qdiv
