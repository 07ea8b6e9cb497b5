#pragma once

// Entropies, divergences and fidelities. All logarithms are natural (nats).

#include <limits>

#include "qdiv/quantum.hpp"

namespace qdiv {

/// A divergence that may legitimately be +∞ (finite == false) when a support
/// condition fails. Infinity is a value here, not an error.
struct DivergenceValue {
  double value = 0.0;
  bool finite = true;

  static DivergenceValue infinite() { return {std::numeric_limits<double>::infinity(), false}; }
};

/// supp(A) ⊆ supp(B): every support eigenvector of A has a component in the
/// kernel of B of norm at most 1e-8.
bool support_contained(const DensityMatrix& a, const DensityMatrix& b);

/// D(A|B) = tr A(ln A − ln B) with 0·ln 0 = 0.
DivergenceValue relative_entropy(const DensityMatrix& a, const DensityMatrix& b);

/// tr(A^θ B^{1−θ}), θ ∈ [0, 1].
double theta_divergence(const DensityMatrix& a, const DensityMatrix& b, double theta);

/// ln tr(A^θ B^{1−θ}) / (θ − 1), θ ∈ [0, 1).
DivergenceValue renyi_theta(const DensityMatrix& a, const DensityMatrix& b, double theta);

/// F(A|B) = tr(A^{1/2} B A^{1/2})^{1/2}, computed as ‖A^{1/2}B^{1/2}‖₁.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// F_θ(A|B) = tr|A^θ B^{1−θ}|, θ ∈ [0, 1].
double f_theta(const DensityMatrix& a, const DensityMatrix& b, double theta);

/// Σⱼ λⱼ^θ σⱼ^{1−θ} over both spectra in non-increasing order, θ ∈ (0, 1).
double vn_upper_bound(const DensityMatrix& a, const DensityMatrix& b, double theta);

/// 𝓕_t(A|B) = tr(B^{(1−t)/2t} A B^{(1−t)/2t})^t, t > 0. Throws SupportError
/// unless supp(A) ⊆ supp(B).
double sandwiched_f(const DensityMatrix& a, const DensityMatrix& b, double t);

/// S_t(A|B) = ln 𝓕_t(A|B) / (t − 1), t ∈ (0, 1) ∪ (1, ∞).
DivergenceValue sandwiched_renyi(const DensityMatrix& a, const DensityMatrix& b, double t);

/// D(A|B) − D(φ(A)|φ(B)).
DivergenceValue relative_entropy_difference(const DensityMatrix& a, const DensityMatrix& b,
                                            const KrausChannel& channel);

/// −2 ln F(A | R_{φ,B}(φ(A))), the left side of the recoverability inequality.
double petz_fidelity_loss(const DensityMatrix& a, const DensityMatrix& b,
                          const KrausChannel& channel);

/// Rényi relative entropy difference Δ̃_t for t ∈ [1/2, 1), evaluated through
/// the trace form
///   tr(A^{1/2}B^{s} φ*(φ(B)^{−s} φ(A)^{2s} φ(B)^{−s}) B^{s} A^{1/2})^t,  s = (1−t)/2t.
DivergenceValue delta_tilde(const DensityMatrix& a, const DensityMatrix& b,
                            const KrausChannel& channel, double t);

/// Same quantity through the Stinespring dilation:
///   2t/(t−1) ln ‖(I_m ⊗ φ(A)^{s} φ(B)^{−s}) V B^{s} A^{1/2}‖_{2t}.
DivergenceValue delta_tilde_dilated(const DensityMatrix& a, const DensityMatrix& b,
                                    const KrausChannel& channel, double t);

/// θ ↦ ‖(I_m ⊗ φ(A)^{θ/2} φ(B)^{−θ/2}) V B^{θ/2} A^{1/2}‖_{2/(1+θ)} on [0, 1].
/// Log-convexity of this map would imply the recoverability conjecture.
double recovery_probe(const DensityMatrix& a, const DensityMatrix& b,
                      const KrausChannel& channel, double theta);

/// tr(ρ x^θ) for positive definite x; the state-functional curve.
double state_power(const DensityMatrix& rho, const HermitianMatrix& x, double theta);

/// φ(x ln x) − φ(x)[ln φ(x) + 2(ln φ(x)^{1/2} − ln φ(x^{1/2}))] with φ = tr(ρ ·).
/// Nonnegative for positive definite x.
double corollary3_gap(const DensityMatrix& rho, const HermitianMatrix& x);

/// The bracketed right-hand side of corollary3_gap, for the Jensen comparison.
double corollary3_rhs(const DensityMatrix& rho, const HermitianMatrix& x);

}  // namespace qdiv
