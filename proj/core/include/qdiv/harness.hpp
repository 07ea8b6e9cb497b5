#pragma once

// Numerical certification: grid scans for log-convexity and monotonicity,
// limit checks, inequality suites, explicit counterexample constructions and
// the randomized search for recoverability violations.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdiv/divergences.hpp"

namespace qdiv {

/// A pair of states with an optional channel; the unit of CLI work.
struct ProblemInstance {
  std::string label;
  DensityMatrix a;
  DensityMatrix b;
  std::optional<KrausChannel> channel;

  /// Throws DimensionError if A, B and the channel input disagree.
  void validate() const;
  /// The instance channel, or the identity channel when none is set.
  KrausChannel channel_or_identity() const;
};

/// A = (1/2)[[1,1],[1,1]], B = [[3/4,−1/4],[−1/4,1/4]], diagonal pinching.
ProblemInstance paper_example();

/// Uniform grid including both endpoints.
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int count = 0;
  std::vector<double> points;

  static Grid uniform(double lo, double hi, int count);
  double step() const { return (hi - lo) / (count - 1); }
};

/// Grid evaluation failure; carries the offending parameter.
class ScanError : public Error {
 public:
  ScanError(double parameter, const std::string& what);
  double parameter() const { return parameter_; }

 private:
  double parameter_;
};

enum class LogConvexCurve { ThetaDivergence, FTheta, SandwichedF, RecoveryProbe, StatePower };
enum class MonotoneCurve { RenyiTheta, SandwichedRenyi, DeltaTilde, SecantFTheta };
enum class LimitQuantity { RenyiTheta, LnFThetaSecant, SandwichedRenyi, DeltaTilde };

std::string_view to_string(LogConvexCurve c);
std::string_view to_string(MonotoneCurve c);
std::string_view to_string(LimitQuantity q);
std::optional<LogConvexCurve> parse_logconvex_curve(std::string_view name);
std::optional<MonotoneCurve> parse_monotone_curve(std::string_view name);
std::optional<LimitQuantity> parse_limit_quantity(std::string_view name);

/// Evaluates a single point of a curve.
double evaluate(LogConvexCurve curve, const ProblemInstance& inst, double parameter);
double evaluate(MonotoneCurve curve, const ProblemInstance& inst, double parameter);

struct ScanReport {
  std::string curve;
  Grid grid;
  std::vector<double> values;
  /// min over interior points of ln f(x−h) + ln f(x+h) − 2 ln f(x).
  std::optional<double> min_logconvexity_slack;
  /// min over consecutive points of f(x_{i+1}) − f(x_i).
  std::optional<double> min_monotonicity_slack;
  std::optional<bool> logconvex_pass;
  std::optional<bool> monotone_pass;
  double tolerance = 0.0;
  /// True for curves whose failure is the expected finding (the recovery
  /// probe and Δ̃_t); a failing scan of such a curve is a violation record.
  bool failure_is_finding = false;

  bool passed() const;
};

/// Second differences of ln f on `values` (all must be positive).
double min_log_second_difference(const std::vector<double>& values);
double min_forward_difference(const std::vector<double>& values);

ScanReport logconvexity_scan(LogConvexCurve curve, const ProblemInstance& inst, const Grid& grid,
                             double tol = 1e-9);
ScanReport monotonicity_scan(MonotoneCurve curve, const ProblemInstance& inst, const Grid& grid,
                             double tol = 1e-9);

struct LimitReport {
  std::string quantity;
  double target = 0.0;
  std::vector<double> h;
  std::vector<double> parameters;
  std::vector<double> values;
  bool increasing = false;
  bool bounded = false;
  bool converging = false;
  /// max(value − target) over the sequence.
  double max_excess = 0.0;
  double tolerance = 0.0;

  bool passed() const { return increasing && bounded && converging; }
};

/// Evaluates the quantity at 1 − h for each h (decreasing, in (0, 1/2)) and
/// checks it rises toward the relative-entropy target from below.
/// `tol` bounds the overshoot; `monotone_tol` bounds backward steps.
LimitReport secant_limit_check(LimitQuantity quantity, const ProblemInstance& inst,
                               const std::vector<double>& h_sequence, double tol = 1e-8,
                               double monotone_tol = 1e-9);

struct CheckRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// DPI, −2 ln tr(A^{1/2}B^{1/2}) ≤ D(A|B), −2 ln F ≤ D, the von Neumann chain
/// F_θ ≤ Σλ^θσ^{1−θ} ≤ 1, the Araki–Lieb–Thirring chain, the Petz fixed point,
/// Δ̃_{1/2} against the Petz fidelity and Δ̃ trace form against the dilation.
/// Recovery-map checks are skipped when B or φ(B) is singular.
std::vector<CheckRecord> inequality_suite(const ProblemInstance& inst, double tol = 1e-9);

enum class CounterexampleKind { Recoverability, PinchingConcavity };

struct CounterexampleRecord {
  CounterexampleKind kind = CounterexampleKind::Recoverability;
  std::string label;
  Matrix a;
  Matrix b;
  std::vector<Matrix> kraus;
  std::map<std::string, double> parameters;
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs − rhs; positive means the conjectured inequality lhs ≤ rhs fails.
  double margin = 0.0;
  bool violation = false;
  std::optional<std::uint64_t> seed;
};

/// Re-evaluates lhs − rhs from the stored inputs.
double recompute_margin(const CounterexampleRecord& record);

/// Joint-concavity witness for F_θ under diagonal pinching. lhs is the
/// unpinched value, rhs the pinched one. Returns nullopt at θ = 1/2.
std::optional<CounterexampleRecord> theorem6_construction(double theta);

/// −2 ln F(A | R(φ(A))) against D(A|B) − D(φ(A)|φ(B)) on paper_example().
CounterexampleRecord reproduce_paper_counterexample();

/// Recoverability check on one instance; fills lhs, rhs, margin, violation.
CounterexampleRecord evaluate_recoverability(const ProblemInstance& inst, double tol);

enum class SearchEnsemble {
  Stratified,       // thirds: generic PD pairs, rank-one A, pinching channels
  EqualPairs,       // A = B
  IdentityChannel,  // φ = id
};

struct SearchConfig {
  int trials = 100;
  int dim_lo = 2;
  int dim_hi = 3;
  std::uint64_t seed = 0;
  std::string conjecture = "eq4";
  double tolerance = 1e-9;
  SearchEnsemble ensemble = SearchEnsemble::Stratified;
  bool include_paper_instance = false;
  int workers = 0;

  void validate() const;
};

/// Records every trial whose margin exceeds the tolerance, ordered by trial.
std::vector<CounterexampleRecord> conjecture_search(const SearchConfig& config);

struct RotatedScanReport {
  Grid grid;
  std::vector<double> fidelities;
  double argmax_t = 0.0;
  double max_fidelity = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool witness = false;
  double tolerance = 0.0;
};

/// F(A | R^t(φ(A))) over a t-grid; `witness` records whether the best grid
/// point satisfies −2 ln F ≤ D(A|B) − D(φ(A)|φ(B)) + tol.
RotatedScanReport rotated_scan(const ProblemInstance& inst, const Grid& t_grid, double tol = 1e-9);

struct Theorem9Report {
  Grid grid;
  std::vector<double> g_closed_form;
  std::vector<double> g_matrix;
  double lhs = 0.0;
  double rhs = 0.0;
  double inequality_slack = 0.0;
  double max_g_discrepancy = 0.0;
  double logconvexity_slack = 0.0;
  bool pass = false;
};

/// Orthonormal basis of ℂⁿ whose first column is the unit vector x.
Matrix complete_basis(const Vector& x);

/// Rank-one A = xx* with the pinching onto a basis containing x.
Theorem9Report theorem9_check(const DensityMatrix& b, const Vector& x, const Grid& grid);

/// ln Σ wᵢ Xᵢ^θ Yᵢ^{1−θ} by direct summation, scanned for convexity.
ScanReport classical_lemma1_oracle(const std::vector<double>& weights,
                                   const std::vector<double>& x, const std::vector<double>& y,
                                   const Grid& grid, double tol = 1e-9);

struct ClassicalRecoveryRecord {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

/// Classical recoverability with the Bayes (Petz) recovery of a
/// column-stochastic T: −2 ln Σ √(pᵢ R(Tp)ᵢ) ≤ KL(p‖q) − KL(Tp‖Tq) + 1e-9.
ClassicalRecoveryRecord classical_recovery_check(const std::vector<double>& p,
                                                 const std::vector<double>& q,
                                                 const Eigen::MatrixXd& transition);

}  // namespace qdiv
