#include "qdiv/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "qdiv/ensembles.hpp"
#include "qdiv/parallel.hpp"

namespace qdiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename Enum, std::size_t N>
struct NameTable {
  std::array<std::pair<Enum, std::string_view>, N> entries;

  std::string_view name(Enum e) const {
    for (const auto& [k, v] : entries) {
      if (k == e) return v;
    }
    return "unknown";
  }
  std::optional<Enum> parse(std::string_view s) const {
    for (const auto& [k, v] : entries) {
      if (v == s) return k;
    }
    return std::nullopt;
  }
};

constexpr NameTable<LogConvexCurve, 5> kLogConvexNames{{{
    {LogConvexCurve::ThetaDivergence, "theta_divergence"},
    {LogConvexCurve::FTheta, "f_theta"},
    {LogConvexCurve::SandwichedF, "sandwiched_f"},
    {LogConvexCurve::RecoveryProbe, "eq12_probe"},
    {LogConvexCurve::StatePower, "state_power"},
}}};

constexpr NameTable<MonotoneCurve, 4> kMonotoneNames{{{
    {MonotoneCurve::RenyiTheta, "renyi_theta"},
    {MonotoneCurve::SandwichedRenyi, "sandwiched_renyi"},
    {MonotoneCurve::DeltaTilde, "delta_tilde"},
    {MonotoneCurve::SecantFTheta, "secant_f_theta"},
}}};

constexpr NameTable<LimitQuantity, 4> kLimitNames{{{
    {LimitQuantity::RenyiTheta, "renyi_theta"},
    {LimitQuantity::LnFThetaSecant, "lnF_theta_secant"},
    {LimitQuantity::SandwichedRenyi, "sandwiched_renyi"},
    {LimitQuantity::DeltaTilde, "delta_tilde"},
}}};

double finite_or_throw(const DivergenceValue& v, const char* what) {
  if (!v.finite) throw DomainError(std::string(what) + " is infinite on this instance");
  return v.value;
}

void require_grid_within(const Grid& grid, double lo, double hi, bool hi_open, const char* curve) {
  const bool ok = grid.lo >= lo && (hi_open ? grid.hi < hi : grid.hi <= hi);
  if (!ok) {
    std::ostringstream os;
    os << curve << ": grid [" << grid.lo << ", " << grid.hi << "] outside the domain [" << lo
       << ", " << hi << (hi_open ? ")" : "]");
    throw DomainError(os.str());
  }
}

template <typename Eval>
std::vector<double> evaluate_grid(const Grid& grid, Eval&& eval) {
  std::vector<double> values;
  values.reserve(grid.points.size());
  for (double x : grid.points) {
    try {
      values.push_back(eval(x));
    } catch (const Error& e) {
      throw ScanError(x, e.what());
    }
  }
  return values;
}

Vector unit_vector(const Vector& x) {
  const double n = x.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("x must be a nonzero finite vector");
  if (std::abs(n - 1.0) > 1e-10) throw DomainError("x must be a unit vector");
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// instances and grids

void ProblemInstance::validate() const {
  if (a.dim() != b.dim()) throw DimensionError("instance: A and B have different dimensions");
  if (channel && channel->in_dim() != a.dim()) {
    throw DimensionError("instance: channel input dimension does not match the states");
  }
}

KrausChannel ProblemInstance::channel_or_identity() const {
  return channel ? *channel : identity_channel(a.dim());
}

ProblemInstance paper_example() {
  Matrix a(2, 2);
  a << 0.5, 0.5, 0.5, 0.5;
  Matrix b(2, 2);
  b << 0.75, -0.25, -0.25, 0.25;
  return {"paper-example", DensityMatrix(a), DensityMatrix(b), diagonal_pinching(2)};
}

Grid Grid::uniform(double lo, double hi, int count) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("grid: need finite lo < hi");
  }
  if (count < 3) throw DomainError("grid: need at least 3 points");
  Grid g;
  g.lo = lo;
  g.hi = hi;
  g.count = count;
  g.points.resize(static_cast<std::size_t>(count));
  const double h = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) g.points[static_cast<std::size_t>(i)] = lo + i * h;
  g.points.back() = hi;
  return g;
}

ScanError::ScanError(double parameter, const std::string& what)
    : Error([&] {
        std::ostringstream os;
        os << "evaluation failed at parameter " << parameter << ": " << what;
        return os.str();
      }()),
      parameter_(parameter) {}

std::string_view to_string(LogConvexCurve c) { return kLogConvexNames.name(c); }
std::string_view to_string(MonotoneCurve c) { return kMonotoneNames.name(c); }
std::string_view to_string(LimitQuantity q) { return kLimitNames.name(q); }
std::optional<LogConvexCurve> parse_logconvex_curve(std::string_view s) {
  return kLogConvexNames.parse(s);
}
std::optional<MonotoneCurve> parse_monotone_curve(std::string_view s) {
  return kMonotoneNames.parse(s);
}
std::optional<LimitQuantity> parse_limit_quantity(std::string_view s) {
  return kLimitNames.parse(s);
}

// ---------------------------------------------------------------------------
// scans

double evaluate(LogConvexCurve curve, const ProblemInstance& inst, double x) {
  switch (curve) {
    case LogConvexCurve::ThetaDivergence:
      return theta_divergence(inst.a, inst.b, x);
    case LogConvexCurve::FTheta:
      return f_theta(inst.a, inst.b, x);
    case LogConvexCurve::SandwichedF:
      return sandwiched_f(inst.a, inst.b, x);
    case LogConvexCurve::RecoveryProbe:
      return recovery_probe(inst.a, inst.b, inst.channel_or_identity(), x);
    case LogConvexCurve::StatePower:
      // A plays the state, B the positive operator.
      return state_power(inst.a, inst.b.hermitian(), x);
  }
  throw DomainError("unknown curve");
}

double evaluate(MonotoneCurve curve, const ProblemInstance& inst, double x) {
  switch (curve) {
    case MonotoneCurve::RenyiTheta:
      return finite_or_throw(renyi_theta(inst.a, inst.b, x), "renyi_theta");
    case MonotoneCurve::SandwichedRenyi:
      return finite_or_throw(sandwiched_renyi(inst.a, inst.b, x), "sandwiched_renyi");
    case MonotoneCurve::DeltaTilde:
      return finite_or_throw(delta_tilde(inst.a, inst.b, inst.channel_or_identity(), x),
                             "delta_tilde");
    case MonotoneCurve::SecantFTheta:
      return std::log(f_theta(inst.a, inst.b, x)) / (x - 1.0);
  }
  throw DomainError("unknown curve");
}

double min_log_second_difference(const std::vector<double>& values) {
  double slack = kInf;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (!(values[i - 1] > 0.0 && values[i] > 0.0 && values[i + 1] > 0.0)) {
      throw DomainError("log-convexity needs strictly positive values");
    }
    const double d2 =
        std::log(values[i - 1]) + std::log(values[i + 1]) - 2.0 * std::log(values[i]);
    slack = std::min(slack, d2);
  }
  return slack;
}

double min_forward_difference(const std::vector<double>& values) {
  double slack = kInf;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    slack = std::min(slack, values[i + 1] - values[i]);
  }
  return slack;
}

bool ScanReport::passed() const {
  return logconvex_pass.value_or(true) && monotone_pass.value_or(true);
}

ScanReport logconvexity_scan(LogConvexCurve curve, const ProblemInstance& inst, const Grid& grid,
                             double tol) {
  inst.validate();
  const std::string_view name = to_string(curve);
  if (curve == LogConvexCurve::SandwichedF) {
    require_grid_within(grid, 0.5, 1.0, false, name.data());
  } else {
    require_grid_within(grid, 0.0, 1.0, false, name.data());
  }
  ScanReport r;
  r.curve = std::string(name);
  r.grid = grid;
  r.tolerance = tol;
  r.failure_is_finding = curve == LogConvexCurve::RecoveryProbe;
  r.values = evaluate_grid(grid, [&](double x) { return evaluate(curve, inst, x); });
  r.min_logconvexity_slack = min_log_second_difference(r.values);
  r.logconvex_pass = *r.min_logconvexity_slack >= -tol;
  return r;
}

ScanReport monotonicity_scan(MonotoneCurve curve, const ProblemInstance& inst, const Grid& grid,
                             double tol) {
  inst.validate();
  const std::string_view name = to_string(curve);
  if (curve == MonotoneCurve::SandwichedRenyi || curve == MonotoneCurve::DeltaTilde) {
    require_grid_within(grid, 0.5, 1.0, true, name.data());
  } else {
    require_grid_within(grid, 0.0, 1.0, true, name.data());
  }
  ScanReport r;
  r.curve = std::string(name);
  r.grid = grid;
  r.tolerance = tol;
  r.failure_is_finding = curve == MonotoneCurve::DeltaTilde;
  r.values = evaluate_grid(grid, [&](double x) { return evaluate(curve, inst, x); });
  r.min_monotonicity_slack = min_forward_difference(r.values);
  r.monotone_pass = *r.min_monotonicity_slack >= -tol;
  return r;
}

LimitReport secant_limit_check(LimitQuantity quantity, const ProblemInstance& inst,
                               const std::vector<double>& h_sequence, double tol,
                               double monotone_tol) {
  inst.validate();
  if (h_sequence.empty()) throw DomainError("secant_limit_check: empty h sequence");
  for (std::size_t i = 0; i < h_sequence.size(); ++i) {
    const double h = h_sequence[i];
    if (!(h > 0.0 && h < 0.5)) throw DomainError("secant_limit_check: h must lie in (0, 1/2)");
    if (i > 0 && !(h < h_sequence[i - 1])) {
      throw DomainError("secant_limit_check: h sequence must be decreasing");
    }
  }

  LimitReport r;
  r.quantity = std::string(to_string(quantity));
  r.h = h_sequence;
  r.tolerance = tol;

  const KrausChannel channel = inst.channel_or_identity();
  if (quantity == LimitQuantity::DeltaTilde) {
    r.target = finite_or_throw(relative_entropy_difference(inst.a, inst.b, channel),
                               "relative entropy difference");
  } else {
    r.target = finite_or_throw(relative_entropy(inst.a, inst.b), "relative entropy");
  }

  for (double h : h_sequence) {
    const double x = 1.0 - h;
    r.parameters.push_back(x);
    try {
      switch (quantity) {
        case LimitQuantity::RenyiTheta:
          r.values.push_back(finite_or_throw(renyi_theta(inst.a, inst.b, x), "renyi_theta"));
          break;
        case LimitQuantity::LnFThetaSecant:
          r.values.push_back(std::log(f_theta(inst.a, inst.b, x)) / (x - 1.0));
          break;
        case LimitQuantity::SandwichedRenyi:
          r.values.push_back(
              finite_or_throw(sandwiched_renyi(inst.a, inst.b, x), "sandwiched_renyi"));
          break;
        case LimitQuantity::DeltaTilde:
          r.values.push_back(
              finite_or_throw(delta_tilde(inst.a, inst.b, channel, x), "delta_tilde"));
          break;
      }
    } catch (const Error& e) {
      throw ScanError(x, e.what());
    }
  }

  r.increasing = true;
  r.converging = true;
  r.max_excess = -kInf;
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    r.max_excess = std::max(r.max_excess, r.values[i] - r.target);
    if (i == 0) continue;
    if (r.values[i] < r.values[i - 1] - monotone_tol) r.increasing = false;
    if (std::abs(r.values[i] - r.target) > std::abs(r.values[i - 1] - r.target) + monotone_tol) {
      r.converging = false;
    }
  }
  r.bounded = r.max_excess <= tol;
  return r;
}

// ---------------------------------------------------------------------------
// inequality suite

std::vector<CheckRecord> inequality_suite(const ProblemInstance& inst, double tol) {
  inst.validate();
  const DensityMatrix& a = inst.a;
  const DensityMatrix& b = inst.b;
  const KrausChannel channel = inst.channel_or_identity();
  std::vector<CheckRecord> out;

  // slack = rhs − lhs for "lhs ≤ rhs"
  auto le = [&](std::string name, double lhs, double rhs, double t) {
    const double slack = rhs - lhs;
    out.push_back({std::move(name), lhs, rhs, slack, t, slack >= -t});
  };

  const DivergenceValue d = relative_entropy(a, b);
  const double d_value = d.finite ? d.value : kInf;

  const DivergenceValue red = relative_entropy_difference(a, b, channel);
  if (red.finite) {
    const DensityMatrix pa = apply(channel, a);
    const DensityMatrix pb = apply(channel, b);
    le("data_processing", finite_or_throw(relative_entropy(pa, pb), "D(φ(A)|φ(B))"), d_value, tol);
  } else {
    le("data_processing", relative_entropy(apply(channel, a), apply(channel, b)).value, d_value,
       tol);
  }

  const double half = theta_divergence(a, b, 0.5);
  le("renyi_half_bound", half > 0.0 ? -2.0 * std::log(half) : kInf, d_value, tol);
  const double fid = fidelity(a, b);
  le("fidelity_bound", fid > 0.0 ? -2.0 * std::log(fid) : kInf, d_value, tol);

  for (int k = 1; k <= 9; ++k) {
    const double theta = k / 10.0;
    const double ft = f_theta(a, b, theta);
    const double vn = vn_upper_bound(a, b, theta);
    std::ostringstream n1, n2;
    n1 << "von_neumann_trace_bound@" << theta;
    n2 << "von_neumann_unit_bound@" << theta;
    le(n1.str(), ft, vn, 1e-10);
    le(n2.str(), vn, 1.0, 1e-10);
  }

  if (support_contained(a, b)) {
    for (double t : {0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
      const double td = theta_divergence(a, b, t);
      const double sf = sandwiched_f(a, b, t);
      const double ft = f_theta(a, b, t);
      std::ostringstream n1, n2;
      n1 << "alt_lower@" << t;
      n2 << "alt_upper@" << t;
      le(n1.str(), td, sf, 1e-10);
      le(n2.str(), sf, ft, 1e-10);
    }
  }

  const bool recoverable = b.positive_definite() && apply(channel, b).positive_definite();
  if (recoverable) {
    const DensityMatrix pb = apply(channel, b);
    const HermitianMatrix fixed = petz_recover(channel, b, pb.hermitian());
    const double err = trace_norm(fixed.matrix() - b.matrix());
    le("petz_fixed_point", err, 0.0, 1e-9);

    if (support_contained(a, b)) {
      const double loss = petz_fidelity_loss(a, b, channel);
      const double dt = finite_or_throw(delta_tilde(a, b, channel, 0.5), "delta_tilde");
      const double dilated =
          finite_or_throw(delta_tilde_dilated(a, b, channel, 0.5), "delta_tilde_dilated");
      le("delta_tilde_half_vs_petz_fidelity", std::abs(dt - loss), 0.0, 1e-8);
      le("delta_tilde_trace_vs_dilation", std::abs(dt - dilated), 0.0, 1e-8);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// counterexamples

double recompute_margin(const CounterexampleRecord& record) {
  const DensityMatrix a(record.a);
  const DensityMatrix b(record.b);
  const KrausChannel channel(record.kraus);
  if (record.kind == CounterexampleKind::PinchingConcavity) {
    const double theta = record.parameters.at("theta");
    const DensityMatrix pa = apply(channel, a);
    const DensityMatrix pb = apply(channel, b);
    return f_theta(a, b, theta) - f_theta(pa, pb, theta);
  }
  const ProblemInstance inst{record.label, a, b, channel};
  return evaluate_recoverability(inst, 0.0).margin;
}

std::optional<CounterexampleRecord> theorem6_construction(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theorem6_construction: θ must lie in (0,1)");
  if (std::abs(theta - 0.5) < 1e-12) return std::nullopt;

  CounterexampleRecord rec;
  rec.kind = CounterexampleKind::PinchingConcavity;
  rec.parameters["theta"] = theta;
  Matrix a(2, 2);
  Matrix b(2, 2);
  if (theta > 0.5) {
    rec.label = "pinching-concavity-theta-above-half";
    a << 0.5, 0.25, 0.25, 0.5;
    b << 1.0, 0.0, 0.0, 0.0;
  } else {
    rec.label = "pinching-concavity-theta-below-half";
    const double bound = 4.0 / (std::pow(4.0, 1.0 - theta) - 2.0);
    double t = 0.25;
    auto lhs = [theta](double s) {
      return std::pow((1.0 - s) / s, theta) + std::pow(s / (1.0 - s), theta);
    };
    while (!(lhs(t) > bound)) {
      t /= 2.0;
      if (t < 1e-12) throw NumericalError("theorem6_construction: no witness above t = 1e-12");
    }
    rec.parameters["t"] = t;
    a << 1.0 - t, 0.0, 0.0, t;
    b << 0.5, 0.5, 0.5, 0.5;
  }
  rec.a = a;
  rec.b = b;
  const KrausChannel pinching = diagonal_pinching(2);
  rec.kraus = pinching.kraus();

  const DensityMatrix da(a);
  const DensityMatrix db(b);
  rec.lhs = f_theta(da, db, theta);
  rec.rhs = f_theta(apply(pinching, da), apply(pinching, db), theta);
  rec.margin = rec.lhs - rec.rhs;
  rec.violation = rec.margin > 0.0;
  return rec;
}

CounterexampleRecord evaluate_recoverability(const ProblemInstance& inst, double tol) {
  inst.validate();
  const KrausChannel channel = inst.channel_or_identity();
  CounterexampleRecord rec;
  rec.kind = CounterexampleKind::Recoverability;
  rec.label = inst.label;
  rec.a = inst.a.matrix();
  rec.b = inst.b.matrix();
  rec.kraus = channel.kraus();
  rec.lhs = petz_fidelity_loss(inst.a, inst.b, channel);
  rec.rhs = finite_or_throw(relative_entropy_difference(inst.a, inst.b, channel),
                            "relative entropy difference");
  rec.margin = rec.lhs - rec.rhs;
  rec.violation = rec.margin > tol;
  return rec;
}

CounterexampleRecord reproduce_paper_counterexample() {
  return evaluate_recoverability(paper_example(), 0.0);
}

void SearchConfig::validate() const {
  if (trials < 1) throw DomainError("search: trials must be at least 1");
  if (dim_lo < 1 || dim_hi < dim_lo) throw DomainError("search: invalid dimension range");
  if (conjecture != "eq4") throw DomainError("search: unknown conjecture '" + conjecture + "'");
  if (!(tolerance >= 0.0)) throw DomainError("search: tolerance must be nonnegative");
}

std::vector<CounterexampleRecord> conjecture_search(const SearchConfig& config) {
  config.validate();
  const std::size_t n = static_cast<std::size_t>(config.trials);
  auto trial = [&](std::size_t i) -> std::optional<CounterexampleRecord> {
    const std::uint64_t seed = config.seed + i;
    ProblemInstance inst = [&] {
      if (config.include_paper_instance && i == 0) return paper_example();
      const Index dim = trial_dimension(seed, config.dim_lo, config.dim_hi);
      switch (config.ensemble) {
        case SearchEnsemble::EqualPairs:
          return equal_pair_instance(dim, seed);
        case SearchEnsemble::IdentityChannel:
          return identity_channel_instance(dim, seed);
        case SearchEnsemble::Stratified:
          break;
      }
      return stratified_instance(dim, seed, static_cast<int>(i % 3));
    }();
    CounterexampleRecord rec = evaluate_recoverability(inst, config.tolerance);
    if (!rec.violation) return std::nullopt;
    rec.seed = seed;
    return rec;
  };
  const auto results = parallel_map(n, config.workers, trial);
  std::vector<CounterexampleRecord> out;
  for (const auto& r : results) {
    if (r) out.push_back(*r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// rotated maps, spectral pinching, classical oracles

RotatedScanReport rotated_scan(const ProblemInstance& inst, const Grid& t_grid, double tol) {
  inst.validate();
  const KrausChannel channel = inst.channel_or_identity();
  const DensityMatrix pa = apply(channel, inst.a);
  RotatedScanReport r;
  r.grid = t_grid;
  r.tolerance = tol;
  r.fidelities = evaluate_grid(t_grid, [&](double t) {
    const HermitianMatrix rec = rotated_petz_recover(channel, inst.b, t, pa.hermitian());
    return fidelity(inst.a, DensityMatrix(rec, inst.a.tolerances()));
  });
  const auto best = std::max_element(r.fidelities.begin(), r.fidelities.end());
  const auto idx = static_cast<std::size_t>(best - r.fidelities.begin());
  r.argmax_t = t_grid.points[idx];
  r.max_fidelity = *best;
  r.lhs = -2.0 * std::log(r.max_fidelity);
  r.rhs = finite_or_throw(relative_entropy_difference(inst.a, inst.b, channel),
                          "relative entropy difference");
  r.witness = r.lhs <= r.rhs + tol;
  return r;
}

Matrix complete_basis(const Vector& x) {
  const Vector u = unit_vector(x);
  const Index n = u.size();
  Matrix basis(n, n);
  basis.col(0) = u;
  Index filled = 1;
  for (Index j = 0; j < n && filled < n; ++j) {
    Vector v = Vector::Unit(n, j);
    // two Gram–Schmidt passes
    for (int pass = 0; pass < 2; ++pass) {
      for (Index c = 0; c < filled; ++c) v -= basis.col(c).dot(v) * basis.col(c);
    }
    const double norm = v.norm();
    if (norm > 1e-6) basis.col(filled++) = v / norm;
  }
  return basis;
}

Theorem9Report theorem9_check(const DensityMatrix& b, const Vector& x, const Grid& grid) {
  require_grid_within(grid, 0.0, 1.0, false, "theorem9_check");
  if (x.size() != b.dim()) throw DimensionError("theorem9_check: x does not match B");
  if (!b.positive_definite()) throw IllPosedError("theorem9_check: B must be positive definite");
  const Vector u = unit_vector(x);
  const Matrix basis = complete_basis(u);
  const DensityMatrix a(HermitianMatrix::hermitized(u * u.adjoint()), b.tolerances());
  const KrausChannel pinching = pinching_channel(basis);
  const DensityMatrix pb = apply(pinching, b);

  Theorem9Report r;
  r.grid = grid;
  r.lhs = petz_fidelity_loss(a, b, pinching);
  r.rhs = finite_or_throw(relative_entropy_difference(a, b, pinching),
                          "relative entropy difference");
  r.inequality_slack = r.rhs - r.lhs;

  const double lambda = u.dot(b.matrix() * u).real();
  r.max_g_discrepancy = 0.0;
  for (double theta : grid.points) {
    const double closed =
        std::pow(lambda, -theta / 2.0) * u.dot(b.power(theta / 2.0) * u).real();
    const Matrix op = a.matrix() * pb.power(-theta / 2.0) * b.power(theta / 2.0) * a.matrix();
    const double via_matrix = schatten_norm(op, 2.0 / (1.0 + theta));
    r.g_closed_form.push_back(closed);
    r.g_matrix.push_back(via_matrix);
    r.max_g_discrepancy = std::max(r.max_g_discrepancy, std::abs(closed - via_matrix));
  }
  r.logconvexity_slack = min_log_second_difference(r.g_closed_form);
  r.pass = r.inequality_slack >= -1e-9 && r.max_g_discrepancy <= 1e-8 &&
           r.logconvexity_slack >= -1e-9;
  return r;
}

ScanReport classical_lemma1_oracle(const std::vector<double>& weights, const std::vector<double>& x,
                                   const std::vector<double>& y, const Grid& grid, double tol) {
  if (weights.empty() || weights.size() != x.size() || weights.size() != y.size()) {
    throw DimensionError("classical_lemma1_oracle: weights, X and Y must have equal length");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("classical_lemma1_oracle: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("classical_lemma1_oracle: weights must sum to 1");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw DomainError("classical_lemma1_oracle: X and Y must be strictly positive");
    }
  }
  require_grid_within(grid, 0.0, 1.0, false, "classical_lemma1_oracle");
  ScanReport r;
  r.curve = "classical_lemma1";
  r.grid = grid;
  r.tolerance = tol;
  for (double theta : grid.points) {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i] * std::pow(x[i], theta) * std::pow(y[i], 1.0 - theta);
    }
    r.values.push_back(acc);
  }
  r.min_logconvexity_slack = min_log_second_difference(r.values);
  r.logconvex_pass = *r.min_logconvexity_slack >= -tol;
  return r;
}

ClassicalRecoveryRecord classical_recovery_check(const std::vector<double>& p,
                                                 const std::vector<double>& q,
                                                 const Eigen::MatrixXd& transition) {
  const auto n = static_cast<Index>(p.size());
  if (n == 0 || q.size() != p.size() || transition.cols() != n) {
    throw DimensionError("classical_recovery_check: dimension mismatch");
  }
  for (Index i = 0; i < n; ++i) {
    if (!(q[static_cast<std::size_t>(i)] > 0.0)) {
      throw DomainError("classical_recovery_check: q must be strictly positive");
    }
    if (!(p[static_cast<std::size_t>(i)] >= 0.0)) {
      throw DomainError("classical_recovery_check: p must be nonnegative");
    }
  }
  const Eigen::Map<const Eigen::VectorXd> pv(p.data(), n);
  const Eigen::Map<const Eigen::VectorXd> qv(q.data(), n);
  if (std::abs(pv.sum() - 1.0) > 1e-12 || std::abs(qv.sum() - 1.0) > 1e-12) {
    throw DomainError("classical_recovery_check: p and q must be probability vectors");
  }
  if ((transition.array() < 0.0).any() ||
      ((transition.colwise().sum().array() - 1.0).abs() > 1e-12).any()) {
    throw DomainError("classical_recovery_check: T must be column stochastic");
  }
  const Eigen::VectorXd tp = transition * pv;
  const Eigen::VectorXd tq = transition * qv;
  if ((tq.array() <= 0.0).any()) {
    throw DomainError("classical_recovery_check: Tq must be strictly positive");
  }

  auto kl = [](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    double acc = 0.0;
    for (Index i = 0; i < u.size(); ++i) {
      if (u(i) > 0.0) acc += u(i) * std::log(u(i) / v(i));
    }
    return acc;
  };

  // R(y)ᵢ = qᵢ Σⱼ Tⱼᵢ yⱼ / (Tq)ⱼ
  const Eigen::VectorXd ratio = tp.cwiseQuotient(tq);
  const Eigen::VectorXd recovered = qv.cwiseProduct(transition.transpose() * ratio);
  double bc = 0.0;
  for (Index i = 0; i < n; ++i) bc += std::sqrt(pv(i) * recovered(i));

  ClassicalRecoveryRecord r;
  r.lhs = -2.0 * std::log(bc);
  r.rhs = kl(pv, qv) - kl(tp, tq);
  r.slack = r.rhs - r.lhs;
  r.pass = r.slack >= -1e-9;
  return r;
}

}  // namespace qdiv
