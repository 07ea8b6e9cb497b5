#include "qdiv/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

#include "qdiv/ensembles.hpp"
#include "qdiv/parallel.hpp"

namespace qdiv {

namespace {

struct Observation {
  std::string name;
  double slack;
  double tolerance;
};

using Observations = std::vector<Observation>;

class Aggregator {
 public:
  void add(const Observation& obs, int trial) {
    auto [it, inserted] = index_.try_emplace(obs.name, checks_.size());
    if (inserted) {
      SuiteCheck c;
      c.name = obs.name;
      c.min_slack = std::numeric_limits<double>::infinity();
      c.tolerance = obs.tolerance;
      checks_.push_back(c);
    }
    SuiteCheck& c = checks_[it->second];
    ++c.evaluations;
    c.tolerance = std::max(c.tolerance, obs.tolerance);
    const bool ok = obs.slack >= -obs.tolerance;
    if (!ok) ++c.failures;
    if (obs.slack < c.min_slack || std::isnan(obs.slack)) {
      c.min_slack = obs.slack;
      c.worst_trial = trial;
    }
    c.pass = c.failures == 0 && !std::isnan(c.min_slack);
  }

  std::vector<SuiteCheck> take() { return std::move(checks_); }

 private:
  std::vector<SuiteCheck> checks_;
  std::unordered_map<std::string, std::size_t> index_;
};

template <typename Trial>
SuiteResult run_trials(std::string_view name, const SuiteConfig& cfg, Trial&& trial) {
  const auto results = parallel_map(static_cast<std::size_t>(cfg.trials), cfg.workers,
                                    [&](std::size_t i) {
                                      const std::uint64_t seed = cfg.seed + i;
                                      const Index dim =
                                          cfg.dim_lo + static_cast<Index>(i) %
                                                           (cfg.dim_hi - cfg.dim_lo + 1);
                                      return trial(dim, seed);
                                    });
  Aggregator agg;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const auto& obs : results[i]) agg.add(obs, static_cast<int>(i));
  }
  return {std::string(name), agg.take()};
}

void add_fixed(SuiteResult& result, const Observation& obs) {
  SuiteCheck c;
  c.name = obs.name;
  c.min_slack = obs.slack;
  c.tolerance = obs.tolerance;
  c.evaluations = 1;
  c.pass = obs.slack >= -obs.tolerance;
  c.failures = c.pass ? 0 : 1;
  result.checks.push_back(c);
}

std::string family(const std::string& name) { return name.substr(0, name.find('@')); }

// ---------------------------------------------------------------------------

SuiteResult logconvexity_suite(const SuiteConfig& cfg) {
  const Grid unit = Grid::uniform(0.0, 1.0, cfg.grid_points);
  const Grid upper = Grid::uniform(0.5, 1.0, cfg.grid_points);
  return run_trials("logconvexity", cfg, [&](Index dim, std::uint64_t seed) {
    const ProblemInstance inst = random_pd_instance(dim, seed);
    Observations out;
    for (auto [curve, grid] : {std::pair{LogConvexCurve::ThetaDivergence, &unit},
                               std::pair{LogConvexCurve::FTheta, &unit},
                               std::pair{LogConvexCurve::SandwichedF, &upper},
                               std::pair{LogConvexCurve::StatePower, &unit}}) {
      const ScanReport r = logconvexity_scan(curve, inst, *grid, 1e-9);
      out.push_back({std::string(to_string(curve)) + " log-convexity",
                     *r.min_logconvexity_slack, 1e-9});
    }
    return out;
  });
}

SuiteResult monotonicity_suite(const SuiteConfig& cfg) {
  const Grid theta = Grid::uniform(0.0, 0.99, cfg.grid_points);
  const Grid t = Grid::uniform(0.5, 0.99, cfg.grid_points);
  return run_trials("monotonicity", cfg, [&](Index dim, std::uint64_t seed) {
    const ProblemInstance inst = random_pd_instance(dim, seed);
    const double d = relative_entropy(inst.a, inst.b).value;
    Observations out;
    for (auto [curve, grid] : {std::pair{MonotoneCurve::RenyiTheta, &theta},
                               std::pair{MonotoneCurve::SandwichedRenyi, &t},
                               std::pair{MonotoneCurve::SecantFTheta, &theta}}) {
      const ScanReport r = monotonicity_scan(curve, inst, *grid, 1e-9);
      const std::string name(to_string(curve));
      out.push_back({name + " monotone", *r.min_monotonicity_slack, 1e-9});
      const double top = *std::max_element(r.values.begin(), r.values.end());
      out.push_back({name + " below relative entropy", d - top, 1e-9});
    }
    return out;
  });
}

void limit_observations(Observations& out, const LimitReport& r) {
  double step = std::numeric_limits<double>::infinity();
  double approach = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < r.values.size(); ++i) {
    step = std::min(step, r.values[i] - r.values[i - 1]);
    approach = std::min(approach,
                        std::abs(r.values[i - 1] - r.target) - std::abs(r.values[i] - r.target));
  }
  out.push_back({r.quantity + " limit increasing", step, 1e-9});
  out.push_back({r.quantity + " limit bounded by target", -r.max_excess, 1e-8});
  out.push_back({r.quantity + " limit converging", approach, 1e-9});
}

const std::vector<double> kLimitSteps{1e-1, 1e-2, 1e-3};

SuiteResult limits_suite(const SuiteConfig& cfg) {
  SuiteResult result = run_trials("limits", cfg, [&](Index dim, std::uint64_t seed) {
    const ProblemInstance inst = random_pd_instance(dim, seed);
    Observations out;
    for (auto q : {LimitQuantity::RenyiTheta, LimitQuantity::LnFThetaSecant,
                   LimitQuantity::SandwichedRenyi, LimitQuantity::DeltaTilde}) {
      limit_observations(out, secant_limit_check(q, inst, kLimitSteps));
    }
    return out;
  });

  // Commuting pair diag(1/2,1/2) vs diag(3/4,1/4): target is the scalar KL.
  Matrix a = Matrix::Zero(2, 2);
  a.diagonal() << 0.5, 0.5;
  Matrix b = Matrix::Zero(2, 2);
  b.diagonal() << 0.75, 0.25;
  const ProblemInstance commuting{"commuting", DensityMatrix(a), DensityMatrix(b), std::nullopt};
  const double kl = 0.5 * std::log(0.5 / 0.75) + 0.5 * std::log(0.5 / 0.25);
  Observations fixed;
  for (auto q : {LimitQuantity::RenyiTheta, LimitQuantity::LnFThetaSecant,
                 LimitQuantity::SandwichedRenyi}) {
    const LimitReport r = secant_limit_check(q, commuting, kLimitSteps);
    fixed.push_back({"commuting " + r.quantity + " target matches scalar KL",
                     -std::abs(r.target - kl), 1e-12});
    Observations lim;
    limit_observations(lim, r);
    for (auto& o : lim) fixed.push_back({"commuting " + o.name, o.slack, o.tolerance});
  }

  // Δ̃ approaches the relative entropy difference on the built-in example.
  const ProblemInstance paper = paper_example();
  const LimitReport dt = secant_limit_check(LimitQuantity::DeltaTilde, paper, {1e-3});
  fixed.push_back({"paper-example delta_tilde within 0.01 of target at h=1e-3",
                   0.01 - std::abs(dt.values.front() - dt.target), 0.0});
  for (const auto& o : fixed) add_fixed(result, o);
  return result;
}

SuiteResult inequalities_suite(const SuiteConfig& cfg) {
  return run_trials("inequalities", cfg, [&](Index dim, std::uint64_t seed) {
    const ProblemInstance inst =
        stratified_instance(dim, seed, static_cast<int>(seed % 3));
    Observations out;
    for (const auto& rec : inequality_suite(inst, 1e-9)) {
      out.push_back({family(rec.name), rec.slack, rec.tolerance});
    }
    return out;
  });
}

SuiteResult theorem6_suite() {
  SuiteResult result{"theorem6", {}};
  for (int k = 2; k <= 18; ++k) {
    const double theta = k / 20.0;
    const auto rec = theorem6_construction(theta);
    const std::string name = "theorem6@" + std::to_string(theta).substr(0, 4);
    if (k == 10) {
      add_fixed(result, {name + " no witness", rec ? -1.0 : 0.0, 0.0});
      continue;
    }
    if (!rec) {
      add_fixed(result, {name + " violation", -1.0, 0.0});
      continue;
    }
    add_fixed(result, {name + " violation", rec->violation ? rec->margin : -1.0, 0.0});
    add_fixed(result, {name + " margin recomputes",
                       -std::abs(recompute_margin(*rec) - rec->margin), 1e-9});
  }
  return result;
}

SuiteResult theorem9_suite(const SuiteConfig& cfg) {
  const Grid grid = Grid::uniform(0.0, 1.0, cfg.grid_points);
  return run_trials("theorem9", cfg, [&](Index dim, std::uint64_t seed) {
    const DensityMatrix b = random_state(dim, dim, sub_seed(seed, 2));
    const Vector x = random_unit_vector(dim, seed);
    const Theorem9Report r = theorem9_check(b, x, grid);
    return Observations{{"theorem9 recoverability inequality", r.inequality_slack, 1e-9},
                        {"theorem9 closed form vs matrix g", -r.max_g_discrepancy, 1e-8},
                        {"theorem9 g log-convexity", r.logconvexity_slack, 1e-9}};
  });
}

std::vector<double> random_simplex(std::mt19937_64& gen, Index n, bool allow_zero) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : v) {
    x = u(gen) + (allow_zero ? 0.0 : 1e-3);
    total += x;
  }
  if (allow_zero && n > 1 && u(gen) < 0.3) {
    total -= v.front();
    v.front() = 0.0;
  }
  for (auto& x : v) x /= total;
  return v;
}

SuiteResult classical_suite(const SuiteConfig& cfg) {
  const Grid grid = Grid::uniform(0.0, 1.0, 11);
  return run_trials("classical", cfg, [&](Index dim, std::uint64_t seed) {
    std::mt19937_64 gen(sub_seed(seed, 400));
    Observations out;

    const std::vector<double> p = random_simplex(gen, dim, true);
    const std::vector<double> q = random_simplex(gen, dim, false);
    const Index out_dim = std::uniform_int_distribution<Index>(1, dim + 1)(gen);
    Eigen::MatrixXd t(out_dim, dim);
    for (Index j = 0; j < dim; ++j) {
      const std::vector<double> col = random_simplex(gen, out_dim, true);
      for (Index i = 0; i < out_dim; ++i) t(i, j) = col[static_cast<std::size_t>(i)];
      t.col(j) /= t.col(j).sum();
    }
    // Outputs no column reaches carry no mass under Tq; drop them.
    std::vector<Index> live;
    for (Index i = 0; i < out_dim; ++i) {
      if (t.row(i).sum() > 0.0) live.push_back(i);
    }
    t = Eigen::MatrixXd(t(live, Eigen::all));
    const ClassicalRecoveryRecord rec = classical_recovery_check(p, q, t);
    out.push_back({"classical recoverability", rec.slack, 1e-9});

    const std::vector<double> lam = random_simplex(gen, dim, false);
    const std::vector<double> sig = random_simplex(gen, dim, false);
    std::vector<double> w(static_cast<std::size_t>(dim), 1.0 / static_cast<double>(dim));
    std::vector<double> xs, ys;
    Matrix a = Matrix::Zero(dim, dim);
    Matrix b = Matrix::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i) {
      const auto k = static_cast<std::size_t>(i);
      xs.push_back(static_cast<double>(dim) * lam[k]);
      ys.push_back(static_cast<double>(dim) * sig[k]);
      a(i, i) = lam[k];
      b(i, i) = sig[k];
    }
    const ScanReport oracle = classical_lemma1_oracle(w, xs, ys, grid);
    const DensityMatrix da(a);
    const DensityMatrix db(b);
    double worst = 0.0;
    for (std::size_t g = 0; g < grid.points.size(); ++g) {
      worst = std::max(worst,
                       std::abs(theta_divergence(da, db, grid.points[g]) - oracle.values[g]));
    }
    out.push_back({"lemma1 oracle matches theta_divergence", -worst, 1e-12});
    out.push_back({"lemma1 log-convexity", *oracle.min_logconvexity_slack, 1e-9});
    return out;
  });
}

SuiteResult corollary3_suite(const SuiteConfig& cfg) {
  return run_trials("corollary3", cfg, [&](Index dim, std::uint64_t seed) {
    const DensityMatrix rho = random_state(dim, dim, sub_seed(seed, 1));
    std::mt19937_64 gen(sub_seed(seed, 500));
    const double scale = std::uniform_real_distribution<double>(0.1, 10.0)(gen);
    const HermitianMatrix x = HermitianMatrix::hermitized(
        scale * random_state(dim, dim, sub_seed(seed, 2)).matrix());
    const double phi_x = real_trace(rho.matrix() * x.matrix());
    return Observations{
        {"corollary3 gap", corollary3_gap(rho, x), 1e-10},
        {"corollary3 refines Jensen", corollary3_rhs(rho, x) - phi_x * std::log(phi_x), 1e-10}};
  });
}

}  // namespace

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::LogConvexity: return "logconvexity";
    case Suite::Monotonicity: return "monotonicity";
    case Suite::Limits: return "limits";
    case Suite::Inequalities: return "inequalities";
    case Suite::Theorem6: return "theorem6";
    case Suite::Theorem9: return "theorem9";
    case Suite::Classical: return "classical";
    case Suite::Corollary3: return "corollary3";
  }
  return "unknown";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::LogConvexity, Suite::Monotonicity,
                                         Suite::Limits,       Suite::Inequalities,
                                         Suite::Theorem6,     Suite::Theorem9,
                                         Suite::Classical,    Suite::Corollary3};
  return suites;
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

void SuiteConfig::validate() const {
  if (trials < 1) throw DomainError("suite: trials must be at least 1");
  if (dim_lo < 1 || dim_hi < dim_lo) throw DomainError("suite: invalid dimension range");
  if (grid_points < 3) throw DomainError("suite: grids need at least 3 points");
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

SuiteResult run_suite(Suite suite, const SuiteConfig& config) {
  config.validate();
  switch (suite) {
    case Suite::LogConvexity: return logconvexity_suite(config);
    case Suite::Monotonicity: return monotonicity_suite(config);
    case Suite::Limits: return limits_suite(config);
    case Suite::Inequalities: return inequalities_suite(config);
    case Suite::Theorem6: return theorem6_suite();
    case Suite::Theorem9: return theorem9_suite(config);
    case Suite::Classical: return classical_suite(config);
    case Suite::Corollary3: return corollary3_suite(config);
  }
  throw DomainError("unknown suite");
}

}  // namespace qdiv
