#include "qdiv/cli/execute.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "qdiv/cli/report.hpp"
#include "qdiv/suites.hpp"

namespace qdiv::cli {

namespace {

struct CommonOptions {
  std::string out_path;
  double tol = 1e-9;
  Tolerances tolerances;
  int workers = 0;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--out", opts.out_path, "Write the JSON report to FILE instead of stdout");
  sub->add_option("--tol", opts.tol, "Check tolerance")->capture_default_str();
  sub->add_option("--tol-hermiticity", opts.tolerances.hermiticity)->capture_default_str();
  sub->add_option("--tol-recon", opts.tolerances.recon)->capture_default_str();
  sub->add_option("--tol-support", opts.tolerances.support_clip)->capture_default_str();
  sub->add_option("--tol-trace", opts.tolerances.trace)->capture_default_str();
  sub->add_option("--workers", opts.workers, "Worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
}

std::pair<int, int> parse_dims(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const int d = std::stoi(text);
      return {d, d};
    }
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, sep);
    const std::string hi = text.substr(sep + 2);
    const int a = std::stoi(lo, &used_lo);
    const int b = std::stoi(hi, &used_hi);
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
    if (a < 1 || b < a) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError("--dims: expected a..b with 1 <= a <= b, got \"" + text + "\"");
  }
}

Grid parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw InputError("--grid: expected lo:hi:count");
  try {
    return Grid::uniform(std::stod(text.substr(0, c1)), std::stod(text.substr(c1 + 1, c2 - c1 - 1)),
                         std::stoi(text.substr(c2 + 1)));
  } catch (const std::logic_error&) {
    throw InputError("--grid: expected lo:hi:count, got \"" + text + "\"");
  }
}

ReportCheck value_check(std::string name, double value) {
  return {std::move(name), {value}, std::nullopt, 0.0, true};
}

ReportCheck suite_check(const std::string& suite, const SuiteCheck& c) {
  return {suite + "/" + c.name, {static_cast<double>(c.evaluations), static_cast<double>(c.failures)},
          c.min_slack, c.tolerance, c.pass};
}

// --------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string quantity;
  std::optional<double> theta;
  std::optional<double> t;
  std::string instance;
};

double require_param(const ComputeArgs& args) {
  if (args.theta && args.t) throw InputError("give only one of --theta and --t");
  if (args.theta) return *args.theta;
  if (args.t) return *args.t;
  throw InputError("quantity " + args.quantity + " needs --theta or --t");
}

double divergence_or_inf(const DivergenceValue& v) { return v.value; }

void run_compute(const ComputeArgs& args, const CommonOptions& opts, Report& report) {
  const ProblemInstance inst = load_instance(args.instance, opts.tolerances);
  const std::string& q = args.quantity;
  double value = 0.0;
  std::optional<double> param;
  if (q == "relative-entropy") {
    value = divergence_or_inf(relative_entropy(inst.a, inst.b));
  } else if (q == "fidelity") {
    value = fidelity(inst.a, inst.b);
  } else if (q == "red") {
    value = divergence_or_inf(
        relative_entropy_difference(inst.a, inst.b, inst.channel_or_identity()));
  } else {
    param = require_param(args);
    if (q == "theta-divergence") {
      value = theta_divergence(inst.a, inst.b, *param);
    } else if (q == "renyi") {
      value = divergence_or_inf(renyi_theta(inst.a, inst.b, *param));
    } else if (q == "f-theta") {
      value = f_theta(inst.a, inst.b, *param);
    } else if (q == "sandwiched-f") {
      value = sandwiched_f(inst.a, inst.b, *param);
    } else if (q == "sandwiched-renyi") {
      value = divergence_or_inf(sandwiched_renyi(inst.a, inst.b, *param));
    } else if (q == "delta-tilde") {
      value = divergence_or_inf(delta_tilde(inst.a, inst.b, inst.channel_or_identity(), *param));
    } else {
      throw InputError("unknown quantity " + q);
    }
  }
  report.checks.push_back(value_check(q, value));
  report.data = {{"instance", inst.label}, {"quantity", q}, {"value", number_or_null(value)}};
  if (param) report.data["parameter"] = *param;
}

// --------------------------------------------------------------------------
// scan

struct ScanArgs {
  std::string curve;
  std::string grid;
  std::string instance;
};

Json scan_payload(const ScanReport& r) {
  Json values = Json::array();
  for (double v : r.values) values.push_back(number_or_null(v));
  return {{"curve", r.curve},
          {"grid", {{"lo", r.grid.lo}, {"hi", r.grid.hi}, {"count", r.grid.count}}},
          {"points", r.grid.points},
          {"values", std::move(values)},
          {"failure_is_finding", r.failure_is_finding}};
}

void run_scan(const ScanArgs& args, const CommonOptions& opts, Report& report) {
  const ProblemInstance inst = load_instance(args.instance, opts.tolerances);
  if (args.curve == "rotated_petz") {
    const Grid grid = parse_grid(args.grid.empty() ? "-5:5:101" : args.grid);
    const RotatedScanReport r = rotated_scan(inst, grid, opts.tol);
    report.checks.push_back({"rotated_petz witness on grid",
                             {r.lhs, r.rhs, r.argmax_t},
                             r.rhs - r.lhs,
                             opts.tol,
                             r.witness});
    report.data = {{"curve", "rotated_petz"},
                   {"grid", {{"lo", grid.lo}, {"hi", grid.hi}, {"count", grid.count}}},
                   {"points", grid.points},
                   {"fidelities", r.fidelities},
                   {"argmax_t", r.argmax_t},
                   {"max_fidelity", r.max_fidelity}};
    return;
  }
  if (auto curve = parse_logconvex_curve(args.curve)) {
    const bool upper = *curve == LogConvexCurve::SandwichedF;
    const Grid grid = parse_grid(args.grid.empty() ? (upper ? "0.5:1:101" : "0:1:101") : args.grid);
    const ScanReport r = logconvexity_scan(*curve, inst, grid, opts.tol);
    report.checks.push_back({r.curve + " log-convexity",
                             {},
                             r.min_logconvexity_slack,
                             opts.tol,
                             *r.logconvex_pass});
    report.data = scan_payload(r);
    return;
  }
  if (auto curve = parse_monotone_curve(args.curve)) {
    const bool upper =
        *curve == MonotoneCurve::SandwichedRenyi || *curve == MonotoneCurve::DeltaTilde;
    const Grid grid =
        parse_grid(args.grid.empty() ? (upper ? "0.5:0.99:101" : "0:0.99:101") : args.grid);
    const ScanReport r = monotonicity_scan(*curve, inst, grid, opts.tol);
    ReportCheck check{r.curve + " monotone", {}, r.min_monotonicity_slack, opts.tol,
                      *r.monotone_pass};
    if (!r.values.empty()) check.values = {r.values.front(), r.values.back()};
    report.checks.push_back(std::move(check));
    report.data = scan_payload(r);
    return;
  }
  throw InputError("unknown curve " + args.curve);
}

// --------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite = "all";
  int trials = 200;
  std::uint64_t seed = 0;
  std::string dims = "2..6";
  int points = 101;
};

void run_verify(const VerifyArgs& args, const CommonOptions& opts, Report& report) {
  std::vector<Suite> suites;
  if (args.suite == "all") {
    suites = all_suites();
  } else if (auto s = parse_suite(args.suite)) {
    suites = {*s};
  } else {
    throw InputError("unknown suite " + args.suite);
  }
  SuiteConfig cfg;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dims(args.dims);
  cfg.grid_points = args.points;
  cfg.workers = opts.workers;
  cfg.validate();
  report.seed = args.seed;

  Json per_suite = Json::object();
  for (Suite s : suites) {
    const SuiteResult result = run_suite(s, cfg);
    for (const auto& c : result.checks) report.checks.push_back(suite_check(result.suite, c));
    Json worst = Json::object();
    for (const auto& c : result.checks) {
      if (c.worst_trial >= 0) worst[c.name] = c.worst_trial;
    }
    per_suite[result.suite] = {{"pass", result.passed()}, {"worst_trial", std::move(worst)}};
  }
  report.data = {{"suites", std::move(per_suite)},
                 {"trials", cfg.trials},
                 {"dims", {cfg.dim_lo, cfg.dim_hi}},
                 {"grid_points", cfg.grid_points}};
}

// --------------------------------------------------------------------------
// reproduce / search

void run_reproduce(const std::string& target, Report& report) {
  if (target != "paper-example") throw InputError("reproduce: unknown target " + target);
  const ProblemInstance inst = paper_example();
  const CounterexampleRecord rec = reproduce_paper_counterexample();
  const KrausChannel channel = inst.channel_or_identity();
  const double d = relative_entropy(inst.a, inst.b).value;
  const double d_image =
      relative_entropy(apply(channel, inst.a), apply(channel, inst.b)).value;
  report.checks.push_back({"recoverability lhs <= rhs", {rec.lhs, rec.rhs}, rec.rhs - rec.lhs,
                           0.0, !rec.violation});
  report.data = {{"record", to_json(rec)},
                 {"relative_entropy", d},
                 {"image_relative_entropy", d_image},
                 {"rhs", rec.rhs},
                 {"lhs", rec.lhs},
                 {"violation", rec.violation}};
}

struct SearchArgs {
  std::string conjecture = "eq4";
  int trials = 100;
  std::uint64_t seed = 0;
  std::string dims = "2..3";
  std::string ensemble = "stratified";
  bool include_paper = false;
};

void run_search(const SearchArgs& args, const CommonOptions& opts, Report& report) {
  SearchConfig cfg;
  cfg.conjecture = args.conjecture;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dims(args.dims);
  cfg.tolerance = opts.tol;
  cfg.include_paper_instance = args.include_paper;
  cfg.workers = opts.workers;
  if (args.ensemble == "stratified") {
    cfg.ensemble = SearchEnsemble::Stratified;
  } else if (args.ensemble == "equal-pairs") {
    cfg.ensemble = SearchEnsemble::EqualPairs;
  } else if (args.ensemble == "identity-channel") {
    cfg.ensemble = SearchEnsemble::IdentityChannel;
  } else {
    throw InputError("unknown ensemble " + args.ensemble);
  }
  cfg.validate();
  report.seed = args.seed;

  const std::vector<CounterexampleRecord> records = conjecture_search(cfg);
  Json hits = Json::array();
  for (const auto& rec : records) {
    std::string name = "violation " + rec.label;
    if (rec.seed) name += " seed=" + std::to_string(*rec.seed);
    report.checks.push_back({std::move(name), {rec.lhs, rec.rhs}, rec.rhs - rec.lhs, cfg.tolerance,
                             false});
    hits.push_back(to_json(rec));
  }
  report.checks.push_back({"violations found",
                           {static_cast<double>(records.size())},
                           std::nullopt,
                           0.0,
                           records.empty()});
  report.data = {{"conjecture", cfg.conjecture},
                 {"ensemble", args.ensemble},
                 {"trials", cfg.trials},
                 {"dims", {cfg.dim_lo, cfg.dim_hi}},
                 {"records", std::move(hits)}};
}

void emit(const Report& report, const std::string& path, std::ostream& out) {
  const std::string text = to_json(report).dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qdiv: quantum divergences, recovery maps and numerical certification", "qdiv"};
  app.require_subcommand(1);
  CommonOptions opts;
  std::function<void(Report&)> action;

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate one quantity on an instance");
  c->add_option("--quantity", compute.quantity)
      ->required()
      ->check(CLI::IsMember({"relative-entropy", "theta-divergence", "renyi", "fidelity", "f-theta",
                             "sandwiched-f", "sandwiched-renyi", "delta-tilde", "red"}));
  c->add_option("--theta", compute.theta);
  c->add_option("--t", compute.t);
  c->add_option("--instance", compute.instance, "Instance JSON file or paper-example")->required();
  add_common(c, opts);
  c->callback([&] { action = [&](Report& r) { run_compute(compute, opts, r); }; });

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "Grid scan of a curve for log-convexity or monotonicity");
  s->add_option("--curve", scan.curve)->required();
  s->add_option("--grid", scan.grid, "lo:hi:count");
  s->add_option("--instance", scan.instance)->required();
  add_common(s, opts);
  s->callback([&] { action = [&](Report& r) { run_scan(scan, opts, r); }; });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run seeded verification suites");
  v->add_option("--suite", verify.suite)->capture_default_str();
  v->add_option("--trials", verify.trials)->capture_default_str();
  v->add_option("--seed", verify.seed)->capture_default_str();
  v->add_option("--dims", verify.dims, "a..b")->capture_default_str();
  v->add_option("--points", verify.points, "Grid points per scan")->capture_default_str();
  add_common(v, opts);
  v->callback([&] { action = [&](Report& r) { run_verify(verify, opts, r); }; });

  std::string target;
  auto* p = app.add_subcommand("reproduce", "Reproduce a built-in counterexample");
  p->add_option("target", target)->required();
  add_common(p, opts);
  p->callback([&] { action = [&](Report& r) { run_reproduce(target, r); }; });

  SearchArgs search;
  auto* q = app.add_subcommand("search", "Randomized search for recoverability violations");
  q->add_option("--conjecture", search.conjecture)->capture_default_str();
  q->add_option("--trials", search.trials)->capture_default_str();
  q->add_option("--seed", search.seed)->capture_default_str();
  q->add_option("--dims", search.dims, "a..b")->capture_default_str();
  q->add_option("--ensemble", search.ensemble)
      ->check(CLI::IsMember({"stratified", "equal-pairs", "identity-channel"}))
      ->capture_default_str();
  q->add_flag("--include-paper", search.include_paper);
  add_common(q, opts);
  q->callback([&] { action = [&](Report& r) { run_search(search, opts, r); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "qdiv: " << e.what() << "\n";
    return kExitInvalid;
  }

  Report report;
  report.command = args;
  report.tolerances = opts.tolerances;
  const auto start = std::chrono::steady_clock::now();
  try {
    opts.tolerances.validate();
    if (!(opts.tol >= 0.0) || !std::isfinite(opts.tol)) {
      throw InputError("--tol must be finite and non-negative");
    }
    action(report);
    report.finalize();
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(report, opts.out_path, out);
  } catch (const Error& e) {
    err << "qdiv: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Json::exception& e) {
    err << "qdiv: " << e.what() << "\n";
    return kExitInvalid;
  }
  return report.pass ? kExitPass : kExitViolations;
}

}  // namespace qdiv::cli
