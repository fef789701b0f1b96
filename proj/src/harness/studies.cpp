#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlwave/errors.hpp"
#include "nlwave/harness.hpp"

namespace nlwave::harness {
namespace {

// Errors at or below this level count as exact agreement.
constexpr double kConverged = 1e-12;
// Observed orders may fall short of the nominal one by this much.
constexpr double kOrderSlack = 1e-3;

std::vector<double> sweep_values(const StudyConfig& cfg, const std::string& param,
                                 std::vector<double> fallback) {
  if (!cfg.sweep) {
    return fallback;
  }
  if (cfg.sweep->param != param) {
    throw UsageError("--sweep-param: this study sweeps '" + param + "', got '" +
                     cfg.sweep->param + "'");
  }
  if (cfg.sweep->values.empty()) {
    throw UsageError("--sweep-values: grid is empty");
  }
  std::vector<double> values = cfg.sweep->values;
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw UsageError("--sweep-values: grid contains duplicate values");
  }
  return values;
}

ProblemKind kind_of(const StudyConfig& cfg) {
  try {
    return problem_kind_from_string(cfg.problem);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--problem: ") + e.what());
  }
}

bool has_data(ProblemKind kind) { return kind != ProblemKind::Forced; }
bool has_force(ProblemKind kind) { return kind != ProblemKind::Homogeneous; }

std::string show(double x) { return format_number(x); }

// Monotone decrease of errors listed in approach order.
bool strictly_decreasing(const std::vector<double>& errors) {
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (!(errors[i] < errors[i - 1]) && !(errors[i] <= kConverged)) {
      return false;
    }
  }
  return true;
}

bool final_fraction_below(const std::vector<double>& errors, double tol) {
  if (errors.size() < 2) {
    return true;
  }
  return errors.back() <= tol * errors.front() || errors.back() <= kConverged;
}

struct Difference {
  double nonlocal = 0.0;
  double classical = 0.0;
  double diff = 0.0;
};

Difference solution_difference(const StudyConfig& cfg, const KernelParams& params, double index) {
  const WaveProblem problem = synthetic_problem(cfg, params);
  const SpectralField u = solve(problem, cfg.t).field;
  const SpectralField zero(params.n, cfg.K, true);
  const ProblemKind kind = problem.kind();
  const SpectralField u0 =
      solve_classical(has_data(kind) ? problem.f() : zero, has_data(kind) ? problem.g() : zero,
                      has_force(kind) ? problem.b() : zero, cfg.t)
          .field;
  return {sobolev_norm(u, index), sobolev_norm(u0, index), sobolev_distance(u, u0, index)};
}

void require_time(const StudyConfig& cfg) {
  if (!(cfg.t >= 0.0) || !std::isfinite(cfg.t)) {
    throw DomainError("t must be finite and >= 0");
  }
  if (cfg.K < 1) {
    throw DomainError("K must be >= 1");
  }
}

StudyReport begin(const char* study, const StudyConfig& cfg, std::vector<std::string> columns) {
  StudyReport r;
  r.study = study;
  r.config = config_echo(cfg);
  r.columns = std::move(columns);
  return r;
}

}  // namespace

double data_decay(double sobolev_index, int n) { return sobolev_index + 0.5 * n + 0.5; }

WaveProblem synthetic_problem(const StudyConfig& cfg, const KernelParams& params) {
  const ProblemKind kind = kind_of(cfg);
  MultiplierTable table = build_table(params, cfg.K);
  const int n = params.n;
  auto field = [&](double index, std::uint64_t offset) {
    return synthetic_field(n, cfg.K, data_decay(index, n), cfg.seed + offset);
  };
  switch (kind) {
    case ProblemKind::Homogeneous:
      return WaveProblem::homogeneous(std::move(table), field(cfg.s1, 0), field(cfg.s2, 1));
    case ProblemKind::Forced:
      return WaveProblem::forced(std::move(table), field(cfg.sigma, 2));
    case ProblemKind::Combined:
      return WaveProblem::combined(std::move(table), field(cfg.s1, 0), field(cfg.s2, 1),
                                   field(cfg.sigma, 2));
  }
  throw UsageError("--problem: unsupported kind");
}

StudyReport study_delta_convergence(const StudyConfig& cfg) {
  require_time(cfg);
  const ProblemKind kind = kind_of(cfg);
  const std::vector<double> deltas = sweep_values(cfg, "delta", {0.0625, 0.125, 0.25, 0.5});
  for (double d : deltas) {
    if (!(d > 0.0)) {
      throw DomainError("delta grid: every value must satisfy delta > 0, got " + show(d));
    }
  }
  const double n = cfg.n;
  const double beta = cfg.beta;
  double index = INFINITY;
  if (has_data(kind)) {
    const double theta = beta <= n + 2.0 ? std::max(0.0, 0.5 * (beta - n)) : 1.0;
    index = std::min({index, cfg.s1, cfg.s2 + theta});
  }
  if (has_force(kind)) {
    index = std::min(index, cfg.sigma + (beta <= n + 2.0 ? std::max(0.0, beta - n) : 2.0));
  }

  StudyReport report =
      begin("converge-delta", cfg, {"delta", "nonlocal_norm", "classical_norm", "diff_norm"});
  for (double d : deltas) {
    const Difference diff = solution_difference(cfg, KernelParams{cfg.n, d, beta}, index);
    report.rows.push_back({d, diff.nonlocal, diff.classical, diff.diff});
  }
  // Approach delta -> 0 walks the rows backwards.
  std::vector<double> errors;
  for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
    errors.push_back((*it)[3]);
  }
  report.verdicts = {{"monotone_decrease", strictly_decreasing(errors)},
                     {"final_below_tol", final_fraction_below(errors, cfg.tol.value_or(0.1))}};
  return report;
}

StudyReport study_beta_convergence(const StudyConfig& cfg) {
  require_time(cfg);
  const ProblemKind kind = kind_of(cfg);
  const double n = cfg.n;
  const double eps = cfg.epsilon;
  if (!(eps > 0.0 && eps < 2.0)) {
    throw DomainError("epsilon must satisfy 0 < epsilon < 2, got " + show(eps));
  }
  if (!(eps < 0.5 * n)) {
    throw DomainError("epsilon must satisfy epsilon < n/2 = " + show(0.5 * n) + ", got " +
                      show(eps));
  }
  std::vector<double> fallback;
  for (double f : {0.6, 0.4, 0.2, 0.1, 0.02}) {
    fallback.push_back(n + 2.0 - f * eps);
  }
  const std::vector<double> betas = sweep_values(cfg, "beta", fallback);
  for (double b : betas) {
    if (!(std::fabs(b - (n + 2.0)) < eps)) {
      throw DomainError("beta grid: every value must satisfy |beta - (n+2)| < epsilon = " +
                        show(eps) + ", got beta = " + show(b));
    }
  }
  double index = INFINITY;
  if (has_data(kind)) {
    index = std::min({index, cfg.s1, cfg.s2 + 0.5 * (2.0 - eps)});
  }
  if (has_force(kind)) {
    index = std::min(index, cfg.sigma + 2.0 - eps);
  }

  StudyReport report =
      begin("converge-beta", cfg, {"beta", "nonlocal_norm", "classical_norm", "diff_norm"});
  for (double b : betas) {
    const Difference diff = solution_difference(cfg, KernelParams{cfg.n, cfg.delta, b}, index);
    report.rows.push_back({b, diff.nonlocal, diff.classical, diff.diff});
  }
  std::vector<const std::vector<double>*> approach;
  for (const auto& row : report.rows) {
    approach.push_back(&row);
  }
  std::stable_sort(approach.begin(), approach.end(), [&](const auto* a, const auto* b) {
    return std::fabs((*a)[0] - (n + 2.0)) > std::fabs((*b)[0] - (n + 2.0));
  });
  std::vector<double> errors;
  for (const auto* row : approach) {
    errors.push_back((*row)[3]);
  }
  report.verdicts = {{"monotone_decrease", strictly_decreasing(errors)},
                     {"final_below_tol", final_fraction_below(errors, cfg.tol.value_or(0.05))}};
  return report;
}

StudyReport study_regularity(const StudyConfig& cfg) {
  require_time(cfg);
  if (cfg.sweep) {
    throw UsageError("--sweep-param: the regularity study takes no sweep");
  }
  const ProblemKind kind = kind_of(cfg);
  const double n = cfg.n;
  const double beta = cfg.beta;
  double predicted = INFINITY;
  if (has_data(kind)) {
    predicted = std::min({predicted, cfg.s1, cfg.s2 + std::max(0.0, 0.5 * (beta - n))});
  }
  if (has_force(kind)) {
    predicted = std::min(predicted, cfg.sigma + std::max(0.0, beta - n));
  }
  const double offset = data_decay(0.0, cfg.n);
  const int shell_min = 4;

  const WaveProblem problem = synthetic_problem(cfg, cfg.params());
  const SpectralField u = solve(problem, cfg.t).field;

  StudyReport report = begin("regularity", cfg,
                             {"box_radius", "fitted_index", "predicted_index", "abs_error",
                              "sobolev_norm"});
  for (int radius : {cfg.K / 2, cfg.K}) {
    if (radius <= shell_min) {
      throw InsufficientDataError("regularity: K/2 must exceed " + std::to_string(shell_min));
    }
    const SpectralField part = truncate(u, radius);
    const DecayFit fit = decay_exponent_fit(part, shell_min, radius);
    const double fitted = fit.exponent - offset;
    report.rows.push_back({static_cast<double>(radius), fitted, predicted,
                           std::fabs(fitted - predicted), sobolev_norm(part, predicted)});
  }
  const double half_norm = report.rows[0][4];
  const double full_norm = report.rows[1][4];
  report.verdicts = {
      {"exponent_match", report.rows[1][3] <= cfg.tol.value_or(0.2)},
      {"norm_stabilized", std::fabs(full_norm - half_norm) < 0.01 * full_norm}};
  return report;
}

StudyReport study_asymptotics(const StudyConfig& cfg) {
  const KernelParams params = cfg.params();
  params.validate();
  if (params.is_laplacian()) {
    throw DomainError("asymptotics: beta = n + 2 has no asymptotic branch");
  }
  const std::vector<double> radii = sweep_values(cfg, "r", {10.0, 100.0, 1000.0, 10000.0});
  for (double r : radii) {
    if (!(r > 1.0)) {
      throw DomainError("r grid: every value must satisfy r > 1, got " + show(r));
    }
  }
  StudyReport report =
      begin("asymptotics", cfg, {"r", "multiplier", "asymptotic", "ratio", "abs_ratio_error"});
  std::vector<double> errors;
  for (double r : radii) {
    const double m = multiplier(params, r).value;
    const double a = multiplier_asymptotic(params, r);
    const double ratio = m / a;
    report.rows.push_back({r, m, a, ratio, std::fabs(ratio - 1.0)});
    errors.push_back(std::fabs(ratio - 1.0));
  }
  report.verdicts = {{"ratio_error_decreasing", strictly_decreasing(errors)},
                     {"final_within_tol", errors.back() < cfg.tol.value_or(0.01)}};
  return report;
}

void check_temporal_admissible(const StudyConfig& cfg) {
  const ProblemKind kind = kind_of(cfg);
  const double n = cfg.n;
  const double beta = cfg.beta;
  const double q = cfg.q;
  const int p = cfg.p;
  if (p < 1) {
    throw DomainError("temporal: derivative order p must be >= 1");
  }
  auto fail = [&](const std::string& inequality, double lhs) {
    std::ostringstream s;
    s << "temporal: (q, p) = (" << show(q) << ", " << p << ") violates " << inequality
      << " (left side " << show(lhs) << ")";
    throw DomainError(s.str());
  };
  if (has_data(kind)) {
    const double s = std::min(cfg.s1, cfg.s2);
    if (beta < n) {
      if (q > s) fail("q <= min{s1, s2}", q - s);
    } else if (beta == n) {
      if (!(q < s)) fail("q < min{s1, s2}", q - s);
    } else {
      const double a = q - cfg.s1 + (p + 1) * (beta - n) / 2.0;
      if (a > 0.0) fail("q - s1 + (p+1)(beta-n)/2 <= 0", a);
      const double b = q - cfg.s2 + p * (beta - n) / 2.0;
      if (b > 0.0) fail("q - s2 + p(beta-n)/2 <= 0", b);
    }
  }
  if (has_force(kind)) {
    if (beta < n) {
      if (q > cfg.sigma) fail("q <= sigma", q - cfg.sigma);
    } else if (beta == n) {
      if (!(q < cfg.sigma)) fail("q < sigma", q - cfg.sigma);
    } else {
      const double a = q - cfg.sigma + (p - 1) * (beta - n) / 2.0;
      if (a > 0.0) fail("q - sigma + (p-1)(beta-n)/2 <= 0", a);
    }
  }
}

StudyReport study_temporal(const StudyConfig& cfg) {
  require_time(cfg);
  cfg.params().validate();
  check_temporal_admissible(cfg);
  const std::vector<double> steps = sweep_values(cfg, "h", {1e-4, 1e-3, 1e-2});
  for (double h : steps) {
    if (!(h > 0.0)) {
      throw DomainError("h grid: every value must satisfy h > 0, got " + show(h));
    }
  }
  const WaveProblem problem = synthetic_problem(cfg, cfg.params());
  const SpectralField lower = solve(problem, cfg.t, cfg.p - 1).field;
  const SpectralField exact = solve(problem, cfg.t, cfg.p).field;
  const double derivative_norm = sobolev_norm(exact, cfg.q);

  StudyReport report =
      begin("temporal", cfg, {"h", "error", "derivative_norm", "observed_order"});
  for (double h : steps) {
    const SpectralField ahead = solve(problem, cfg.t + h, cfg.p - 1).field;
    SpectralField quotient(ahead.dim(), ahead.box_radius(), ahead.real_flag());
    for (std::size_t i = 0; i < quotient.size(); ++i) {
      quotient[i] = (ahead[i] - lower[i]) / h;
    }
    report.rows.push_back({h, sobolev_distance(quotient, exact, cfg.q), derivative_norm, NAN});
  }
  bool decreasing = true;
  bool order_ok = true;
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const double e_small = report.rows[i][1];
    const double e_large = report.rows[i + 1][1];
    if (e_large <= kConverged && e_small <= kConverged) {
      continue;
    }
    if (!(e_small < e_large)) {
      decreasing = false;
    }
    const double order =
        std::log(e_large / e_small) / std::log(report.rows[i + 1][0] / report.rows[i][0]);
    report.rows[i][3] = order;
    if (!(order >= 1.0 - kOrderSlack)) {
      order_ok = false;
    }
  }
  report.verdicts = {{"error_decreasing", decreasing}, {"observed_order_at_least_1", order_ok}};
  return report;
}

}  // namespace nlwave::harness
