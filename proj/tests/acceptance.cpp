#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nlwave/harness.hpp"
#include "nlwave/multiplier.hpp"
#include "nlwave/torus.hpp"
#include "nlwave/wave.hpp"

using namespace nlwave;
using namespace nlwave::harness;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  while (o.detail.size() >= 2 && o.detail.compare(o.detail.size() - 2, 2, "; ") == 0) {
    o.detail.resize(o.detail.size() - 2);
  }
  if (budget_s > 0.0 && elapsed > budget_s) {
    o.pass = false;
    o.detail += fmt("; over the %.0f s budget", budget_s);
  }
  if (!o.pass) {
    ++failures;
  }
  std::printf("%s criterion %2d: %s [%s; %.3f s]\n", o.pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), elapsed);
  std::fflush(stdout);
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

Outcome cross_path_agreement() {
  double worst = 0.0;
  int compared = 0;
  for (int n = 1; n <= 3; ++n) {
    for (double delta : {0.5, 1.0, 2.0}) {
      for (double beta : {-1.0, 0.0, 0.5 * n, double(n), n + 1.0, n + 1.9, n + 2.5, n + 3.5}) {
        for (double r : {0.5, 1.0, 5.0, 10.0}) {
          const KernelParams p{n, delta, beta};
          const bool integral_form = beta < n + 2;
          const double reference =
              integral_form ? multiplier_quadrature(p, r) : multiplier_extended_quadrature(p, r);
          std::vector<double> others = {multiplier_hypergeometric(p, r).value,
                                        multiplier_radial_series(p, r), multiplier(p, r).value};
          if (integral_form) {
            others.push_back(multiplier_extended_quadrature(p, r));
          }
          for (double v : others) {
            worst = std::max(worst, rel(v, reference));
            ++compared;
          }
        }
      }
    }
  }
  return {worst <= 1e-7, fmt("worst relative gap %.2e", worst) + " over " +
                             std::to_string(compared) + " comparisons"};
}

Outcome spot_value() {
  const double m = multiplier({1, 1.0, 0.0}, 1.0).value;
  const double closed = 3.0 * (2.0 * std::sin(1.0) - 2.0);
  const bool ok = std::fabs(m - (-0.9511740906)) <= 1e-9 && std::fabs(m - closed) <= 1e-12;
  return {ok, fmt("m = %.12f", m) + fmt(", closed form %.12f", closed)};
}

Outcome laplacian_tables() {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const MultiplierTable t = build_table({n, 1.0, n + 2.0}, 16);
    for (const auto& e : t.entries()) {
      worst = std::max(worst, std::fabs(e.value + e.norm2) / (1.0 + e.norm2));
    }
  }
  return {worst <= 1e-10, fmt("max |m + |k|^2| / (1 + |k|^2) = %.2e", worst)};
}

Outcome small_horizon_rate() {
  bool ok = true;
  std::string detail = "ratios to delta^2/20:";
  for (double delta : {0.1, 0.05, 0.025}) {
    const double gap = std::fabs(multiplier({1, delta, 0.0}, 1.0).value + 1.0);
    const double ratio = gap / (delta * delta / 20.0);
    ok = ok && ratio >= 0.5 && ratio <= 2.0;
    detail += fmt(" %.6f", ratio);
  }
  return {ok, detail};
}

Outcome beta_limit() {
  double previous = INFINITY;
  bool decreasing = true;
  std::string detail = "|m + 9|:";
  for (double beta : {3.5, 3.75, 3.9, 3.99}) {
    const double gap = std::fabs(multiplier({2, 1.0, beta}, 3.0).value + 9.0);
    decreasing = decreasing && gap < previous;
    previous = gap;
    detail += fmt(" %.4g", gap);
  }
  return {decreasing && previous < 0.05, detail};
}

Outcome asymptotic_ratio() {
  bool ok = true;
  std::string detail;
  for (const auto& [n, beta] : {std::pair{1, 1.0}, std::pair{2, 3.0}}) {
    StudyConfig cfg;
    cfg.n = n;
    cfg.delta = 1.0;
    cfg.beta = beta;
    const StudyReport r = study_asymptotics(cfg);
    const double at_1e3 = r.rows[2][4];
    ok = ok && r.passed() && at_1e3 < 0.01;
    detail += fmt("n=%.0f: ", n) + fmt("|ratio-1| at 1e3 = %.2e", at_1e3) +
              (r.passed() ? " decreasing; " : " NOT decreasing; ");
  }
  return {ok, detail};
}

Outcome monotonicity() {
  std::vector<double> grid;
  for (int i = 1; i <= 25; ++i) {
    grid.push_back(2.6 + 1.8 * i / 26.0);
  }
  const MonotonicityScan s = monotonicity_scan(1, 1.0, 1.0, grid);
  return {s.verdict(), fmt("m from %.6f", s.values.front()) + fmt(" to %.6f", s.values.back())};
}

Outcome oracle_equivalence() {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disk = [&] { return std::polar(std::sqrt(unit(gen)), 2.0 * std::numbers::pi * unit(gen)); };
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double m = -100.0 * unit(gen);
    const cplx f = disk();
    const cplx g = disk();
    const cplx b = disk();
    const auto [a0, c0] = mode::homogeneous_weights(m, 1.0, 0);
    const auto [a1, c1] = mode::homogeneous_weights(m, 1.0, 1);
    const cplx u = a0 * f + c0 * g + mode::forced_weight(m, 1.0, 0) * b;
    const cplx v = a1 * f + c1 * g + mode::forced_weight(m, 1.0, 1) * b;
    const auto [ou, ov] = ode_mode_oracle(m, f, g, b, 1.0, 1e-4);
    worst = std::max({worst, std::abs(u - ou), std::abs(v - ov)});
  }
  return {worst <= 1e-6, fmt("max |closed form - RK4| = %.2e", worst)};
}

Outcome energy_conservation() {
  StudyConfig cfg;
  cfg.n = 1;
  cfg.K = 16;
  cfg.beta = 1.5;
  const WaveProblem p = synthetic_problem(cfg, cfg.params());
  const double e0 = energy(p, 0.0);
  double drift = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t = 10.0 * i / 99.0;
    drift = std::max(drift, std::fabs(energy(p, t) - e0) / e0);
  }
  return {e0 > 0.0 && drift <= 1e-12, fmt("E(0) = %.6g", e0) + fmt(", max relative drift %.2e", drift)};
}

Outcome residual_and_differences() {
  double residual = 0.0;
  double min_order = INFINITY;
  struct Case {
    std::string problem;
    double beta;
    double s1, s2, sigma;
  };
  const Case cases[] = {{"homogeneous", 2.0, 4.0, 3.0, 0.0},
                        {"homogeneous", 0.5, 4.0, 3.0, 0.0},
                        {"forced", 3.5, 0.0, 0.0, 3.0},
                        {"forced", 1.0, 0.0, 0.0, 2.0}};
  for (const Case& c : cases) {
    StudyConfig cfg;
    cfg.n = 1;
    cfg.K = 16;
    cfg.beta = c.beta;
    cfg.s1 = c.s1;
    cfg.s2 = c.s2;
    cfg.sigma = c.sigma;
    cfg.problem = c.problem;
    const WaveProblem p = synthetic_problem(cfg, cfg.params());
    const bool forced = p.kind() == ProblemKind::Forced;
    for (double t : {0.1, 1.0, 10.0}) {
      const SpectralField u = solve(p, t, 0).field;
      const SpectralField a = solve(p, t, 2).field;
      for (std::size_t i = 0; i < u.size(); ++i) {
        const double m = p.mode_multipliers()[i];
        const cplx force = forced ? p.b()[i] : cplx{};
        residual = std::max(residual, std::abs(a[i] - m * u[i] - force) / (1.0 + std::fabs(m)));
      }
    }
    for (int order = 1; order <= 3; ++order) {
      cfg.p = order;
      cfg.q = 0.0;
      check_temporal_admissible(cfg);
      const double t = 1.0;
      const SpectralField exact = solve(p, t, order).field;
      std::vector<double> errors;
      const std::vector<double> steps = {1e-2, 1e-3, 1e-4};
      for (double h : steps) {
        const SpectralField ahead = solve(p, t + h, order - 1).field;
        const SpectralField behind = solve(p, t - h, order - 1).field;
        SpectralField quotient(ahead.dim(), ahead.box_radius());
        for (std::size_t i = 0; i < quotient.size(); ++i) {
          quotient[i] = (ahead[i] - behind[i]) / (2.0 * h);
        }
        errors.push_back(sobolev_distance(quotient, exact, cfg.q));
      }
      for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        min_order = std::min(min_order, std::log(errors[i] / errors[i + 1]) /
                                            std::log(steps[i] / steps[i + 1]));
      }
    }
  }
  const bool ok = residual <= 1e-10 && min_order >= 2.0 - 1e-3;
  return {ok, fmt("max scaled residual %.2e", residual) + fmt(", min observed order %.4f", min_order)};
}

Outcome delta_convergence() {
  StudyConfig cfg;
  cfg.n = 1;
  cfg.beta = 0.0;
  cfg.t = 1.0;
  cfg.K = 32;
  cfg.s1 = 3.0;
  cfg.s2 = 2.0;
  cfg.sweep = Sweep{"delta", {0.5, 0.25, 0.125, 0.0625}};
  const StudyReport r = study_delta_convergence(cfg);
  const double ratio = r.rows.front()[3] / r.rows.back()[3];
  return {r.passed() && ratio < 0.1, fmt("last/first error = %.4f", ratio)};
}

Outcome beta_convergence() {
  bool ok = true;
  std::string detail;
  for (const char* problem : {"homogeneous", "forced"}) {
    StudyConfig cfg;
    cfg.n = 2;
    cfg.delta = 1.0;
    cfg.epsilon = 0.5;
    cfg.t = 1.0;
    cfg.K = 16;
    cfg.problem = problem;
    cfg.sweep = Sweep{"beta", {3.7, 3.8, 3.9, 3.95, 3.99}};
    const StudyReport r = study_beta_convergence(cfg);
    const double ratio = r.rows.back()[3] / r.rows.front()[3];
    ok = ok && r.passed() && ratio < 0.05;
    detail += std::string(problem) + fmt(" last/first = %.4f; ", ratio);
  }
  return {ok, detail};
}

Outcome regularity() {
  struct Case {
    const char* problem;
    double beta, s1, s2, sigma;
  };
  const Case cases[] = {{"homogeneous", 2.0, 3.0, 1.0, 0.0},
                        {"homogeneous", 0.0, 1.0, 5.0, 0.0},
                        {"forced", 3.5, 0.0, 0.0, 1.0}};
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    StudyConfig cfg;
    cfg.n = 1;
    cfg.K = 64;
    cfg.t = 1.0;
    cfg.beta = c.beta;
    cfg.s1 = c.s1;
    cfg.s2 = c.s2;
    cfg.sigma = c.sigma;
    cfg.problem = c.problem;
    const StudyReport r = study_regularity(cfg);
    const auto& row = r.rows.back();
    ok = ok && row[3] <= 0.2 && r.passed();
    detail += fmt("fit %.3f", row[1]) + fmt(" vs %.3f; ", row[2]);
  }
  return {ok, detail};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> runs = {
      {"converge-delta", "--n", "1", "--beta", "0", "--K", "16", "--seed", "3"},
      {"converge-beta", "--n", "2", "--K", "8", "--seed", "3"},
      {"regularity", "--n", "1", "--beta", "2", "--s1", "3", "--s2", "1", "--K", "32"},
      {"asymptotics", "--n", "2", "--beta", "3"},
      {"temporal", "--n", "1", "--beta", "2", "--s1", "4", "--s2", "3", "--K", "16"},
  };
  for (const auto& args : runs) {
    std::ostringstream a;
    std::ostringstream b;
    std::ostringstream err;
    run_cli(args, a, err);
    run_cli(args, b, err);
    if (a.str().empty() || a.str() != b.str()) {
      return {false, args[0] + " produced differing output"};
    }
  }
  return {true, std::to_string(runs.size()) + " studies byte-identical across runs"};
}

}  // namespace

int main() {
  criterion(1, "multiplier cross-path agreement", 10.0, cross_path_agreement);
  criterion(2, "closed-form spot value", 0.0, spot_value);
  criterion(3, "Laplacian specialization of tables", 0.0, laplacian_tables);
  criterion(4, "small-horizon rate delta^2/20", 0.0, small_horizon_rate);
  criterion(5, "beta -> n+2 multiplier limit", 0.0, beta_limit);
  criterion(6, "asymptotic ratio", 0.0, asymptotic_ratio);
  criterion(7, "monotonicity in beta", 5.0, monotonicity);
  criterion(8, "closed forms against RK4", 0.0, oracle_equivalence);
  criterion(9, "energy conservation", 0.0, energy_conservation);
  criterion(10, "ODE residual and derivative consistency", 0.0, residual_and_differences);
  criterion(11, "solution-level delta convergence", 30.0, delta_convergence);
  criterion(12, "solution-level beta convergence", 0.0, beta_convergence);
  criterion(13, "regularity exponent recovery", 60.0, regularity);
  criterion(14, "determinism of CLI studies", 0.0, determinism);
  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
