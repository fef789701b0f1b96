#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nlwave/errors.hpp"
#include "nlwave/harness.hpp"
#include "nlwave/serialize.hpp"

namespace nlwave::harness {
namespace {

struct Overrides {
  std::string config;
  std::optional<int> n;
  std::optional<double> delta;
  std::optional<double> beta;
  std::optional<int> K;
  std::optional<double> t;
  std::optional<double> s1;
  std::optional<double> s2;
  std::optional<double> sigma;
  std::optional<double> epsilon;
  std::optional<std::string> sweep_param;
  std::optional<std::string> sweep_values;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> problem;
  std::optional<double> q;
  std::optional<int> p;
};

void add_config_options(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config, "JSON study configuration");
  app->add_option("--n", o.n, "spatial dimension");
  app->add_option("--delta", o.delta, "horizon");
  app->add_option("--beta", o.beta, "kernel exponent");
  app->add_option("--K", o.K, "box radius");
  app->add_option("--t", o.t, "time");
  app->add_option("--s1", o.s1, "Sobolev index of f");
  app->add_option("--s2", o.s2, "Sobolev index of g");
  app->add_option("--sigma", o.sigma, "Sobolev index of b");
  app->add_option("--epsilon", o.epsilon, "beta window half width");
  app->add_option("--sweep-param", o.sweep_param, "swept parameter");
  app->add_option("--sweep-values", o.sweep_values, "comma separated grid");
  app->add_option("--tol", o.tol, "verdict tolerance");
  app->add_option("--seed", o.seed, "synthetic data seed");
  app->add_option("--format", o.format, "csv or json");
  app->add_option("--out", o.out, "output path (default stdout)");
  app->add_option("--problem", o.problem, "homogeneous, forced or combined");
  app->add_option("--q", o.q, "Sobolev index of the temporal norm");
  app->add_option("--p", o.p, "derivative order");
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw UsageError("--sweep-values: '" + item + "' is not a number");
    }
  }
  return values;
}

StudyConfig resolve(const Overrides& o) {
  StudyConfig cfg = o.config.empty() ? StudyConfig{} : load_config(o.config);
  if (o.n) cfg.n = *o.n;
  if (o.delta) cfg.delta = *o.delta;
  if (o.beta) cfg.beta = *o.beta;
  if (o.K) cfg.K = *o.K;
  if (o.t) cfg.t = *o.t;
  if (o.s1) cfg.s1 = *o.s1;
  if (o.s2) cfg.s2 = *o.s2;
  if (o.sigma) cfg.sigma = *o.sigma;
  if (o.epsilon) cfg.epsilon = *o.epsilon;
  if (o.tol) cfg.tol = *o.tol;
  if (o.seed) cfg.seed = *o.seed;
  if (o.format) cfg.format = *o.format;
  if (o.out) cfg.out = *o.out;
  if (o.problem) cfg.problem = *o.problem;
  if (o.q) cfg.q = *o.q;
  if (o.p) cfg.p = *o.p;
  if (o.sweep_param || o.sweep_values) {
    Sweep sweep = cfg.sweep.value_or(Sweep{});
    if (o.sweep_param) sweep.param = *o.sweep_param;
    if (o.sweep_values) sweep.values = parse_grid(*o.sweep_values);
    cfg.sweep = std::move(sweep);
  }
  if (cfg.format != "csv" && cfg.format != "json") {
    throw UsageError("--format: expected csv or json, got '" + cfg.format + "'");
  }
  return cfg;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw UsageError("--out: cannot write '" + path + "'");
  }
  file << text;
}

int emit_report(const StudyReport& report, const StudyConfig& cfg, std::ostream& out,
                std::ostream& err) {
  emit(cfg.format == "json" ? to_json(report).dump(2) + "\n" : to_csv(report), cfg.out, out);
  for (const auto& [name, ok] : report.verdicts) {
    err << "verdict " << name << ": " << (ok ? "pass" : "fail") << '\n';
  }
  return report.passed() ? 0 : 2;
}

SpectralField read_field(const std::string& path, const char* flag) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError(std::string(flag) + ": cannot open '" + path + "'");
  }
  try {
    nlohmann::json j;
    in >> j;
    return field_from_json(j);
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string(flag) + ": " + ex.what());
  } catch (const ShapeError& ex) {
    throw UsageError(std::string(flag) + ": " + ex.what());
  }
}

double evaluate_path(const std::string& path, const KernelParams& params, double r) {
  if (path == "routed") return multiplier(params, r).value;
  if (path == "hypergeometric") return multiplier_hypergeometric(params, r).value;
  if (path == "quadrature") return multiplier_quadrature(params, r);
  if (path == "extended") return multiplier_extended_quadrature(params, r);
  if (path == "series") return multiplier_radial_series(params, r);
  if (path == "asymptotic") return multiplier_asymptotic(params, r);
  throw UsageError("--path: unknown evaluation path '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonlocal wave equations on the torus: multipliers, solutions and studies",
               "nlwave"};
  app.require_subcommand(1);

  KernelParams mparams;
  double radius = 0.0;
  std::string path = "routed";
  auto* mult = app.add_subcommand("multiplier", "evaluate the Fourier multiplier m(r)");
  mult->add_option("--n", mparams.n, "spatial dimension")->required();
  mult->add_option("--delta", mparams.delta, "horizon")->required();
  mult->add_option("--beta", mparams.beta, "kernel exponent")->required();
  mult->add_option("--r", radius, "frequency magnitude")->required();
  mult->add_option("--path", path,
                   "routed, hypergeometric, quadrature, extended, series or asymptotic");

  KernelParams tparams;
  int tradius = 8;
  auto* table = app.add_subcommand("table", "multiplier table over the box [-K, K]^n");
  table->add_option("--n", tparams.n, "spatial dimension")->required();
  table->add_option("--delta", tparams.delta, "horizon")->required();
  table->add_option("--beta", tparams.beta, "kernel exponent")->required();
  table->add_option("--K", tradius, "box radius");

  Overrides solve_opts;
  int order = 0;
  std::string f_path;
  std::string g_path;
  std::string b_path;
  auto* solve_cmd = app.add_subcommand("solve", "closed-form solution snapshot");
  add_config_options(solve_cmd, solve_opts);
  solve_cmd->add_option("--order", order, "time derivative order");
  solve_cmd->add_option("--f", f_path, "initial displacement (field JSON)");
  solve_cmd->add_option("--g", g_path, "initial velocity (field JSON)");
  solve_cmd->add_option("--b", b_path, "forcing (field JSON)");

  struct Study {
    const char* name;
    const char* help;
    std::function<StudyReport(const StudyConfig&)> run;
    Overrides opts;
    CLI::App* cmd = nullptr;
  };
  std::vector<Study> studies;
  studies.push_back({"converge-delta", "solution convergence as delta -> 0",
                     study_delta_convergence, {}});
  studies.push_back({"converge-beta", "solution convergence as beta -> n + 2",
                     study_beta_convergence, {}});
  studies.push_back({"regularity", "spatial decay exponent of the solution", study_regularity,
                     {}});
  studies.push_back({"asymptotics", "multiplier against its large-r form", study_asymptotics,
                     {}});
  studies.push_back({"temporal", "difference quotients against time derivatives",
                     study_temporal, {}});
  for (Study& s : studies) {
    s.cmd = app.add_subcommand(s.name, s.help);
    add_config_options(s.cmd, s.opts);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (mult->parsed()) {
      out << format_number(evaluate_path(path, mparams, radius)) << '\n';
      return 0;
    }
    if (table->parsed()) {
      out << table_to_json(build_table(tparams, tradius)).dump(2) << '\n';
      return 0;
    }
    if (solve_cmd->parsed()) {
      StudyConfig cfg = resolve(solve_opts);
      const ProblemKind kind = problem_kind_from_string(cfg.problem);
      WaveProblem problem = synthetic_problem(cfg, cfg.params());
      if (!f_path.empty() || !g_path.empty() || !b_path.empty()) {
        const SpectralField* shape_src = nullptr;
        SpectralField f = f_path.empty() ? SpectralField(cfg.n, cfg.K, true)
                                         : read_field(f_path, "--f");
        SpectralField g = g_path.empty() ? SpectralField(f.dim(), f.box_radius(), true)
                                         : read_field(g_path, "--g");
        SpectralField b = b_path.empty() ? SpectralField(f.dim(), f.box_radius(), true)
                                         : read_field(b_path, "--b");
        shape_src = b_path.empty() ? &f : &b;
        MultiplierTable t = build_table(
            KernelParams{shape_src->dim(), cfg.delta, cfg.beta}, shape_src->box_radius());
        switch (kind) {
          case ProblemKind::Homogeneous:
            problem = WaveProblem::homogeneous(std::move(t), std::move(f), std::move(g));
            break;
          case ProblemKind::Forced:
            problem = WaveProblem::forced(std::move(t), std::move(b));
            break;
          case ProblemKind::Combined:
            problem =
                WaveProblem::combined(std::move(t), std::move(f), std::move(g), std::move(b));
            break;
        }
      }
      emit(snapshot_to_json(solve(problem, cfg.t, order)).dump(2) + "\n", cfg.out, out);
      return 0;
    }
    for (Study& s : studies) {
      if (s.cmd->parsed()) {
        const StudyConfig cfg = resolve(s.opts);
        return emit_report(s.run(cfg), cfg, out, err);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand given\n";
  return 1;
}

}  // namespace nlwave::harness
