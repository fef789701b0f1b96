#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nlwave/multiplier.hpp"
#include "nlwave/wave.hpp"

namespace nlwave::harness {

struct Sweep {
  std::string param;
  std::vector<double> values;
};

struct StudyConfig {
  int n = 1;
  double delta = 1.0;
  double beta = 0.0;
  int K = 32;
  double t = 1.0;
  // Sobolev indices of the synthetic data f, g and b.
  double s1 = 3.0;
  double s2 = 2.0;
  double sigma = 2.0;
  double epsilon = 0.5;
  std::optional<Sweep> sweep;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
  std::string problem = "homogeneous";
  double q = 0.0;
  int p = 1;

  KernelParams params() const { return {n, delta, beta}; }
};

/// Parses a config object; unknown keys and mistyped values raise UsageError.
StudyConfig config_from_json(const nlohmann::json& j);
StudyConfig load_config(const std::string& path);

/// Canonical echo of the study-relevant fields (output path and format are
/// left out so the echo does not depend on where the report goes).
nlohmann::json config_echo(const StudyConfig& cfg);

struct StudyReport {
  std::string study;
  nlohmann::json config;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, bool>> verdicts;

  bool passed() const;
};

std::string format_number(double x);
std::string to_csv(const StudyReport& report);
nlohmann::json to_json(const StudyReport& report);

// Synthetic data decays like |k|^{-(s + n/2 + 1/2)}, which puts it in H^q
// for every q < s + 1/2 and, in particular, in H^s.
double data_decay(double sobolev_index, int n);

WaveProblem synthetic_problem(const StudyConfig& cfg, const KernelParams& params);

StudyReport study_delta_convergence(const StudyConfig& cfg);
StudyReport study_beta_convergence(const StudyConfig& cfg);
StudyReport study_regularity(const StudyConfig& cfg);
StudyReport study_asymptotics(const StudyConfig& cfg);
StudyReport study_temporal(const StudyConfig& cfg);

/// Throws DomainError naming the violated inequality when order p in H^q is
/// outside the admissible range for the configured data and kernel.
void check_temporal_admissible(const StudyConfig& cfg);

/// Entry point behind the nlwave executable; `args` excludes the program
/// name. Returns 0 on pass, 2 on a failed verdict, 1 on usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlwave::harness
