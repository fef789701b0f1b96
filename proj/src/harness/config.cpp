#include <fstream>
#include <set>

#include "nlwave/errors.hpp"
#include "nlwave/harness.hpp"

namespace nlwave::harness {
namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "n",   "delta", "beta", "K",   "t",      "s1",  "s2",      "sigma", "epsilon",
      "sweep", "tol", "seed", "format", "out", "problem", "q",     "p"};
  return keys;
}

template <typename T>
void read(const nlohmann::json& j, const char* key, T& into) {
  if (!j.contains(key)) {
    return;
  }
  try {
    into = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(std::string("config: key '") + key + "' has the wrong type");
  }
}

}  // namespace

StudyConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw UsageError("config: top level must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (!known_keys().contains(key)) {
      throw UsageError("config: unknown key '" + key + "'");
    }
  }
  StudyConfig cfg;
  read(j, "n", cfg.n);
  read(j, "delta", cfg.delta);
  read(j, "beta", cfg.beta);
  read(j, "K", cfg.K);
  read(j, "t", cfg.t);
  read(j, "s1", cfg.s1);
  read(j, "s2", cfg.s2);
  read(j, "sigma", cfg.sigma);
  read(j, "epsilon", cfg.epsilon);
  read(j, "seed", cfg.seed);
  read(j, "format", cfg.format);
  read(j, "out", cfg.out);
  read(j, "problem", cfg.problem);
  read(j, "q", cfg.q);
  read(j, "p", cfg.p);
  if (j.contains("tol")) {
    double tol = 0.0;
    read(j, "tol", tol);
    cfg.tol = tol;
  }
  if (j.contains("sweep")) {
    const nlohmann::json& s = j.at("sweep");
    if (!s.is_object()) {
      throw UsageError("config: 'sweep' must be an object {param, values}");
    }
    for (const auto& [key, value] : s.items()) {
      if (key != "param" && key != "values") {
        throw UsageError("config: unknown key 'sweep." + key + "'");
      }
    }
    Sweep sweep;
    read(s, "param", sweep.param);
    read(s, "values", sweep.values);
    cfg.sweep = std::move(sweep);
  }
  return cfg;
}

StudyConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("--config: cannot open '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError("--config: '" + path + "' is not valid JSON: " + ex.what());
  }
  return config_from_json(j);
}

nlohmann::json config_echo(const StudyConfig& cfg) {
  nlohmann::json j = {{"n", cfg.n},         {"delta", cfg.delta},     {"beta", cfg.beta},
                      {"K", cfg.K},         {"t", cfg.t},             {"s1", cfg.s1},
                      {"s2", cfg.s2},       {"sigma", cfg.sigma},     {"epsilon", cfg.epsilon},
                      {"seed", cfg.seed},   {"problem", cfg.problem}, {"q", cfg.q},
                      {"p", cfg.p}};
  j["tol"] = cfg.tol ? nlohmann::json(*cfg.tol) : nlohmann::json(nullptr);
  if (cfg.sweep) {
    j["sweep"] = {{"param", cfg.sweep->param}, {"values", cfg.sweep->values}};
  } else {
    j["sweep"] = nullptr;
  }
  return j;
}

}  // namespace nlwave::harness
