#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "nlwave/errors.hpp"
#include "nlwave/serialize.hpp"
#include "nlwave/wave.hpp"

using namespace nlwave;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralField mode_pair(int K, int k, cplx value) {
  SpectralField f(1, K, true);
  f.at(std::vector<int>{k}) = value;
  f.at(std::vector<int>{-k}) = std::conj(value);
  return f;
}

double max_abs_diff(const SpectralField& a, const SpectralField& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

WaveProblem synthetic_homogeneous(const KernelParams& p, int K) {
  return WaveProblem::homogeneous(build_table(p, K), synthetic_field(p.n, K, 2.5, 1),
                                  synthetic_field(p.n, K, 2.0, 2));
}

WaveProblem synthetic_forced(const KernelParams& p, int K) {
  return WaveProblem::forced(build_table(p, K), synthetic_field(p.n, K, 2.0, 3));
}

}  // namespace

TEST_CASE("homogeneous closed form") {
  const int K = 4;
  const SpectralField f = mode_pair(K, 1, 0.5);
  const SpectralField zero(1, K, true);
  const WaveProblem lap = WaveProblem::homogeneous(build_table({1, 1.0, 3.0}, K), f, zero);
  CHECK(solve_homogeneous(lap, 0.0).field == f);
  const SolutionSnapshot s = solve_homogeneous(lap, kPi);
  CHECK(std::abs(s.field.at(std::vector<int>{1}) + 0.5) < 1e-15);
  CHECK(std::abs(s.field.at(std::vector<int>{-1}) + 0.5) < 1e-15);
  CHECK(s.t == kPi);
  CHECK(s.order == 0);

  SpectralField g(1, K, true);
  g.at(std::vector<int>{0}) = 1.0;
  const WaveProblem drift = WaveProblem::homogeneous(build_table({1, 1.0, 0.0}, K), zero, g);
  CHECK(solve_homogeneous(drift, 2.0).field.at(std::vector<int>{0}) == cplx{2.0, 0.0});
}

TEST_CASE("homogeneous derivatives") {
  const WaveProblem p = synthetic_homogeneous({1, 1.0, 1.5}, 16);
  CHECK(derivative_homogeneous(p, 0.0, 1).field == p.g());
  CHECK(max_abs_diff(derivative_homogeneous(p, 0.0, 1).field, p.g()) == 0.0);
  for (double t : {0.1, 1.0, 10.0}) {
    const SpectralField u = solve_homogeneous(p, t).field;
    const SpectralField a = derivative_homogeneous(p, t, 2).field;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double m = p.mode_multipliers()[i];
      CHECK(std::abs(a[i] - m * u[i]) <= 1e-10 * (1.0 + std::fabs(m)));
    }
  }
  const double h = 1e-5;
  const double t = 0.7;
  const SpectralField up = solve_homogeneous(p, t + h).field;
  const SpectralField um = solve_homogeneous(p, t - h).field;
  const SpectralField v = derivative_homogeneous(p, t, 1).field;
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(std::abs((up[i] - um[i]) / (2 * h) - v[i]) < 1e-8);
  }
}

TEST_CASE("forced closed form") {
  const int K = 3;
  SpectralField b(1, K, true);
  b.at(std::vector<int>{0}) = 1.0;
  const WaveProblem p = WaveProblem::forced(build_table({1, 1.0, 0.0}, K), b);
  CHECK(max_abs_diff(solve_forced(p, 0.0).field, SpectralField(1, K)) == 0.0);
  CHECK(solve_forced(p, 2.0).field.at(std::vector<int>{0}) == cplx{2.0, 0.0});

  const WaveProblem lap = WaveProblem::forced(build_table({1, 1.0, 3.0}, K), mode_pair(K, 1, 1.0));
  CHECK(std::abs(solve_forced(lap, kPi).field.at(std::vector<int>{1}) - 2.0) < 1e-15);
  CHECK_THROWS_AS(solve_forced(WaveProblem::homogeneous(build_table({1, 1.0, 3.0}, K), b, b), 1.0),
                  DomainError);
}

TEST_CASE("forced derivatives") {
  const WaveProblem p = synthetic_forced({1, 1.0, 3.5}, 16);
  CHECK(max_abs_diff(derivative_forced(p, 0.0, 1).field, SpectralField(1, 16)) == 0.0);
  CHECK(max_abs_diff(derivative_forced(p, 0.0, 2).field, p.b()) < 1e-15);
  for (double t : {0.1, 1.0, 10.0}) {
    const SpectralField u = solve_forced(p, t).field;
    const SpectralField a = derivative_forced(p, t, 2).field;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double m = p.mode_multipliers()[i];
      CHECK(std::abs(a[i] - m * u[i] - p.b()[i]) <= 1e-10 * (1.0 + std::fabs(m)));
    }
  }
  // Zero mode: b t, b, then 0.
  SpectralField b(1, 2, true);
  b.at(std::vector<int>{0}) = 3.0;
  const WaveProblem z = WaveProblem::forced(build_table({1, 1.0, 0.0}, 2), b);
  CHECK(derivative_forced(z, 2.0, 1).field.at(std::vector<int>{0}) == cplx{6.0, 0.0});
  CHECK(derivative_forced(z, 2.0, 2).field.at(std::vector<int>{0}) == cplx{3.0, 0.0});
  CHECK(derivative_forced(z, 2.0, 3).field.at(std::vector<int>{0}) == cplx{0.0, 0.0});
  const double h = 1e-5;
  const SpectralField up = solve_forced(p, 1.0 + h).field;
  const SpectralField um = solve_forced(p, 1.0 - h).field;
  const SpectralField v = derivative_forced(p, 1.0, 1).field;
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(std::abs((up[i] - um[i]) / (2 * h) - v[i]) < 1e-8);
  }
}

TEST_CASE("small frequencies use the series branch") {
  const auto [a, c] = mode::homogeneous_weights(-1e-12, 2.0, 0);
  CHECK(a == doctest::Approx(1.0));
  // w = 1e-6, t = 2: sin(wt)/w = t - w^2 t^3/6 + ..., (1 - cos wt)/w^2 = t^2/2 - w^2 t^4/24 + ...
  CHECK(c == doctest::Approx(2.0 - 8e-12 / 6.0).epsilon(1e-15));
  CHECK(mode::forced_weight(-1e-12, 2.0, 0) == doctest::Approx(2.0 - 16e-12 / 24.0).epsilon(1e-15));
  CHECK(mode::forced_weight(-1e-12, 2.0, 1) == doctest::Approx(2.0 - 8e-12 / 6.0).epsilon(1e-15));
  // Rounding noise on the wrong side of zero is clamped.
  const auto [a2, c2] = mode::homogeneous_weights(1e-17, 2.0, 0);
  CHECK(std::isfinite(a2));
  CHECK(std::isfinite(c2));
}

TEST_CASE("classical solver") {
  const int K = 8;
  const SpectralField f = synthetic_field(1, K, 2.0, 4);
  const SpectralField g = synthetic_field(1, K, 1.5, 5);
  const SpectralField zero(1, K, true);
  const WaveProblem lap = WaveProblem::homogeneous(build_table({1, 1.0, 3.0}, K), f, g);
  CHECK(solve_classical(f, g, zero, 1.3).field == solve_homogeneous(lap, 1.3).field);
  CHECK(solve_classical(f, g, zero, 0.0).field == f);
  const SpectralField standing = mode_pair(K, 1, 0.5);
  for (double t : {0.0, 0.4, 2.0, 5.5}) {
    const SpectralField u = solve_classical(standing, zero, zero, t).field;
    CHECK(std::abs(evaluate(u, std::vector<double>{0.0})[0] - std::cos(t)) < 1e-14);
  }
}

TEST_CASE("combined problems superpose") {
  const KernelParams params{1, 1.0, 2.0};
  const int K = 8;
  const SpectralField f = synthetic_field(1, K, 2.0, 1);
  const SpectralField g = synthetic_field(1, K, 2.0, 2);
  const SpectralField b = synthetic_field(1, K, 2.0, 3);
  const WaveProblem c = WaveProblem::combined(build_table(params, K), f, g, b);
  const WaveProblem h = WaveProblem::homogeneous(build_table(params, K), f, g);
  const WaveProblem fo = WaveProblem::forced(build_table(params, K), b);
  for (int p = 0; p <= 3; ++p) {
    const SpectralField sum = solve(c, 1.5, p).field;
    const SpectralField a = derivative_homogeneous(h, 1.5, p).field;
    const SpectralField d = derivative_forced(fo, 1.5, p).field;
    for (std::size_t i = 0; i < sum.size(); ++i) {
      CHECK(std::abs(sum[i] - a[i] - d[i]) < 1e-14);
    }
  }
}

TEST_CASE("problem invariants") {
  const MultiplierTable t = build_table({1, 1.0, 0.0}, 4);
  CHECK_THROWS_AS(WaveProblem::homogeneous(t, SpectralField(1, 5), SpectralField(1, 5)), ShapeError);
  CHECK_THROWS_AS(WaveProblem::forced(t, SpectralField(2, 4)), ShapeError);
  CHECK_THROWS_AS(solve(WaveProblem::forced(t, SpectralField(1, 4)), -1.0), DomainError);
}

TEST_CASE("ODE oracle") {
  const auto [u0, v0] = ode_mode_oracle(0.0, {1.0, 2.0}, {0.5, -1.0}, 0.0, 3.0, 0.1);
  CHECK(std::abs(u0 - cplx{2.5, -1.0}) < 1e-13);
  CHECK(std::abs(v0 - cplx{0.5, -1.0}) < 1e-13);
  const auto [u1, v1] = ode_mode_oracle(-1.0, 1.0, 0.0, 0.0, kPi / 2, 1e-4);
  CHECK(std::abs(u1) < 1e-10);
  CHECK(std::abs(v1 + 1.0) < 1e-10);
  const auto [u2, v2] = ode_mode_oracle(-4.0, 0.0, 0.0, 1.0, 1.0, 1e-4);
  CHECK(std::abs(u2 - (std::cos(2.0) - 1.0) / -4.0) < 1e-10);
  CHECK(ode_mode_oracle(-2.0, 1.0, 1.0, 0.0, 0.0, 0.1).first == cplx{1.0, 0.0});
  CHECK_THROWS_AS(ode_mode_oracle(-1.0, 1.0, 0.0, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("energy") {
  const int K = 6;
  const MultiplierTable t = build_table({1, 1.0, 1.5}, K);
  const SpectralField zero(1, K, true);
  CHECK(energy(WaveProblem::homogeneous(t, zero, zero), 3.0) == 0.0);
  SpectralField single(1, K, true);
  single.at(std::vector<int>{2}) = 1.0;
  const WaveProblem p = WaveProblem::homogeneous(t, single, zero);
  for (double time : {0.0, 1.0, 7.3}) {
    CHECK(energy(p, time) == doctest::Approx(-t.at(4)).epsilon(1e-14));
  }
  const SpectralField f = synthetic_field(1, K, 1.0, 1);
  const SpectralField g = synthetic_field(1, K, 1.0, 2);
  const WaveProblem q = WaveProblem::homogeneous(t, f, g);
  double expected = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    expected += std::norm(g[i]) - q.mode_multipliers()[i] * std::norm(f[i]);
  }
  CHECK(energy(q, 0.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(energy(WaveProblem::forced(t, f), 1.0), DomainError);
}

TEST_CASE("solutions of real data stay Hermitian and deterministic") {
  const WaveProblem p = WaveProblem::combined(build_table({2, 1.0, 3.0}, 4),
                                              synthetic_field(2, 4, 2.0, 1),
                                              synthetic_field(2, 4, 2.0, 2),
                                              synthetic_field(2, 4, 2.0, 3));
  for (int order = 0; order <= 3; ++order) {
    const SpectralField u = solve(p, 2.2, order).field;
    CHECK(is_hermitian(u));
    CHECK(u == solve(p, 2.2, order).field);
  }
}

TEST_CASE("snapshot JSON") {
  const WaveProblem p = synthetic_forced({1, 1.0, 1.0}, 4);
  const SolutionSnapshot s = derivative_forced(p, 0.5, 1);
  const nlohmann::json j = snapshot_to_json(s);
  CHECK(j["t"] == 0.5);
  CHECK(j["order"] == 1);
  const SolutionSnapshot back = snapshot_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.field == s.field);
  CHECK(back.t == s.t);
}
