#include "nlwave/wave.hpp"

#include <cmath>
#include <algorithm>
#include <string>
#include <tuple>

#include "nlwave/errors.hpp"
#include "nlwave/kernels.hpp"

namespace nlwave {
namespace {

constexpr double kSmallPhase = 1e-4;

double clamped_frequency(double m) { return std::sqrt(-std::min(m, 0.0)); }

// cos(x + p pi/2) and sin(x + p pi/2)
double cos_shift(double c, double s, int p) {
  switch (p % 4) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
  }
}
double sin_shift(double c, double s, int p) {
  switch (p % 4) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
  }
}

// sin(w t) / w
double sinc_t(double w, double t) {
  const double x = w * t;
  if (x < kSmallPhase) {
    return t - w * w * t * t * t / 6.0;
  }
  return std::sin(x) / w;
}

// (1 - cos(w t)) / w^2
double versine_t(double w, double t) {
  const double x = w * t;
  if (x < kSmallPhase) {
    return 0.5 * t * t - w * w * t * t * t * t / 24.0;
  }
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s / (w * w);
}

void require_time(double t, const char* who) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(who) + ": time must be finite and >= 0");
  }
}

void require_order(int p, const char* who) {
  if (p < 0) {
    throw DomainError(std::string(who) + ": derivative order must be >= 0");
  }
}

bool all_zero(const SpectralField& field) {
  for (const cplx& c : field.coeffs()) {
    if (c != cplx{}) {
      return false;
    }
  }
  return true;
}

std::vector<double> modes_for(const std::vector<int>& norms, const MultiplierTable& table) {
  std::vector<double> modes(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    modes[i] = table.at(norms[i]);
    if (modes[i] > 0.0) {
      throw CorruptedTableError("wave: positive multiplier at |k|^2 = " +
                                std::to_string(norms[i]));
    }
  }
  return modes;
}

SpectralField homogeneous_field(std::span<const double> modes, const SpectralField& f,
                                const SpectralField& g, double t, int p) {
  std::vector<double> a(modes.size());
  std::vector<double> c(modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    std::tie(a[i], c[i]) = mode::homogeneous_weights(modes[i], t, p);
  }
  SpectralField out(f.dim(), f.box_radius(), f.real_flag() && g.real_flag());
  kernels::combine(a, f.coeffs(), c, g.coeffs(), out.coeffs());
  return out;
}

SpectralField forced_field(std::span<const double> modes, const SpectralField& b, double t,
                           int p) {
  std::vector<double> w(modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    w[i] = mode::forced_weight(modes[i], t, p);
  }
  const std::vector<double> zero(modes.size(), 0.0);
  SpectralField out(b.dim(), b.box_radius(), b.real_flag());
  kernels::combine(w, b.coeffs(), zero, b.coeffs(), out.coeffs());
  return out;
}

void accumulate(SpectralField& into, const SpectralField& add) {
  const std::vector<double> ones(into.size(), 1.0);
  kernels::combine(ones, into.coeffs(), ones, add.coeffs(), into.coeffs());
  into.set_real_flag(into.real_flag() && add.real_flag());
}

SpectralField superpose(std::span<const double> modes, const SpectralField* f,
                        const SpectralField* g, const SpectralField* b, double t, int p) {
  if (f != nullptr) {
    SpectralField out = homogeneous_field(modes, *f, *g, t, p);
    if (b != nullptr) {
      accumulate(out, forced_field(modes, *b, t, p));
    }
    return out;
  }
  return forced_field(modes, *b, t, p);
}

}  // namespace

namespace mode {

std::pair<double, double> homogeneous_weights(double m, double t, int p) {
  const double w = clamped_frequency(m);
  const double x = w * t;
  const double c = std::cos(x);
  const double s = std::sin(x);
  if (p == 0) {
    return {c, sinc_t(w, t)};
  }
  const double a = std::pow(w, p) * cos_shift(c, s, p);
  const double g = p == 1 ? c : std::pow(w, p - 1) * sin_shift(c, s, p);
  return {a, g};
}

double forced_weight(double m, double t, int p) {
  const double w = clamped_frequency(m);
  if (p == 0) {
    return versine_t(w, t);
  }
  if (p == 1) {
    return sinc_t(w, t);
  }
  const double x = w * t;
  return -std::pow(w, p - 2) * cos_shift(std::cos(x), std::sin(x), p);
}

}  // namespace mode

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Homogeneous: return "homogeneous";
    case ProblemKind::Forced: return "forced";
    case ProblemKind::Combined: return "combined";
  }
  return "unknown";
}

ProblemKind problem_kind_from_string(std::string_view name) {
  if (name == "homogeneous") return ProblemKind::Homogeneous;
  if (name == "forced") return ProblemKind::Forced;
  if (name == "combined") return ProblemKind::Combined;
  throw DomainError("unknown problem kind '" + std::string(name) +
                    "', expected homogeneous, forced or combined");
}

WaveProblem::WaveProblem(ProblemKind kind, MultiplierTable table, SpectralField f,
                         SpectralField g, SpectralField b)
    : kind_(kind), table_(std::move(table)), f_(std::move(f)), g_(std::move(g)), b_(std::move(b)) {
  const int n = table_.params().n;
  const int K = table_.box_radius();
  for (const SpectralField* field : {&f_, &g_, &b_}) {
    if (field->dim() != n || field->box_radius() != K) {
      throw ShapeError("WaveProblem: fields must have dimension " + std::to_string(n) +
                       " and box radius " + std::to_string(K) + " to match the table");
    }
  }
  modes_ = modes_for(squared_norms(n, K), table_);
}

WaveProblem WaveProblem::homogeneous(MultiplierTable table, SpectralField f, SpectralField g) {
  SpectralField b(f.dim(), f.box_radius(), true);
  return WaveProblem(ProblemKind::Homogeneous, std::move(table), std::move(f), std::move(g),
                     std::move(b));
}

WaveProblem WaveProblem::forced(MultiplierTable table, SpectralField b) {
  SpectralField zero(b.dim(), b.box_radius(), true);
  return WaveProblem(ProblemKind::Forced, std::move(table), zero, zero, std::move(b));
}

WaveProblem WaveProblem::combined(MultiplierTable table, SpectralField f, SpectralField g,
                                  SpectralField b) {
  return WaveProblem(ProblemKind::Combined, std::move(table), std::move(f), std::move(g),
                     std::move(b));
}

SolutionSnapshot derivative_homogeneous(const WaveProblem& problem, double t, int p) {
  require_time(t, "derivative_homogeneous");
  require_order(p, "derivative_homogeneous");
  if (problem.kind() == ProblemKind::Forced) {
    throw DomainError("derivative_homogeneous: problem is forced");
  }
  return {t, p, homogeneous_field(problem.mode_multipliers(), problem.f(), problem.g(), t, p)};
}

SolutionSnapshot solve_homogeneous(const WaveProblem& problem, double t) {
  return derivative_homogeneous(problem, t, 0);
}

SolutionSnapshot derivative_forced(const WaveProblem& problem, double t, int p) {
  require_time(t, "derivative_forced");
  require_order(p, "derivative_forced");
  if (problem.kind() == ProblemKind::Homogeneous) {
    throw DomainError("derivative_forced: problem is homogeneous");
  }
  return {t, p, forced_field(problem.mode_multipliers(), problem.b(), t, p)};
}

SolutionSnapshot solve_forced(const WaveProblem& problem, double t) {
  return derivative_forced(problem, t, 0);
}

SolutionSnapshot solve(const WaveProblem& problem, double t, int p) {
  require_time(t, "solve");
  require_order(p, "solve");
  const bool has_data = problem.kind() != ProblemKind::Forced;
  const bool has_force = problem.kind() != ProblemKind::Homogeneous;
  return {t, p,
          superpose(problem.mode_multipliers(), has_data ? &problem.f() : nullptr,
                    has_data ? &problem.g() : nullptr, has_force ? &problem.b() : nullptr, t,
                    p)};
}

SolutionSnapshot solve_classical(const SpectralField& f, const SpectralField& g,
                                 const SpectralField& b, double t, int p) {
  require_time(t, "solve_classical");
  require_order(p, "solve_classical");
  if (!f.same_shape(g) || !f.same_shape(b)) {
    throw ShapeError("solve_classical: f, g and b must share dimension and box radius");
  }
  const std::vector<int> norms = squared_norms(f.dim(), f.box_radius());
  std::vector<double> modes(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    modes[i] = -static_cast<double>(norms[i]);
  }
  return {t, p, superpose(modes, &f, &g, all_zero(b) ? nullptr : &b, t, p)};
}

std::pair<cplx, cplx> ode_mode_oracle(double m, cplx f0, cplx g0, cplx b0, double t, double dt) {
  if (!(dt > 0.0)) {
    throw DomainError("ode_mode_oracle: dt must be positive");
  }
  require_time(t, "ode_mode_oracle");
  if (t == 0.0) {
    return {f0, g0};
  }
  const long steps = std::max(1L, static_cast<long>(std::ceil(t / dt - 1e-9)));
  const double h = t / static_cast<double>(steps);
  cplx u = f0;
  cplx v = g0;
  auto accel = [&](cplx x) { return m * x + b0; };
  for (long i = 0; i < steps; ++i) {
    const cplx k1u = v;
    const cplx k1v = accel(u);
    const cplx k2u = v + 0.5 * h * k1v;
    const cplx k2v = accel(u + 0.5 * h * k1u);
    const cplx k3u = v + 0.5 * h * k2v;
    const cplx k3v = accel(u + 0.5 * h * k2u);
    const cplx k4u = v + h * k3v;
    const cplx k4v = accel(u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return {u, v};
}

double energy(const WaveProblem& problem, double t) {
  if (problem.kind() != ProblemKind::Homogeneous) {
    throw DomainError("energy: defined for homogeneous problems only");
  }
  const SolutionSnapshot u = derivative_homogeneous(problem, t, 0);
  const SolutionSnapshot v = derivative_homogeneous(problem, t, 1);
  std::vector<double> stiffness(problem.mode_multipliers().size());
  for (std::size_t i = 0; i < stiffness.size(); ++i) {
    stiffness[i] = -std::min(problem.mode_multipliers()[i], 0.0);
  }
  const std::vector<double> ones(stiffness.size(), 1.0);
  return kernels::weighted_sum_sq(ones, v.field.coeffs()) +
         kernels::weighted_sum_sq(stiffness, u.field.coeffs());
}

}  // namespace nlwave
