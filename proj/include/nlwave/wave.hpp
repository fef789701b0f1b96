#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "nlwave/multiplier.hpp"
#include "nlwave/torus.hpp"

namespace nlwave {

enum class ProblemKind { Homogeneous, Forced, Combined };

std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);

/// u_tt = L u + b on the torus with u(0) = f, u_t(0) = g, diagonalised in
/// Fourier space by the multiplier table.
class WaveProblem {
 public:
  static WaveProblem homogeneous(MultiplierTable table, SpectralField f, SpectralField g);
  static WaveProblem forced(MultiplierTable table, SpectralField b);
  static WaveProblem combined(MultiplierTable table, SpectralField f, SpectralField g,
                              SpectralField b);

  ProblemKind kind() const { return kind_; }
  const MultiplierTable& table() const { return table_; }
  const SpectralField& f() const { return f_; }
  const SpectralField& g() const { return g_; }
  const SpectralField& b() const { return b_; }

  // m_k per flat index of the coefficient box.
  std::span<const double> mode_multipliers() const { return modes_; }

 private:
  WaveProblem(ProblemKind kind, MultiplierTable table, SpectralField f, SpectralField g,
              SpectralField b);

  ProblemKind kind_;
  MultiplierTable table_;
  SpectralField f_;
  SpectralField g_;
  SpectralField b_;
  std::vector<double> modes_;
};

struct SolutionSnapshot {
  double t = 0.0;
  int order = 0;
  SpectralField field;
};

/// Order-p time derivative of the f, g part at time t (p = 0 is the solution).
SolutionSnapshot derivative_homogeneous(const WaveProblem& problem, double t, int p);
SolutionSnapshot solve_homogeneous(const WaveProblem& problem, double t);

/// Order-p time derivative of the b part at time t.
SolutionSnapshot derivative_forced(const WaveProblem& problem, double t, int p);
SolutionSnapshot solve_forced(const WaveProblem& problem, double t);

/// Superposition of whichever parts the problem carries.
SolutionSnapshot solve(const WaveProblem& problem, double t, int p = 0);

/// The same closed forms with m_k = -|k|^2.
SolutionSnapshot solve_classical(const SpectralField& f, const SpectralField& g,
                                 const SpectralField& b, double t, int p = 0);

/// Classical fourth-order Runge-Kutta for u'' = m u + b0 on one mode, with
/// ceil(t/dt) equal steps. Returns (u(t), u'(t)).
std::pair<cplx, cplx> ode_mode_oracle(double m, cplx f0, cplx g0, cplx b0, double t, double dt);

/// sum_k |U'_k(t)|^2 + (-m_k) |U_k(t)|^2 for a homogeneous problem.
double energy(const WaveProblem& problem, double t);

// Per-mode closed forms, exposed for oracle comparisons.
namespace mode {
// Coefficients (a, c) with U^(p) = a f + c g.
std::pair<double, double> homogeneous_weights(double m, double t, int p);
// Coefficient w with U^(p) = w b.
double forced_weight(double m, double t, int p);
}  // namespace mode

}  // namespace nlwave
