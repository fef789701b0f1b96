#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "nlwave/specfun.hpp"

namespace nlwave {

/// Parameters (n, delta, beta) of the nonlocal Laplacian with kernel
/// c / |z|^beta on the ball of radius delta in n dimensions.
struct KernelParams {
  int n = 1;
  double delta = 1.0;
  double beta = 0.0;

  // Throws DomainError unless n >= 1, delta > 0 and beta < n + 4.
  void validate() const;

  // beta == n + 2: the operator is the classical Laplacian.
  bool is_laplacian() const { return beta == n + 2.0; }
};

enum class EvalPath { Exact, Hypergeometric, Quadrature, ExtendedQuadrature, RadialSeries };

std::string_view to_string(EvalPath path);

// Cancellation ratio above which the routed evaluator abandons the
// hypergeometric series; stricter than specfun::kCancellationLimit so that
// routed values keep roughly ten significant digits.
inline constexpr double kRouteCancellationLimit = 1e6;

/// c^{delta,beta} = 2 (n+2-beta) Gamma(n/2+1) / (pi^{n/2} delta^{n+2-beta}).
double scaling_constant(const KernelParams& params);

struct HypergeometricValue {
  double value = 0.0;
  bool cancellation_degraded = false;
  double cancellation_ratio = 1.0;
  int terms = 0;
};

/// -r^2 2F3(1, (n+2-beta)/2; 2, (n+2)/2, (n+4-beta)/2; -r^2 delta^2/4).
/// Throws ConvergenceError when the series cannot be summed.
HypergeometricValue multiplier_hypergeometric(const KernelParams& params, double r,
                                              const specfun::SeriesControl& ctrl = {});

/// Radial reduction of c int_{B_delta} (cos(nu.z) - 1)/|z|^beta dz, integrated
/// adaptively. Requires beta < n + 2 and n in {1, 2, 3}.
double multiplier_quadrature(const KernelParams& params, double r);

/// -r^2 + c int_{B_delta} (cos(nu.z) - 1 + (nu.z)^2/2)/|z|^beta dz.
/// Requires beta < n + 4 and n in {1, 2, 3}.
double multiplier_extended_quadrature(const KernelParams& params, double r);

/// 2 pi^{n/2} c sum_{k>=1} (-r^2/4)^k / (k! Gamma(n/2+k)) delta^{n-beta+2k}/(n-beta+2k).
/// Undefined at beta = n + 2.
double multiplier_radial_series(const KernelParams& params, double r,
                                const specfun::SeriesControl& ctrl = {});

/// Large-|nu| asymptotic form of the multiplier; requires r > 1 and beta != n+2.
double multiplier_asymptotic(const KernelParams& params, double r);

struct MultiplierValue {
  double value = 0.0;
  EvalPath path = EvalPath::Hypergeometric;
};

/// Routed evaluation: exact at beta = n+2, the hypergeometric series when it
/// sums cleanly, otherwise the (extended) quadrature.
MultiplierValue multiplier(const KernelParams& params, double r);

/// m(k) for every distinct |k|^2 in the box [-K, K]^n.
class MultiplierTable {
 public:
  struct Entry {
    int norm2 = 0;
    double value = 0.0;
    EvalPath path = EvalPath::Exact;
  };

  MultiplierTable(KernelParams params, int box_radius, std::vector<Entry> entries);

  const KernelParams& params() const { return params_; }
  int box_radius() const { return box_radius_; }
  std::span<const Entry> entries() const { return entries_; }

  bool contains(int norm2) const;
  // Throws std::out_of_range for a norm not present in the box.
  double at(int norm2) const;

 private:
  KernelParams params_;
  int box_radius_;
  std::vector<Entry> entries_;
  std::vector<int> slot_;  // norm2 -> index into entries_, or -1
};

/// Distinct squared norms |k|^2 of the lattice points of [-K, K]^n, ascending.
std::vector<int> distinct_squared_norms(int n, int box_radius);

MultiplierTable build_table(const KernelParams& params, int box_radius);

struct MonotonicityScan {
  std::vector<double> betas;
  std::vector<double> values;
  bool strictly_decreasing = true;
  bool all_negative = true;

  bool verdict() const { return strictly_decreasing && all_negative; }
};

/// Samples beta -> m^{delta,beta}(r) over an ascending grid inside
/// ((n+4)/2, n+4), the interval on which the map is known to decrease.
MonotonicityScan monotonicity_scan(int n, double delta, double r, std::span<const double> betas);

}  // namespace nlwave
