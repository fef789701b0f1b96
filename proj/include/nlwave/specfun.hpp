#pragma once

// Real special functions used by the multiplier formulas.

namespace nlwave::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Truncation rule for the hypergeometric and radial series.
struct SeriesControl {
  double rel_tol = 1e-14;
  int max_terms = 10000;
  int consecutive_small = 3;

  // Throws DomainError when any field is out of range.
  void validate() const;
};

// Ratio max|partial sum| / |result| above which a series result is flagged.
inline constexpr double kCancellationLimit = 1e10;

struct SeriesResult {
  double value = 0.0;
  int terms = 0;
  double max_partial = 0.0;
  bool cancellation_degraded = false;
};

/// log Gamma(x) for x > 0. Relative error below 1e-13 on [1e-3, 1e3],
/// including the neighbourhoods of the zeros at x = 1 and x = 2.
double ln_gamma(double x);

/// 1/Gamma(x) for any real x; exactly zero at the poles 0, -1, -2, ...
double reciprocal_gamma(double x);

/// psi(x) = d/dx log Gamma(x) for x > 0.
double digamma(double x);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
double pochhammer(double a, int k);

/// 2F3(a1, a2; b1, b2, b3; z) by its defining power series with compensated
/// summation. Throws DomainError when a lower parameter is zero or a negative
/// integer and ConvergenceError when `ctrl.max_terms` is exhausted or the
/// partial sums overflow.
SeriesResult hyp2f3_series(double a1, double a2, double b1, double b2, double b3, double z,
                           const SeriesControl& ctrl = {});

/// Value-only convenience wrapper around hyp2f3_series.
double hyp2f3(double a1, double a2, double b1, double b2, double b3, double z,
              const SeriesControl& ctrl = {});

}  // namespace nlwave::specfun
