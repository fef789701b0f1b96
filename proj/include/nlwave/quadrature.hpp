#pragma once

#include <functional>

namespace nlwave::quad {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_intervals = 200000;
  // Number of equal panels the interval is cut into before adapting.
  int initial_panels = 1;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15 point) integration of f over [a, b].
/// Stops when the summed error estimate is below max(abs_tol, rel_tol |I|);
/// throws ConvergenceError carrying the achieved estimate otherwise.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// One 15-point Kronrod rule on [a, b] plus the embedded 7-point Gauss
/// estimate; exposed for exactness tests.
struct RulePair {
  double kronrod = 0.0;
  double gauss = 0.0;
};
RulePair gauss_kronrod_15(const std::function<double(double)>& f, double a, double b);

}  // namespace nlwave::quad
