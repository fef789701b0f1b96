#include <cmath>
#include <limits>
#include <sstream>

#include "nlwave/compensated_sum.hpp"
#include "nlwave/errors.hpp"
#include "nlwave/specfun.hpp"

namespace nlwave::specfun {
namespace {

bool is_nonpositive_integer(double b) { return b <= 0.0 && b == std::floor(b); }

constexpr double kOverflowGuard = 1e300;

}  // namespace

SeriesResult hyp2f3_series(double a1, double a2, double b1, double b2, double b3, double z,
                           const SeriesControl& ctrl) {
  ctrl.validate();
  for (double b : {b1, b2, b3}) {
    if (is_nonpositive_integer(b)) {
      std::ostringstream msg;
      msg << "hyp2f3: lower parameter " << b << " is zero or a negative integer";
      throw DomainError(msg.str());
    }
  }

  SeriesResult out;
  CompensatedSum sum;
  double term = 1.0;
  sum.add(term);
  out.max_partial = 1.0;
  int small_run = 0;

  for (int k = 0; k < ctrl.max_terms; ++k) {
    term *= (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (b3 + k) * (k + 1.0)) * z;
    sum.add(term);
    const double partial = sum.value();
    out.terms = k + 2;
    if (!std::isfinite(partial) || std::fabs(partial) > kOverflowGuard ||
        !std::isfinite(term)) {
      throw ConvergenceError("hyp2f3: partial sums overflowed", partial, std::fabs(term));
    }
    out.max_partial = std::fmax(out.max_partial, std::fabs(partial));

    if (std::fabs(term) < ctrl.rel_tol * std::fmax(std::fabs(partial), 1e-300)) {
      if (++small_run >= ctrl.consecutive_small) {
        out.value = partial;
        out.cancellation_degraded =
            out.max_partial > kCancellationLimit * std::fabs(out.value);
        return out;
      }
    } else {
      small_run = 0;
    }
  }
  std::ostringstream msg;
  msg << "hyp2f3: no convergence after " << ctrl.max_terms << " terms (z = " << z << ")";
  throw ConvergenceError(msg.str(), sum.value(), std::fabs(term));
}

double hyp2f3(double a1, double a2, double b1, double b2, double b3, double z,
              const SeriesControl& ctrl) {
  return hyp2f3_series(a1, a2, b1, b2, b3, z, ctrl).value;
}

}  // namespace nlwave::specfun
