#include "nlwave/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nlwave/bessel.hpp"
#include "nlwave/compensated_sum.hpp"
#include "nlwave/errors.hpp"
#include "nlwave/quadrature.hpp"

namespace nlwave {
namespace {

using std::numbers::pi;

// Distance to an integrability boundary below which the inner piece of the
// radial integral is done by term-wise integration of the Taylor series.
constexpr double kNearBoundary = 0.5;
constexpr double kQuadTol = 1e-10;
constexpr double kSeriesSwitch = 2.0;

std::string describe(const KernelParams& p, double r) {
  std::ostringstream s;
  s << "(n=" << p.n << ", delta=" << p.delta << ", beta=" << p.beta << ", r=" << r << ")";
  return s.str();
}

void require_radial_dimension(const KernelParams& p, const char* who) {
  if (p.n < 1 || p.n > 3) {
    throw DomainError(std::string(who) + ": radial reduction is available for n in {1, 2, 3}");
  }
}

void require_frequency(double r, const char* who) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError(std::string(who) + ": frequency magnitude must be finite and >= 0");
  }
}

// |S^{n-1}|
double sphere_area(int n) {
  switch (n) {
    case 1: return 2.0;
    case 2: return 2.0 * pi;
    default: return 4.0 * pi;
  }
}

// Spherical average of cos(x cos(phi)) minus its Taylor head, times the sphere
// area: S (Phi_n(x) - 1) or, when `extended`, S (Phi_n(x) - 1 + x^2/(2n)).
// Phi_1 = cos, Phi_2 = J0, Phi_3 = sin(x)/x.
double angular_defect(int n, double x, bool extended) {
  const double area = sphere_area(n);
  const int first = extended ? 2 : 1;
  if (x < kSeriesSwitch) {
    // Phi_n(x) = sum_j (-x^2/4)^j / (j! (n/2)_j)
    const double q = -0.25 * x * x;
    const double half_n = 0.5 * n;
    double term = 1.0;
    double sum = 0.0;
    for (int j = 1; j < 60; ++j) {
      term *= q / (j * (half_n + j - 1));
      if (j >= first) {
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) {
          break;
        }
      }
    }
    return area * sum;
  }
  double defect = 0.0;
  switch (n) {
    case 1: {
      const double s = std::sin(0.5 * x);
      defect = -2.0 * s * s;
      break;
    }
    case 2: defect = bessel::j0(x) - 1.0; break;
    default: defect = std::sin(x) / x - 1.0; break;
  }
  if (extended) {
    defect += x * x / (2.0 * n);
  }
  return area * defect;
}

// int_0^delta angular_defect(r rho) rho^{n-1-beta} d rho
double radial_integral(const KernelParams& p, double r, bool extended) {
  const int n = p.n;
  const double exponent = n - 1 - p.beta;
  const double rho0 = std::min(p.delta, 1.0 / std::max(r, 1.0));
  const double boundary = extended ? n + 4.0 : n + 2.0;

  auto integrand = [&](double rho) {
    return angular_defect(n, r * rho, extended) * std::pow(rho, exponent);
  };

  CompensatedSum total;
  if (boundary - p.beta <= kNearBoundary) {
    // S sum_j (-r^2/4)^j / (j! (n/2)_j) rho0^{2j+n-beta} / (2j+n-beta)
    const double q = -0.25 * r * r * rho0 * rho0;
    const double half_n = 0.5 * n;
    const int first = extended ? 2 : 1;
    const double base = std::pow(rho0, n - p.beta);
    double coeff = 1.0;
    CompensatedSum inner;
    for (int j = 1; j < 200; ++j) {
      coeff *= q / (j * (half_n + j - 1));
      if (j < first) {
        continue;
      }
      const double term = coeff * base / (2.0 * j + n - p.beta);
      inner.add(term);
      if (std::fabs(term) <= 1e-17 * std::fabs(inner.value())) {
        break;
      }
    }
    total.add(sphere_area(n) * inner.value());
  } else {
    quad::QuadratureOptions opts;
    opts.abs_tol = kQuadTol;
    opts.rel_tol = kQuadTol;
    total.add(quad::integrate(integrand, 0.0, rho0, opts).value);
  }

  if (rho0 < p.delta) {
    quad::QuadratureOptions opts;
    opts.abs_tol = kQuadTol;
    opts.rel_tol = kQuadTol;
    // Roughly one panel per half oscillation of cos(r rho).
    const double half_periods = r * (p.delta - rho0) / pi;
    opts.initial_panels = static_cast<int>(std::min(1e5, std::ceil(half_periods) + 1.0));
    total.add(quad::integrate(integrand, rho0, p.delta, opts).value);
  }
  return total.value();
}

}  // namespace

void KernelParams::validate() const {
  if (n < 1) {
    throw DomainError("KernelParams: dimension n must be >= 1");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw DomainError("KernelParams: delta must be positive and finite");
  }
  if (!(beta < n + 4.0) || !std::isfinite(beta)) {
    std::ostringstream s;
    s << "KernelParams: beta must satisfy beta < n + 4 = " << n + 4 << ", got " << beta;
    throw DomainError(s.str());
  }
}

std::string_view to_string(EvalPath path) {
  switch (path) {
    case EvalPath::Exact: return "exact";
    case EvalPath::Hypergeometric: return "hypergeometric";
    case EvalPath::Quadrature: return "quadrature";
    case EvalPath::ExtendedQuadrature: return "extended_quadrature";
    case EvalPath::RadialSeries: return "radial_series";
  }
  return "unknown";
}

double scaling_constant(const KernelParams& params) {
  params.validate();
  const double n = params.n;
  const double gap = n + 2.0 - params.beta;
  return 2.0 * gap * std::exp(specfun::ln_gamma(0.5 * n + 1.0)) /
         (std::pow(pi, 0.5 * n) * std::pow(params.delta, gap));
}

HypergeometricValue multiplier_hypergeometric(const KernelParams& params, double r,
                                              const specfun::SeriesControl& ctrl) {
  params.validate();
  require_frequency(r, "multiplier_hypergeometric");
  if (r == 0.0) {
    return HypergeometricValue{0.0, false, 1.0, 0};
  }
  const double n = params.n;
  const double b = params.beta;
  const double z = -0.25 * r * r * params.delta * params.delta;
  const specfun::SeriesResult s =
      specfun::hyp2f3_series(1.0, 0.5 * (n + 2.0 - b), 2.0, 0.5 * (n + 2.0), 0.5 * (n + 4.0 - b), z, ctrl);
  HypergeometricValue out;
  out.value = -r * r * s.value;
  out.cancellation_degraded = s.cancellation_degraded;
  out.cancellation_ratio = s.value == 0.0 ? INFINITY : s.max_partial / std::fabs(s.value);
  out.terms = s.terms;
  return out;
}

double multiplier_quadrature(const KernelParams& params, double r) {
  params.validate();
  require_radial_dimension(params, "multiplier_quadrature");
  require_frequency(r, "multiplier_quadrature");
  if (!(params.beta < params.n + 2.0)) {
    throw DomainError("multiplier_quadrature: requires beta < n + 2 " + describe(params, r));
  }
  if (r == 0.0) {
    return 0.0;
  }
  return scaling_constant(params) * radial_integral(params, r, false);
}

double multiplier_extended_quadrature(const KernelParams& params, double r) {
  params.validate();
  require_radial_dimension(params, "multiplier_extended_quadrature");
  require_frequency(r, "multiplier_extended_quadrature");
  if (r == 0.0) {
    return 0.0;
  }
  if (params.is_laplacian()) {
    return -r * r;
  }
  return -r * r + scaling_constant(params) * radial_integral(params, r, true);
}

double multiplier_radial_series(const KernelParams& params, double r,
                                const specfun::SeriesControl& ctrl) {
  params.validate();
  ctrl.validate();
  require_frequency(r, "multiplier_radial_series");
  if (params.is_laplacian()) {
    throw DomainError("multiplier_radial_series: undefined at beta = n + 2");
  }
  if (r == 0.0) {
    return 0.0;
  }
  const double n = params.n;
  const double b = params.beta;
  const double delta = params.delta;
  const double q = -0.25 * r * r * delta * delta;
  const double prefactor =
      2.0 * std::pow(pi, 0.5 * n) * scaling_constant(params) * std::pow(delta, n - b);

  // u_k = q^k / (k! Gamma(n/2 + k))
  double u = q * std::exp(-specfun::ln_gamma(0.5 * n + 1.0));
  CompensatedSum sum;
  int small_run = 0;
  double term = 0.0;
  for (int k = 1; k <= ctrl.max_terms; ++k) {
    term = u / (n - b + 2.0 * k);
    sum.add(term);
    const double partial = sum.value();
    if (!std::isfinite(partial) || std::fabs(partial) > 1e300) {
      throw ConvergenceError("multiplier_radial_series: partial sums overflowed", partial,
                             std::fabs(term));
    }
    if (std::fabs(term) < ctrl.rel_tol * std::fmax(std::fabs(partial), 1e-300)) {
      if (++small_run >= ctrl.consecutive_small) {
        return prefactor * partial;
      }
    } else {
      small_run = 0;
    }
    u *= q / ((k + 1.0) * (0.5 * n + k));
  }
  throw ConvergenceError("multiplier_radial_series: no convergence " + describe(params, r),
                         prefactor * sum.value(), std::fabs(prefactor * term));
}

double multiplier_asymptotic(const KernelParams& params, double r) {
  params.validate();
  if (params.is_laplacian()) {
    throw DomainError("multiplier_asymptotic: no asymptotic branch at beta = n + 2");
  }
  if (!(r > 1.0) || !std::isfinite(r)) {
    throw DomainError("multiplier_asymptotic: requires r > 1");
  }
  const double n = params.n;
  const double b = params.beta;
  const double d = params.delta;
  if (b == n) {
    return -(2.0 * n / (d * d)) *
           (2.0 * std::log(r) + std::log(0.25 * d * d) + specfun::kEulerGamma -
            specfun::digamma(0.5 * n));
  }
  const double constant = -2.0 * n * (n + 2.0 - b) / (d * d * (n - b));
  const double gammas = std::exp(specfun::ln_gamma(0.5 * (n + 4.0 - b)) +
                                 specfun::ln_gamma(0.5 * (n + 2.0))) *
                        specfun::reciprocal_gamma(0.5 * b);
  const double power = 2.0 * std::pow(2.0 / d, n + 2.0 - b) * gammas / (n - b);
  return constant + power * std::pow(r, b - n);
}

MultiplierValue multiplier(const KernelParams& params, double r) {
  params.validate();
  require_frequency(r, "multiplier");
  if (params.is_laplacian()) {
    return {-r * r, EvalPath::Exact};
  }
  try {
    const HypergeometricValue h = multiplier_hypergeometric(params, r);
    if (!h.cancellation_degraded && h.cancellation_ratio <= kRouteCancellationLimit) {
      return {h.value, EvalPath::Hypergeometric};
    }
  } catch (const ConvergenceError&) {
    // fall through to quadrature
  }
  if (params.n > 3) {
    throw ConvergenceError("multiplier: series degraded and no quadrature fallback for n > 3 " +
                               describe(params, r),
                           NAN, NAN);
  }
  if (params.beta < params.n + 2.0) {
    return {multiplier_quadrature(params, r), EvalPath::Quadrature};
  }
  return {multiplier_extended_quadrature(params, r), EvalPath::ExtendedQuadrature};
}

MonotonicityScan monotonicity_scan(int n, double delta, double r, std::span<const double> betas) {
  if (!(r > 0.0)) {
    throw DomainError("monotonicity_scan: r must be positive");
  }
  const double lo = 0.5 * (n + 4.0);
  const double hi = n + 4.0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > lo && betas[i] < hi)) {
      std::ostringstream s;
      s << "monotonicity_scan: beta=" << betas[i] << " outside ((n+4)/2, n+4) = (" << lo << ", "
        << hi << ")";
      throw DomainError(s.str());
    }
    if (i > 0 && !(betas[i] > betas[i - 1])) {
      throw DomainError("monotonicity_scan: beta grid must be strictly increasing");
    }
  }
  MonotonicityScan scan;
  for (double b : betas) {
    const double m = multiplier(KernelParams{n, delta, b}, r).value;
    if (!scan.values.empty() && !(m < scan.values.back())) {
      scan.strictly_decreasing = false;
    }
    if (!(m < 0.0)) {
      scan.all_negative = false;
    }
    scan.betas.push_back(b);
    scan.values.push_back(m);
  }
  return scan;
}

}  // namespace nlwave
