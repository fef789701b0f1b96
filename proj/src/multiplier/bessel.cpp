#include "nlwave/bessel.hpp"

#include <cmath>
#include <numbers>

namespace nlwave::bessel {
namespace {

double j0_power_series(double x) {
  // sum_j (-x^2/4)^j / (j!)^2
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j < 200; ++j) {
    term *= q / (static_cast<double>(j) * j);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum) && std::fabs(term) < 1e-18) {
      break;
    }
  }
  return sum;
}

// J0(x) = (1/2pi) int_0^{2pi} cos(x sin t) dt. The trapezoidal rule on m points
// is exact up to terms of order J_m(x), negligible once m exceeds x by ~30.
double j0_trapezoid(double x) {
  const int m = 2 * static_cast<int>(std::ceil(0.5 * (x + 40.0)));
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    sum += std::cos(x * std::sin(2.0 * std::numbers::pi * i / m));
  }
  return sum / m;
}

// Hankel expansion J0(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi).
double j0_hankel(double x) {
  const double chi = x - 0.25 * std::numbers::pi;
  double p = 1.0;
  double q = 0.0;
  double a = 1.0;  // |a_k(0)| / x^k
  double prev = 1.0;
  for (int k = 1; k < 120; ++k) {
    const double c = 2.0 * k - 1.0;
    a *= c * c / (8.0 * k * x);
    if (a > prev) {
      break;
    }
    prev = a;
    // k odd feeds Q with signs -,+,- ...; k even feeds P with signs -,+,- ...
    switch (k % 4) {
      case 1: q -= a; break;
      case 2: p -= a; break;
      case 3: q += a; break;
      case 0: p += a; break;
    }
    if (a < 1e-17) {
      break;
    }
  }
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double j0(double x) {
  x = std::fabs(x);
  if (x <= 8.0) {
    return j0_power_series(x);
  }
  if (x < 25.0) {
    return j0_trapezoid(x);
  }
  return j0_hankel(x);
}

}  // namespace nlwave::bessel
