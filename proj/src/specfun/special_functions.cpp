#include "nlwave/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "nlwave/errors.hpp"

namespace nlwave::specfun {
namespace {

// zeta(k) - 1 for k = 2..40.
constexpr std::array<double, 39> kZetaMinusOne = {
    0.64493406684822644,    0.20205690315959429,    0.082323233711138192,
    0.036927755143369926,   0.01734306198444914,    0.0083492773819228268,
    0.0040773561979443394,  0.0020083928260822144,  0.00099457512781808534,
    0.00049418860411946456, 0.0002460865533080483,  0.00012271334757848915,
    6.1248135058704829e-5,  3.0588236307020494e-5,  1.5282259408651872e-5,
    7.6371976378997623e-6,  3.8172932649998399e-6,  1.9082127165539389e-6,
    9.5396203387279611e-7,  4.7693298678780646e-7,  2.3845050272773299e-7,
    1.1921992596531107e-7,  5.960818905125948e-8,   2.980350351465228e-8,
    1.4901554828365041e-8,  7.4507117898354295e-9,  3.7253340247884571e-9,
    1.862659723513049e-9,   9.3132743241966818e-10, 4.6566290650337841e-10,
    2.3283118336765055e-10, 1.164155017270052e-10,  5.8207720879027009e-11,
    2.9103850444970997e-11, 1.4551921891041984e-11, 7.275959835057481e-12,
    3.6379795473786512e-12, 1.8189896503070659e-12, 9.0949478402638893e-13,
};

// log Gamma(2 + e) = e (1 - gamma) + sum_{k>=2} (-1)^k (zeta(k) - 1) e^k / k,
// valid for |e| < 2. Used with |e| <= 0.5 where the tail is below 1e-17.
double ln_gamma_near_two(double e) {
  double sum = 0.0;
  double power = e * e;
  for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
    const int k = static_cast<int>(i) + 2;
    const double term = kZetaMinusOne[i] * power / k;
    sum += (k % 2 == 0) ? term : -term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) {
      break;
    }
    power *= e;
  }
  return e * (1.0 - kEulerGamma) + sum;
}

double stirling_ln_gamma(double x) {
  // Bernoulli-number corrections B_{2j} / (2j (2j-1) x^{2j-1}).
  constexpr std::array<double, 8> kCoeff = {
      1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double corr = 0.0;
  double p = inv;
  for (double c : kCoeff) {
    corr += c * p;
    p *= inv2;
  }
  constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + corr;
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) {
    throw DomainError("SeriesControl: rel_tol must be positive");
  }
  if (max_terms < 1) {
    throw DomainError("SeriesControl: max_terms must be at least 1");
  }
  if (consecutive_small < 1) {
    throw DomainError("SeriesControl: consecutive_small must be at least 1");
  }
}

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ln_gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  if (x < 0.5) {
    // log Gamma(x) = log Gamma(1 + x) - log x, and
    // log Gamma(1 + e) = log Gamma(2 + e) - log1p(e).
    return ln_gamma_near_two(x) - std::log1p(x) - std::log(x);
  }
  if (x < 1.5) {
    return ln_gamma_near_two(x - 1.0) - std::log1p(x - 1.0);
  }
  if (x < 2.5) {
    return ln_gamma_near_two(x - 2.0);
  }
  if (x >= 10.0) {
    return stirling_ln_gamma(x);
  }
  // Shift into the Stirling range: log Gamma(x) = log Gamma(x+m) - log prod.
  double prod = 1.0;
  double y = x;
  while (y < 10.0) {
    prod *= y;
    y += 1.0;
  }
  return stirling_ln_gamma(y) - std::log(prod);
}

double reciprocal_gamma(double x) {
  if (x > 0.0) {
    return std::exp(-ln_gamma(x));
  }
  if (x == std::floor(x)) {
    return 0.0;
  }
  // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi.
  return std::exp(ln_gamma(1.0 - x)) * std::sin(std::numbers::pi * x) / std::numbers::pi;
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("digamma: argument must be positive and finite, got " + std::to_string(x));
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // -sum B_{2j} / (2j x^{2j})
  const double tail =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
  return shift + std::log(x) - 0.5 / x - tail;
}

double pochhammer(double a, int k) {
  if (k < 0) {
    throw DomainError("pochhammer: k must be nonnegative");
  }
  double p = 1.0;
  for (int i = 0; i < k; ++i) {
    p *= a + i;
  }
  return p;
}

}  // namespace nlwave::specfun
