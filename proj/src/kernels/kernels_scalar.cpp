#include "nlwave/kernels.hpp"

namespace nlwave::kernels::scalar {

double weighted_sum_sq(std::span<const double> w, std::span<const cplx> u) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    sum += w[i] * std::norm(u[i]);
  }
  return sum;
}

double weighted_sum_sq_diff(std::span<const double> w, std::span<const cplx> u,
                            std::span<const cplx> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    sum += w[i] * std::norm(u[i] - v[i]);
  }
  return sum;
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

void combine(std::span<const double> alpha, std::span<const cplx> a, std::span<const double> gamma,
             std::span<const cplx> b, std::span<cplx> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = alpha[i] * a[i] + gamma[i] * b[i];
  }
}

}  // namespace nlwave::kernels::scalar
