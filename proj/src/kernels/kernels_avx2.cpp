#include <immintrin.h>

#include "nlwave/kernels.hpp"

namespace nlwave::kernels::avx2 {
namespace {

// Two complex values per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

// [w0, w0, w1, w1]
inline __m256d load_weights2(const double* w) {
  const __m128d pair = _mm_loadu_pd(w);
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(pair), 0b01010000);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double weighted_sum_sq(std::span<const double> w, std::span<const cplx> u) {
  const std::size_t n = u.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = load2(&u[i]);
    const __m256d x1 = load2(&u[i + 2]);
    acc0 = _mm256_fmadd_pd(load_weights2(&w[i]), _mm256_mul_pd(x0, x0), acc0);
    acc1 = _mm256_fmadd_pd(load_weights2(&w[i + 2]), _mm256_mul_pd(x1, x1), acc1);
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    sum += w[i] * std::norm(u[i]);
  }
  return sum;
}

double weighted_sum_sq_diff(std::span<const double> w, std::span<const cplx> u,
                            std::span<const cplx> v) {
  const std::size_t n = u.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d0 = _mm256_sub_pd(load2(&u[i]), load2(&v[i]));
    const __m256d d1 = _mm256_sub_pd(load2(&u[i + 2]), load2(&v[i + 2]));
    acc0 = _mm256_fmadd_pd(load_weights2(&w[i]), _mm256_mul_pd(d0, d0), acc0);
    acc1 = _mm256_fmadd_pd(load_weights2(&w[i + 2]), _mm256_mul_pd(d1, d1), acc1);
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    sum += w[i] * std::norm(u[i] - v[i]);
  }
  return sum;
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  const std::size_t n = a.size();
  // acc_rr = [ar*br, ai*bi, ...], acc_ri = [ar*bi, ai*br, ...]
  __m256d acc_rr = _mm256_setzero_pd();
  __m256d acc_ri = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = load2(&a[i]);
    const __m256d y = load2(&b[i]);
    acc_rr = _mm256_fmadd_pd(x, y, acc_rr);
    acc_ri = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0b0101), acc_ri);
  }
  alignas(32) double rr[4];
  alignas(32) double ri[4];
  _mm256_store_pd(rr, acc_rr);
  _mm256_store_pd(ri, acc_ri);
  double re = (rr[0] + rr[2]) - (rr[1] + rr[3]);
  double im = (ri[0] + ri[2]) + (ri[1] + ri[3]);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

void combine(std::span<const double> alpha, std::span<const cplx> a, std::span<const double> gamma,
             std::span<const cplx> b, std::span<cplx> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d r = _mm256_fmadd_pd(load_weights2(&alpha[i]), load2(&a[i]),
                                      _mm256_mul_pd(load_weights2(&gamma[i]), load2(&b[i])));
    _mm256_storeu_pd(reinterpret_cast<double*>(&out[i]), r);
  }
  for (; i < n; ++i) {
    out[i] = alpha[i] * a[i] + gamma[i] * b[i];
  }
}

}  // namespace nlwave::kernels::avx2
