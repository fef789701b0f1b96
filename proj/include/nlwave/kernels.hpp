#pragma once

#include <complex>
#include <span>
#include <string_view>

// Data-parallel inner loops over coefficient arrays. Each operation has a
// portable scalar reference and, where the CPU supports it, a vector variant
// chosen once at first use.
namespace nlwave::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

// Best variant available on this machine.
Isa detected_isa();

// Variant currently used by the dispatching entry points.
Isa active_isa();

// Pins the dispatching entry points to `isa`; throws DomainError when the
// machine cannot run it. Intended for equivalence tests.
void force_isa(Isa isa);

/// sum_i w_i |u_i|^2
double weighted_sum_sq(std::span<const double> w, std::span<const cplx> u);

/// sum_i w_i |u_i - v_i|^2
double weighted_sum_sq_diff(std::span<const double> w, std::span<const cplx> u,
                            std::span<const cplx> v);

/// sum_i a_i b_i (no conjugation)
cplx dot(std::span<const cplx> a, std::span<const cplx> b);

/// out_i = alpha_i a_i + gamma_i b_i
void combine(std::span<const double> alpha, std::span<const cplx> a, std::span<const double> gamma,
             std::span<const cplx> b, std::span<cplx> out);

namespace scalar {
double weighted_sum_sq(std::span<const double> w, std::span<const cplx> u);
double weighted_sum_sq_diff(std::span<const double> w, std::span<const cplx> u,
                            std::span<const cplx> v);
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
void combine(std::span<const double> alpha, std::span<const cplx> a, std::span<const double> gamma,
             std::span<const cplx> b, std::span<cplx> out);
}  // namespace scalar

#if defined(NLWAVE_HAVE_AVX2)
namespace avx2 {
double weighted_sum_sq(std::span<const double> w, std::span<const cplx> u);
double weighted_sum_sq_diff(std::span<const double> w, std::span<const cplx> u,
                            std::span<const cplx> v);
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
void combine(std::span<const double> alpha, std::span<const cplx> a, std::span<const double> gamma,
             std::span<const cplx> b, std::span<cplx> out);
}  // namespace avx2
#endif

}  // namespace nlwave::kernels
