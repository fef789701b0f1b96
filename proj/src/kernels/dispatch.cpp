#include <atomic>

#include "nlwave/errors.hpp"
#include "nlwave/kernels.hpp"

namespace nlwave::kernels {
namespace {

void check_sizes(std::size_t expected, std::size_t got, const char* who) {
  if (expected != got) {
    throw ShapeError(std::string(who) + ": operand lengths differ");
  }
}

Isa probe() {
#if defined(NLWAVE_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return Isa::Avx2;
  }
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) {
    throw DomainError("force_isa: AVX2 is not available on this machine");
  }
  current().store(isa, std::memory_order_relaxed);
}

double weighted_sum_sq(std::span<const double> w, std::span<const cplx> u) {
  check_sizes(w.size(), u.size(), "weighted_sum_sq");
#if defined(NLWAVE_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    return avx2::weighted_sum_sq(w, u);
  }
#endif
  return scalar::weighted_sum_sq(w, u);
}

double weighted_sum_sq_diff(std::span<const double> w, std::span<const cplx> u,
                            std::span<const cplx> v) {
  check_sizes(w.size(), u.size(), "weighted_sum_sq_diff");
  check_sizes(u.size(), v.size(), "weighted_sum_sq_diff");
#if defined(NLWAVE_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    return avx2::weighted_sum_sq_diff(w, u, v);
  }
#endif
  return scalar::weighted_sum_sq_diff(w, u, v);
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  check_sizes(a.size(), b.size(), "dot");
#if defined(NLWAVE_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    return avx2::dot(a, b);
  }
#endif
  return scalar::dot(a, b);
}

void combine(std::span<const double> alpha, std::span<const cplx> a, std::span<const double> gamma,
             std::span<const cplx> b, std::span<cplx> out) {
  check_sizes(out.size(), alpha.size(), "combine");
  check_sizes(out.size(), a.size(), "combine");
  check_sizes(out.size(), gamma.size(), "combine");
  check_sizes(out.size(), b.size(), "combine");
#if defined(NLWAVE_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    avx2::combine(alpha, a, gamma, b, out);
    return;
  }
#endif
  scalar::combine(alpha, a, gamma, b, out);
}

}  // namespace nlwave::kernels
