#include <algorithm>
#include <cmath>
#include <string>

#include "nlwave/errors.hpp"
#include "nlwave/kernels.hpp"
#include "nlwave/torus.hpp"

namespace nlwave {
namespace {

std::size_t box_size(int dim, int box_radius) {
  if (dim < 1) {
    throw ShapeError("SpectralField: dimension must be >= 1");
  }
  if (box_radius < 0) {
    throw ShapeError("SpectralField: box radius must be >= 0");
  }
  std::size_t total = 1;
  for (int d = 0; d < dim; ++d) {
    total *= static_cast<std::size_t>(2 * box_radius + 1);
  }
  return total;
}

}  // namespace

SpectralField::SpectralField(int dim, int box_radius, bool real_flag)
    : dim_(dim),
      box_radius_(box_radius),
      real_flag_(real_flag),
      coeffs_(box_size(dim, box_radius), cplx{0.0, 0.0}) {}

SpectralField::SpectralField(int dim, int box_radius, std::vector<cplx> coeffs, bool real_flag)
    : dim_(dim), box_radius_(box_radius), real_flag_(real_flag), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != box_size(dim, box_radius)) {
    throw ShapeError("SpectralField: expected " + std::to_string(box_size(dim, box_radius)) +
                     " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

std::size_t SpectralField::index(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != dim_) {
    throw ShapeError("SpectralField: multi-index has rank " + std::to_string(k.size()) +
                     ", field has dimension " + std::to_string(dim_));
  }
  std::size_t flat = 0;
  for (int kd : k) {
    if (kd < -box_radius_ || kd > box_radius_) {
      throw ShapeError("SpectralField: index component " + std::to_string(kd) +
                       " outside [-K, K] with K = " + std::to_string(box_radius_));
    }
    flat = flat * side() + static_cast<std::size_t>(kd + box_radius_);
  }
  return flat;
}

std::vector<int> SpectralField::multi_index(std::size_t flat) const {
  std::vector<int> k(dim_);
  for (int d = dim_ - 1; d >= 0; --d) {
    k[d] = static_cast<int>(flat % side()) - box_radius_;
    flat /= side();
  }
  return k;
}

int SpectralField::norm2(std::size_t flat) const {
  int total = 0;
  for (int d = 0; d < dim_; ++d) {
    const int kd = static_cast<int>(flat % side()) - box_radius_;
    total += kd * kd;
    flat /= side();
  }
  return total;
}

std::vector<int> squared_norms(int dim, int box_radius) {
  const SpectralField shape(dim, box_radius);
  std::vector<int> out(shape.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = shape.norm2(i);
  }
  return out;
}

std::vector<double> sobolev_weights(int dim, int box_radius, double q) {
  const std::vector<int> norms = squared_norms(dim, box_radius);
  std::vector<double> w(norms.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = q == 0.0 ? 1.0 : std::pow(1.0 + norms[i], q);
  }
  return w;
}

double sobolev_norm(const SpectralField& field, double q) {
  const std::vector<double> w = sobolev_weights(field.dim(), field.box_radius(), q);
  return std::sqrt(kernels::weighted_sum_sq(w, field.coeffs()));
}

double sobolev_distance(const SpectralField& a, const SpectralField& b, double q) {
  if (!a.same_shape(b)) {
    throw ShapeError("sobolev_distance: fields have different shapes");
  }
  const std::vector<double> w = sobolev_weights(a.dim(), a.box_radius(), q);
  return std::sqrt(kernels::weighted_sum_sq_diff(w, a.coeffs(), b.coeffs()));
}

double hermitian_defect(const SpectralField& field) {
  double worst = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    worst = std::max(worst, std::abs(field[field.mirror(i)] - std::conj(field[i])));
  }
  return worst;
}

bool is_hermitian(const SpectralField& field, double tol) { return hermitian_defect(field) <= tol; }

SpectralField truncate(const SpectralField& field, int box_radius) {
  if (box_radius < 0 || box_radius > field.box_radius()) {
    throw ShapeError("truncate: target box radius must lie in [0, K]");
  }
  SpectralField out(field.dim(), box_radius, field.real_flag());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field.at(out.multi_index(i));
  }
  return out;
}

}  // namespace nlwave
