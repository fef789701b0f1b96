#include <cmath>
#include <numbers>
#include <string>

#include "nlwave/errors.hpp"
#include "nlwave/kernels.hpp"
#include "nlwave/torus.hpp"

namespace nlwave {
namespace {

// e^{2 pi i m / side} for m = 0..side-1.
std::vector<cplx> roots_of_unity(int side) {
  std::vector<cplx> w(side);
  for (int m = 0; m < side; ++m) {
    const double angle = 2.0 * std::numbers::pi * m / side;
    w[m] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

// Applies matrix[out][in] (side x side) along one axis of a row-major cube.
void apply_axis(std::vector<cplx>& data, int dim, int side, int axis,
                const std::vector<cplx>& matrix) {
  std::size_t stride = 1;
  for (int d = axis + 1; d < dim; ++d) {
    stride *= side;
  }
  const std::size_t block = stride * side;
  std::vector<cplx> line(side);
  for (std::size_t base = 0; base < data.size(); base += block) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      for (int j = 0; j < side; ++j) {
        line[j] = data[base + offset + j * stride];
      }
      for (int o = 0; o < side; ++o) {
        data[base + offset + o * stride] =
            kernels::dot(std::span<const cplx>(matrix).subspan(o * side, side), line);
      }
    }
  }
}

// sign = -1: forward (samples -> coefficients, scaled by 1/side);
// sign = +1: synthesis (coefficients -> samples).
std::vector<cplx> transform_matrix(int box_radius, int sign) {
  const int side = 2 * box_radius + 1;
  const std::vector<cplx> w = roots_of_unity(side);
  std::vector<cplx> matrix(static_cast<std::size_t>(side) * side);
  for (int a = 0; a < side; ++a) {
    for (int b = 0; b < side; ++b) {
      // forward: row = k index a, column = grid point b
      // synthesis: row = grid point a, column = k index b
      const int k = sign < 0 ? a - box_radius : b - box_radius;
      const int j = sign < 0 ? b : a;
      int m = (k * j) % side;
      if (sign < 0) {
        m = -m;
      }
      m = ((m % side) + side) % side;
      matrix[static_cast<std::size_t>(a) * side + b] = sign < 0 ? w[m] / double(side) : w[m];
    }
  }
  return matrix;
}

}  // namespace

SpectralField from_samples(int dim, int box_radius, std::span<const cplx> samples) {
  SpectralField field(dim, box_radius);
  if (samples.size() != field.size()) {
    throw ShapeError("from_samples: expected " + std::to_string(field.size()) +
                     " samples for a (2K+1)^n grid with K = " + std::to_string(box_radius) +
                     ", got " + std::to_string(samples.size()));
  }
  std::vector<cplx> data(samples.begin(), samples.end());
  bool real = true;
  for (const cplx& s : samples) {
    real = real && s.imag() == 0.0;
  }
  const std::vector<cplx> matrix = transform_matrix(box_radius, -1);
  for (int axis = 0; axis < dim; ++axis) {
    apply_axis(data, dim, field.side(), axis, matrix);
  }
  return SpectralField(dim, box_radius, std::move(data), real);
}

std::vector<cplx> grid_values(const SpectralField& field) {
  std::vector<cplx> data(field.coeffs().begin(), field.coeffs().end());
  const std::vector<cplx> matrix = transform_matrix(field.box_radius(), +1);
  for (int axis = 0; axis < field.dim(); ++axis) {
    apply_axis(data, field.dim(), field.side(), axis, matrix);
  }
  return data;
}

std::vector<cplx> evaluate(const SpectralField& field, std::span<const double> points) {
  const int dim = field.dim();
  if (points.size() % dim != 0) {
    throw ShapeError("evaluate: point buffer length is not a multiple of the dimension");
  }
  const int side = field.side();
  const int K = field.box_radius();
  const std::size_t count = points.size() / dim;
  std::vector<cplx> out(count);
  std::vector<cplx> phase(side);
  std::vector<cplx> work;
  for (std::size_t p = 0; p < count; ++p) {
    // Contract the last axis first; the running array shrinks by a factor
    // of side on every pass.
    std::span<const cplx> current = field.coeffs();
    std::vector<cplx> next;
    for (int axis = dim - 1; axis >= 0; --axis) {
      const double x = points[p * dim + axis];
      for (int k = -K; k <= K; ++k) {
        phase[k + K] = std::polar(1.0, k * x);
      }
      const std::size_t rows = current.size() / side;
      next.assign(rows, cplx{});
      for (std::size_t r = 0; r < rows; ++r) {
        next[r] = kernels::dot(current.subspan(r * side, side), phase);
      }
      work.swap(next);
      current = work;
    }
    out[p] = current[0];
  }
  return out;
}

}  // namespace nlwave
