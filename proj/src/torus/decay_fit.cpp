#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "nlwave/errors.hpp"
#include "nlwave/torus.hpp"

namespace nlwave {

DecayFit decay_exponent_fit(const SpectralField& field, int r_min, int r_max) {
  if (r_min > r_max) {
    throw DomainError("decay_exponent_fit: empty shell range");
  }
  const int lo = std::max(r_min, 1);
  if (r_max < lo) {
    throw InsufficientDataError("decay_exponent_fit: no shells with |k| >= 1 in range");
  }
  std::vector<double> shell_max(static_cast<std::size_t>(r_max) + 1, 0.0);
  for (std::size_t i = 0; i < field.size(); ++i) {
    const int j = static_cast<int>(std::lround(std::sqrt(static_cast<double>(field.norm2(i)))));
    if (j >= lo && j <= r_max) {
      shell_max[j] = std::max(shell_max[j], std::abs(field[i]));
    }
  }
  // log max_j = log C - q log j
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  int count = 0;
  for (int j = lo; j <= r_max; ++j) {
    if (!(shell_max[j] > 0.0)) {
      continue;
    }
    const double x = -std::log(static_cast<double>(j));
    const double y = std::log(shell_max[j]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 3) {
    throw InsufficientDataError("decay_exponent_fit: " + std::to_string(count) +
                                " nonempty shells in [" + std::to_string(r_min) + ", " +
                                std::to_string(r_max) + "], need at least 3");
  }
  const double mx = sx / count;
  const double my = sy / count;
  const double slope = (sxy - count * mx * my) / (sxx - count * mx * mx);
  const double intercept = my - slope * mx;
  return DecayFit{slope, std::exp(intercept), count};
}

SpectralField synthetic_field(int dim, int box_radius, double decay, std::uint64_t seed) {
  if (box_radius < 1) {
    throw DomainError("synthetic_field: box radius must be >= 1");
  }
  SpectralField field(dim, box_radius, true);
  std::mt19937_64 gen(seed);
  const std::size_t center = field.size() / 2;
  field[center] = 1.0;
  // Flat indices above the center are exactly the lexicographically positive k.
  for (std::size_t i = center + 1; i < field.size(); ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const double magnitude = std::pow(static_cast<double>(field.norm2(i)), -0.5 * decay);
    const cplx value = std::polar(magnitude, 2.0 * std::numbers::pi * u);
    field[i] = value;
    field[field.mirror(i)] = std::conj(value);
  }
  return field;
}

}  // namespace nlwave
