#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace nlwave {

using cplx = std::complex<double>;

/// Fourier coefficients u_k of a periodic function on [0, 2pi]^n, truncated
/// to the box [-K, K]^n. Stored densely in row-major order, axis 0 slowest,
/// each axis running k = -K, ..., K.
class SpectralField {
 public:
  SpectralField(int dim, int box_radius, bool real_flag = false);
  SpectralField(int dim, int box_radius, std::vector<cplx> coeffs, bool real_flag);

  int dim() const { return dim_; }
  int box_radius() const { return box_radius_; }
  int side() const { return 2 * box_radius_ + 1; }
  std::size_t size() const { return coeffs_.size(); }

  bool real_flag() const { return real_flag_; }
  void set_real_flag(bool flag) { real_flag_ = flag; }

  std::span<const cplx> coeffs() const { return coeffs_; }
  std::span<cplx> coeffs() { return coeffs_; }

  // Throws ShapeError for a wrong rank or a k outside the box.
  std::size_t index(std::span<const int> k) const;
  std::vector<int> multi_index(std::size_t flat) const;
  int norm2(std::size_t flat) const;

  cplx at(std::span<const int> k) const { return coeffs_[index(k)]; }
  cplx& at(std::span<const int> k) { return coeffs_[index(k)]; }
  cplx operator[](std::size_t flat) const { return coeffs_[flat]; }
  cplx& operator[](std::size_t flat) { return coeffs_[flat]; }

  // Flat index of -k.
  std::size_t mirror(std::size_t flat) const { return coeffs_.size() - 1 - flat; }

  bool same_shape(const SpectralField& other) const {
    return dim_ == other.dim_ && box_radius_ == other.box_radius_;
  }

  friend bool operator==(const SpectralField&, const SpectralField&) = default;

 private:
  int dim_;
  int box_radius_;
  bool real_flag_;
  std::vector<cplx> coeffs_;
};

/// |k|^2 for every flat index of a (dim, K) box.
std::vector<int> squared_norms(int dim, int box_radius);

/// (1 + |k|^2)^q for every flat index of a (dim, K) box.
std::vector<double> sobolev_weights(int dim, int box_radius, double q);

/// (sum_k (1 + |k|^2)^q |u_k|^2)^{1/2}
double sobolev_norm(const SpectralField& field, double q);

/// Sobolev norm of a - b; shapes must match.
double sobolev_distance(const SpectralField& a, const SpectralField& b, double q);

/// max_k |u_{-k} - conj(u_k)|
double hermitian_defect(const SpectralField& field);
bool is_hermitian(const SpectralField& field, double tol = 1e-12);

/// Coefficients restricted to the smaller box [-K', K']^n.
SpectralField truncate(const SpectralField& field, int box_radius);

/// Discrete Fourier coefficients of samples on the uniform grid
/// x_j = 2 pi j / (2K+1), j = 0..2K per axis, row-major like SpectralField.
SpectralField from_samples(int dim, int box_radius, std::span<const cplx> samples);

/// Values of the field on the same uniform grid; inverse of from_samples.
std::vector<cplx> grid_values(const SpectralField& field);

/// sum_k u_k e^{i k.x} at each point; `points` holds dim coordinates per point.
std::vector<cplx> evaluate(const SpectralField& field, std::span<const double> points);

struct DecayFit {
  double exponent = 0.0;  // q in |u_k| <= C |k|^{-q}
  double constant = 0.0;  // C
  int shells = 0;
};

/// Least-squares fit of log max_{round|k|=j} |u_k| against -log j over the
/// integer shells j in [r_min, r_max]. Throws InsufficientDataError with
/// fewer than three nonempty shells.
DecayFit decay_exponent_fit(const SpectralField& field, int r_min, int r_max);

/// Hermitian field with u_0 = 1 and |u_k| = |k|^{-decay}, phases drawn from a
/// generator seeded with `seed`.
SpectralField synthetic_field(int dim, int box_radius, double decay, std::uint64_t seed);

}  // namespace nlwave
