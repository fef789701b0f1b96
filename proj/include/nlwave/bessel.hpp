#pragma once

namespace nlwave::bessel {

/// Bessel function of the first kind, order zero. Power series for |x| <= 8,
/// trapezoidal rule on the periodic integral representation up to 25, Hankel
/// asymptotic expansion beyond. Absolute error below 1e-13.
double j0(double x);

}  // namespace nlwave::bessel
