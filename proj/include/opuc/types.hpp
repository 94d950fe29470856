#pragma once

#include <cmath>
#include <complex>

namespace opuc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Modulus tolerance below which a parameter counts as unimodular.
inline constexpr double kUnimodularTol = 1e-14;

inline bool is_unimodular(const cplx& v, double tol = kUnimodularTol) {
  return std::abs(std::abs(v) - 1.0) <= tol;
}

// sqrt(1-|a|^2) in the cancellation-safe form sqrt((1-|a|)(1+|a|)).
// Snaps to exactly 0 when |a| is unimodular within tolerance, so that
// matrices built from such parameters decompose with exact zeros.
inline double rho_of(const cplx& a) {
  const double m = std::abs(a);
  if (std::abs(m - 1.0) <= kUnimodularTol) return 0.0;
  return std::sqrt((1.0 - m) * (1.0 + m));
}

// Angle mapped into [0, 2*pi).
inline double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

// Shortest distance between two angles on the circle.
inline double angular_distance(double a, double b) {
  double d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return d > kPi ? kTwoPi - d : d;
}

}  // namespace opuc
