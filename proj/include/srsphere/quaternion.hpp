#pragma once

#include <cmath>

namespace srsphere {

/// Hamilton quaternion w + x*i + y*j + z*k over doubles.
struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  static Quaternion one() { return {1, 0, 0, 0}; }

  double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  Quaternion conj() const { return {w, -x, -y, -z}; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
};

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

/// exp(a*i + b*j + c*k) = cos(s) + sin(s)*(a*i+b*j+c*k)/s with s = sqrt(a^2+b^2+c^2),
/// extended by continuity to 1 at s = 0.
inline Quaternion quat_exp(double a, double b, double c) {
  const double s = std::sqrt(a * a + b * b + c * c);
  // sin(s)/s via series near zero; keeps the unit-norm property to roundoff.
  const double f = s < 1e-8 ? 1.0 - s * s / 6.0 : std::sin(s) / s;
  return {std::cos(s), f * a, f * b, f * c};
}

}  // namespace srsphere
