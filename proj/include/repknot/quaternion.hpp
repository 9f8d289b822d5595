#pragma once

#include <array>
#include <cmath>

namespace repknot {

// Unit quaternions model SU(2); the trace of the corresponding 2x2 matrix is
// twice the real part, so "traceless" means re == 0.
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  static Quat one() { return {1, 0, 0, 0}; }
  static Quat i() { return {0, 1, 0, 0}; }
  static Quat j() { return {0, 0, 1, 0}; }
  static Quat k() { return {0, 0, 0, 1}; }

  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
  }
  Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quat operator-() const { return {-w, -x, -y, -z}; }
  Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  Quat conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Quat normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
  }
  // Inverse assuming (approximate) unit norm.
  Quat inv_unit() const { return conj(); }

  double re() const { return w; }
  std::array<double, 3> imag() const { return {x, y, z}; }
  double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double dist(const Quat& a, const Quat& b) { return (a - b).norm(); }

inline Quat pow_sign(const Quat& q, int eps) { return eps >= 0 ? q : q.inv_unit(); }

// Rotation of the imaginary part v |-> q v q^-1 applied to a 3-vector.
inline std::array<double, 3> ad_apply(const Quat& q, const std::array<double, 3>& v) {
  Quat p{0, v[0], v[1], v[2]};
  Quat r = q * p * q.inv_unit();
  return {r.x, r.y, r.z};
}

}  // namespace repknot
