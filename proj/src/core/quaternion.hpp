#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

namespace ssp {

/// Scalar kind of a matrix entry or matrix. Real and complex values embed
/// into the quaternions, so one storage type serves all three arithmetics.
enum class ScalarKind { Real, Complex, Quaternion };

/// Hamilton quaternion w + x i + y j + z k over doubles.
struct Quat {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quat() = default;
  constexpr Quat(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quat i() { return {0, 1, 0, 0}; }
  static constexpr Quat j() { return {0, 0, 1, 0}; }
  static constexpr Quat k() { return {0, 0, 0, 1}; }

  static Quat from_complex(std::complex<double> c) { return {c.real(), c.imag(), 0, 0}; }

  double re() const { return w; }
  Quat conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  bool is_real(double tol = 0.0) const {
    return std::abs(x) <= tol && std::abs(y) <= tol && std::abs(z) <= tol;
  }
  bool is_complex(double tol = 0.0) const { return std::abs(y) <= tol && std::abs(z) <= tol; }

  std::complex<double> to_complex() const { return {w, x}; }

  Quat operator-() const { return {-w, -x, -y, -z}; }
  Quat& operator+=(const Quat& q) { w += q.w; x += q.x; y += q.y; z += q.z; return *this; }
  Quat& operator-=(const Quat& q) { w -= q.w; x -= q.x; y -= q.y; z -= q.z; return *this; }

  friend Quat operator+(Quat a, const Quat& b) { return a += b; }
  friend Quat operator-(Quat a, const Quat& b) { return a -= b; }

  friend Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quat operator*(double s, const Quat& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
  friend Quat operator*(const Quat& q, double s) { return s * q; }
};

inline Quat commutator(const Quat& a, const Quat& b) { return a * b - b * a; }

std::ostream& operator<<(std::ostream& os, const Quat& q);

/// Tagged scalar as used by the quaternion-kind-aware entry points.
struct Scalar {
  ScalarKind kind = ScalarKind::Real;
  Quat value;
};

/// Hamilton product; both arguments must be of quaternion kind.
Scalar quaternion_mul(const Scalar& p, const Scalar& q);

}  // namespace ssp
