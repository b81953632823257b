#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qpf {

// Real quaternion w + x*i + y*j + z*k. Plain value type; all operations are
// stateless and safe to call concurrently.
struct Quat {
  double w = 0, x = 0, y = 0, z = 0;

  constexpr Quat() = default;
  constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quat real(double a) { return {a, 0, 0, 0}; }
  static constexpr Quat pure(double x_, double y_, double z_) { return {0, x_, y_, z_}; }

  friend constexpr Quat operator+(const Quat& a, const Quat& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quat operator-(const Quat& a, const Quat& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quat operator-(const Quat& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend constexpr Quat operator*(const Quat& a, double c) {
    return {a.w * c, a.x * c, a.y * c, a.z * c};
  }
  friend constexpr Quat operator*(double c, const Quat& a) { return a * c; }
  friend constexpr Quat operator/(const Quat& a, double c) {
    return {a.w / c, a.x / c, a.y / c, a.z / c};
  }

  // Hamilton product (noncommutative).
  friend constexpr Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
};

inline constexpr Quat conj(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm_sq(const Quat& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double norm(const Quat& q) { return std::sqrt(norm_sq(q)); }

inline Quat inverse(const Quat& q) {
  double n2 = norm_sq(q);
  if (n2 == 0) throw std::domain_error("inverse: zero quaternion");
  return conj(q) / n2;
}

// Dot product of the pure parts (Euclidean R^3 dot).
inline constexpr double dot3(const Quat& a, const Quat& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Polar split x = u*s of a pure quaternion, s = |x|, |u| = 1.
// For x = 0 returns the conventional axis u = i with s = 0; callers that
// treat s = 0 must branch before using u.
struct Polar {
  Quat u;
  double s;
};

inline Polar polar(const Quat& x) {
  double s = norm(x);
  if (s == 0) return {Quat::pure(1, 0, 0), 0.0};
  return {x / s, s};
}

// Rotation action q x q^{-1} on pure quaternions.
inline Quat adjoint_action(const Quat& q, const Quat& x) {
  if (norm_sq(q) == 0) throw std::domain_error("adjoint_action: zero quaternion");
  return q * x * inverse(q);
}

// 2x2 complex matrix representation:
//   [ x1*i       x2 + x3*i ]
//   [ -x2 + x3*i   -x1*i   ]
// extended to general quaternions by phi(1) = identity. Algebra homomorphism;
// Re(q) = Tr(phi(q))/2 and det(phi(q)) = |q|^2.
struct ComplexEmbedding {
  std::complex<double> a, b, c, d;  // row-major 2x2
};

inline ComplexEmbedding embed(const Quat& q) {
  using C = std::complex<double>;
  return {C(q.w, q.x), C(q.y, q.z), C(-q.y, q.z), C(q.w, -q.x)};
}

}  // namespace qpf
