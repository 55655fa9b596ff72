#pragma once

#include <array>
#include <cmath>

namespace sqc {

/// Plain real 3-vector. Used for marginal vectors, correlation triples
/// (w12, w13, w23) and elliptope coordinates alike.
struct Vec3 {
  std::array<double, 3> v{{0.0, 0.0, 0.0}};

  Vec3() = default;
  Vec3(double a, double b, double c) : v{{a, b, c}} {}

  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  Vec3& operator+=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) v[i] += o.v[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) v[i] -= o.v[i];
    return *this;
  }
  Vec3& operator*=(double s) {
    for (int i = 0; i < 3; ++i) v[i] *= s;
    return *this;
  }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

  friend bool operator==(const Vec3& a, const Vec3& b) { return a.v == b.v; }
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline double max_abs(const Vec3& a) {
  return std::max({std::fabs(a[0]), std::fabs(a[1]), std::fabs(a[2])});
}

/// Normalized copy; returns `fallback` when the norm underflows.
inline Vec3 normalized(const Vec3& a, const Vec3& fallback) {
  const double n = norm(a);
  if (n < 1e-300) return fallback;
  return (1.0 / n) * a;
}

inline Vec3 unit_axis(int axis) {
  Vec3 e;
  e[axis] = 1.0;
  return e;
}

}  // namespace sqc
