#pragma once

#include <array>
#include <cstdint>

#include "sqc/projection.hpp"
#include "sqc/rng.hpp"
#include "sqc/vec3.hpp"

namespace sqc {

// The 3x3 elliptope: symmetric PSD matrices with unit diagonal, identified
// with their above-diagonal entries q = (x', y', z'). Its affine image
// (q + 1)/4 is the set of pairwise normalized trace products of three rank-1
// projections on a 2-dimensional space.

/// det of the completed matrix: 1 + 2xyz - x^2 - y^2 - z^2.
double elliptope_det(const Vec3& q);

/// Smallest eigenvalue of the completed matrix (closed-form, no vectors).
double elliptope_min_eig(const Vec3& q);

struct EllipMembership {
  bool member;
  double min_eig;    // diagnostic: smallest eigenvalue of the completed matrix
  double det;        // Sylvester determinant
  bool sylvester;    // box constraints + determinant test
};

/// Membership verdict: member iff min eigenvalue >= -tol. Total function.
EllipMembership elliptope_membership(const Vec3& q, double tol = 1e-9);

struct EllipProjection {
  Vec3 point;
  int iterations;
  double residual;   // last-iterate change, infinity norm
  bool converged;
};

/// Euclidean nearest point of the elliptope (alternating projections between
/// the PSD cone and the unit-diagonal space, with the cone correction term).
EllipProjection elliptope_project(const Vec3& v);

struct EllipSupport {
  double value;
  Vec3 argmax;
};

/// Support function max over the elliptope of dot(c, q), with an attaining
/// member point. Multi-start block-coordinate ascent over unit-vector
/// triples; the restarts are fixed, so the function is deterministic.
EllipSupport elliptope_support(const Vec3& c, double tol = 1e-12);

/// Affine correspondence with the rank-1 projection trace set.
inline Vec3 s2_from_elliptope(const Vec3& q) {
  return {(q[0] + 1.0) * 0.25, (q[1] + 1.0) * 0.25, (q[2] + 1.0) * 0.25};
}
inline Vec3 elliptope_from_s2(const Vec3& p) {
  return {4.0 * p[0] - 1.0, 4.0 * p[1] - 1.0, 4.0 * p[2] - 1.0};
}

struct UnitVecTriple {
  Vec3 a, b, c;
};

/// Gram factorization of a member point into three unit vectors:
/// q = (<a,b>, <a,c>, <b,c>). Negative eigenvalue dust is clipped.
UnitVecTriple elliptope_factor(const Vec3& q);

/// Rank-1 projection triple with trace triple (q + 1)/4, built from the
/// Hermitian unitaries a1 X + a2 Y + a3 Z (X, Y, Z the 2x2 spin matrices).
std::array<Projection, 3> realize_s2(const UnitVecTriple& t);

/// Same, factoring a member point first. Rejects non-members at `tol`.
std::array<Projection, 3> realize_s2(const Vec3& q, double tol = 1e-9);

/// Trace triple of three independent uniformly random rank-1 directions;
/// always a member of the image set by construction.
Vec3 sample_s2(CounterRng& rng);
Vec3 sample_s2(std::uint64_t seed);

}  // namespace sqc
