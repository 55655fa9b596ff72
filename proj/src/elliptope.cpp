#include "sqc/elliptope.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sqc/eig.hpp"

namespace sqc {

double elliptope_det(const Vec3& q) {
  const double x = q[0], y = q[1], z = q[2];
  return 1.0 + 2.0 * x * y * z - x * x - y * y - z * z;
}

double elliptope_min_eig(const Vec3& q) {
  // Closed-form spectrum of [[1,x,y],[x,1,z],[y,z,1]]: shift by the unit
  // diagonal and use the trigonometric form for the traceless remainder.
  const double x = q[0], y = q[1], z = q[2];
  const double p1 = x * x + y * y + z * z;
  if (p1 < 1e-60) return 1.0;
  const double p = std::sqrt(p1 / 3.0);
  const double detb = (2.0 * x * y * z) / (p * p * p);
  double r = detb / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  // Eigenvalues 1 + 2p cos(phi + 2k pi/3); k = 1 gives the smallest.
  return 1.0 + 2.0 * p * std::cos(phi + 2.0943951023931953);
}

EllipMembership elliptope_membership(const Vec3& q, double tol) {
  EllipMembership m;
  m.min_eig = elliptope_min_eig(q);
  m.det = elliptope_det(q);
  const bool box = std::fabs(q[0]) <= 1.0 + tol && std::fabs(q[1]) <= 1.0 + tol &&
                   std::fabs(q[2]) <= 1.0 + tol;
  m.sylvester = box && m.det >= -tol;
  m.member = m.min_eig >= -tol;
  return m;
}

namespace {

CMatrix completed(const Vec3& q) {
  CMatrix m = CMatrix::identity(3);
  m.at(0, 1) = m.at(1, 0) = q[0];
  m.at(0, 2) = m.at(2, 0) = q[1];
  m.at(1, 2) = m.at(2, 1) = q[2];
  return m;
}

Vec3 off_diagonal(const CMatrix& m) {
  return {m.at(0, 1).real(), m.at(0, 2).real(), m.at(1, 2).real()};
}

CMatrix psd_part(const CMatrix& m) {
  const EigResult e = hermitian_eig(m, 1e-9);
  CMatrix r(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double lam = std::max(0.0, e.values[static_cast<std::size_t>(k)]);
        s += e.vectors.at(i, k) * lam * std::conj(e.vectors.at(j, k));
      }
      r.at(i, j) = s;
    }
  // keep exactly symmetric real
  for (int i = 0; i < 3; ++i) {
    r.at(i, i) = cplx(r.at(i, i).real(), 0.0);
    for (int j = i + 1; j < 3; ++j) {
      const double v = 0.5 * (r.at(i, j).real() + r.at(j, i).real());
      r.at(i, j) = v;
      r.at(j, i) = v;
    }
  }
  return r;
}

}  // namespace

EllipProjection elliptope_project(const Vec3& v) {
  // Alternating projections between the PSD cone and the unit-diagonal
  // space. The correction term is carried on the cone step only, the
  // diagonal restriction being affine; the limit is the Frobenius-nearest
  // correlation matrix, which agrees with the Euclidean-nearest off-diagonal
  // triple.
  const int cap = 10000;
  const double target = 1e-12;

  CMatrix y = completed(v);
  CMatrix ds = CMatrix::zero(3);
  Vec3 prev = v;
  EllipProjection out;
  out.iterations = 0;
  out.converged = false;
  out.residual = 0.0;
  for (int it = 0; it < cap; ++it) {
    CMatrix r = y;
    r -= ds;
    const CMatrix x = psd_part(r);
    ds = x;
    ds -= r;
    y = x;
    for (int i = 0; i < 3; ++i) y.at(i, i) = 1.0;
    const Vec3 q = off_diagonal(y);
    out.iterations = it + 1;
    out.residual = max_abs(q - prev);
    prev = q;
    if (out.residual <= target && it > 0) {
      out.converged = true;
      break;
    }
  }
  out.point = prev;
  return out;
}

namespace {

double bca_objective(const Vec3& c, const UnitVecTriple& t) {
  return c[0] * dot(t.a, t.b) + c[1] * dot(t.a, t.c) + c[2] * dot(t.b, t.c);
}

}  // namespace

EllipSupport elliptope_support(const Vec3& c, double tol) {
  EllipSupport best{-4.0 * (std::fabs(c[0]) + std::fabs(c[1]) + std::fabs(c[2]) + 1.0), {1.0, 1.0, 1.0}};
  if (c[0] == 0.0 && c[1] == 0.0 && c[2] == 0.0) return {0.0, {0.0, 0.0, 0.0}};

  // Starts: the four rank-1 vertex patterns, one orthogonal triple, and five
  // fixed pseudo-random triples. Block-coordinate ascent on each.
  std::array<UnitVecTriple, 10> starts;
  const Vec3 e0 = unit_axis(0), e1 = unit_axis(1), e2 = unit_axis(2);
  starts[0] = {e0, e0, e0};
  starts[1] = {e0, e0, -e0};
  starts[2] = {e0, -e0, e0};
  starts[3] = {e0, -e0, -e0};
  starts[4] = {e0, e1, e2};
  CounterRng rng(0x5eedf00dULL);
  for (int k = 5; k < 10; ++k) {
    auto rand_unit = [&rng]() {
      Vec3 u{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
      return normalized(u, unit_axis(0));
    };
    starts[static_cast<std::size_t>(k)] = {rand_unit(), rand_unit(), rand_unit()};
  }

  for (const auto& start : starts) {
    UnitVecTriple t = start;
    double value = bca_objective(c, t);
    for (int it = 0; it < 2000; ++it) {
      t.a = normalized(c[0] * t.b + c[1] * t.c, t.a);
      t.b = normalized(c[0] * t.a + c[2] * t.c, t.b);
      t.c = normalized(c[1] * t.a + c[2] * t.b, t.c);
      const double next = bca_objective(c, t);
      if (next - value <= tol && it > 2) break;
      value = next;
    }
    const double final_value = bca_objective(c, t);
    if (final_value > best.value) {
      best.value = final_value;
      best.argmax = {dot(t.a, t.b), dot(t.a, t.c), dot(t.b, t.c)};
    }
  }
  return best;
}

UnitVecTriple elliptope_factor(const Vec3& q) {
  const EigResult e = hermitian_eig(completed(q), 1e-9);
  UnitVecTriple t;
  Vec3* rows[3] = {&t.a, &t.b, &t.c};
  for (int i = 0; i < 3; ++i) {
    Vec3 row;
    for (int k = 0; k < 3; ++k) {
      const double lam = std::max(0.0, e.values[static_cast<std::size_t>(k)]);
      row[k] = std::sqrt(lam) * e.vectors.at(i, k).real();
    }
    // Row norms equal the unit diagonal up to clipped eigenvalue dust.
    *rows[i] = normalized(row, unit_axis(i));
  }
  return t;
}

std::array<Projection, 3> realize_s2(const UnitVecTriple& t) {
  const Vec3* dirs[3] = {&t.a, &t.b, &t.c};
  std::array<Projection, 3> out = {Projection::from_matrix(CMatrix::zero(2)),
                                   Projection::from_matrix(CMatrix::zero(2)),
                                   Projection::from_matrix(CMatrix::zero(2))};
  for (int i = 0; i < 3; ++i) {
    const Vec3& u = *dirs[i];
    const double n = norm(u);
    if (std::fabs(n - 1.0) > 1e-12)
      throw std::invalid_argument("realize_s2: direction is not a unit vector");
    // P = (u1 X + u2 Y + u3 Z + I)/2 is the rank-1 projection onto the
    // +1 eigenspace of the direction's Hermitian unitary.
    CMatrix p(2);
    p.at(0, 0) = 0.5 * (1.0 + u[2]);
    p.at(1, 1) = 0.5 * (1.0 - u[2]);
    p.at(0, 1) = 0.5 * cplx(u[0], -u[1]);
    p.at(1, 0) = 0.5 * cplx(u[0], u[1]);
    out[static_cast<std::size_t>(i)] = Projection::from_matrix(p);
  }
  return out;
}

std::array<Projection, 3> realize_s2(const Vec3& q, double tol) {
  const EllipMembership m = elliptope_membership(q, tol);
  if (!m.member) {
    std::ostringstream msg;
    msg << "realize_s2: point is outside the elliptope (min eigenvalue " << m.min_eig << ")";
    throw std::invalid_argument(msg.str());
  }
  return realize_s2(elliptope_factor(q));
}

Vec3 sample_s2(CounterRng& rng) {
  auto rand_unit = [&rng]() {
    Vec3 u{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
    return normalized(u, unit_axis(0));
  };
  const Vec3 a = rand_unit(), b = rand_unit(), c = rand_unit();
  return s2_from_elliptope({dot(a, b), dot(a, c), dot(b, c)});
}

Vec3 sample_s2(std::uint64_t seed) {
  CounterRng rng(seed);
  return sample_s2(rng);
}

}  // namespace sqc
