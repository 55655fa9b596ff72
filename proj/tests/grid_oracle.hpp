#pragma once

// Brute-force reference computations used only by tests. Everything here is
// deliberately independent of the library's optimization paths: plain grids
// over the Sylvester inequality.

#include <cmath>

#include "sqc/vec3.hpp"

namespace sqc::testing {

inline bool grid_member(const Vec3& q) {
  if (std::fabs(q[0]) > 1.0 || std::fabs(q[1]) > 1.0 || std::fabs(q[2]) > 1.0) return false;
  const double det = 1.0 + 2.0 * q[0] * q[1] * q[2] - q[0] * q[0] - q[1] * q[1] - q[2] * q[2];
  return det >= 0.0;
}

/// Nearest member of a coarse grid (resolution steps per axis in [-1,1]).
inline Vec3 grid_nearest(const Vec3& v, int resolution = 200) {
  Vec3 best{0.0, 0.0, 0.0};
  double best_d2 = 1e300;
  const double h = 2.0 / resolution;
  for (int i = 0; i <= resolution; ++i)
    for (int j = 0; j <= resolution; ++j)
      for (int k = 0; k <= resolution; ++k) {
        const Vec3 q{-1.0 + i * h, -1.0 + j * h, -1.0 + k * h};
        if (!grid_member(q)) continue;
        const Vec3 d = q - v;
        const double d2 = dot(d, d);
        if (d2 < best_d2) {
          best_d2 = d2;
          best = q;
        }
      }
  return best;
}

/// Grid lower bound for the support function max dot(c, q).
inline double grid_support(const Vec3& c, int resolution = 200) {
  double best = -1e300;
  const double h = 2.0 / resolution;
  for (int i = 0; i <= resolution; ++i)
    for (int j = 0; j <= resolution; ++j)
      for (int k = 0; k <= resolution; ++k) {
        const Vec3 q{-1.0 + i * h, -1.0 + j * h, -1.0 + k * h};
        if (!grid_member(q)) continue;
        best = std::max(best, dot(c, q));
      }
  return best;
}

}  // namespace sqc::testing
