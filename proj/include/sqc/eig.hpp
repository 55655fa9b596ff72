#pragma once

#include <vector>

#include "sqc/matrix.hpp"

namespace sqc {

struct EigResult {
  std::vector<double> values;  // descending
  CMatrix vectors;             // orthonormal columns, same order as values
};

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// The fixed sweep order makes results bit-stable across platforms.
///
/// Throws std::invalid_argument (reporting the max asymmetry) if the input
/// deviates from self-adjointness by more than `herm_tol`.
EigResult hermitian_eig(const CMatrix& m, double herm_tol = 1e-12);

/// Reassemble V diag(values) V^dagger; for testing reconstruction residuals.
CMatrix eig_reconstruct(const EigResult& e);

}  // namespace sqc
