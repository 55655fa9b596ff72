#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sqc/matrix.hpp"
#include "sqc/rng.hpp"
#include "sqc/vec3.hpp"

namespace sqc {

/// Orthogonal projection (P = P^dagger = P^2) with its rank.
///
/// Construction validates: hermiticity defect <= 1e-12, idempotency defect
/// <= 1e-10 (entrywise), and |Tr(P) - round(Tr(P))| <= 1e-9.
class Projection {
 public:
  static Projection from_matrix(const CMatrix& m);

  const CMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  int rank() const { return rank_; }

  /// Complementary projection I - P.
  Projection complement() const;

  static constexpr double kHermTol = 1e-12;
  static constexpr double kIdemTol = 1e-10;
  static constexpr double kRankTol = 1e-9;

 private:
  Projection(CMatrix m, int rank) : m_(std::move(m)), rank_(rank) {}
  CMatrix m_;
  int rank_ = 0;
};

/// Projection valued measure: projections on one space summing to the identity.
struct Pvm {
  std::vector<Projection> elements;

  /// Validates the shared dimension and that the sum is I within 1e-10.
  static Pvm from_elements(std::vector<Projection> elements);
};

/// Haar-distributed unitary (Ginibre ensemble + Gram-Schmidt with positive
/// normalization, which keeps the distribution exactly Haar). Deterministic
/// for a fixed seed.
CMatrix random_unitary(int dim, std::uint64_t seed);
CMatrix haar_unitary(int dim, CounterRng& rng);

/// Haar-random projection of the given rank: U diag(1^rank, 0^(dim-rank)) U^dagger.
Projection random_projection(int dim, int rank, std::uint64_t seed);
Projection haar_projection(int dim, int rank, CounterRng& rng);

/// (tr_d(P1 P2), tr_d(P1 P3), tr_d(P2 P3)) with the normalized trace tr_d = Tr/d.
/// Imaginary residues beyond 1e-12 are rejected; results are clamped to real.
Vec3 trace_triple(const Projection& p1, const Projection& p2, const Projection& p3);

/// Normalized trace of a product of two projections; same conventions.
double pair_trace(const Projection& p, const Projection& q);

}  // namespace sqc
