#include "sqc/projection.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sqc {

Projection Projection::from_matrix(const CMatrix& m) {
  const double herm = m.hermiticity_defect();
  if (herm > kHermTol) {
    std::ostringstream msg;
    msg << "Projection: not Hermitian (defect " << herm << ")";
    throw std::invalid_argument(msg.str());
  }
  const CMatrix sq = m * m;
  double idem = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      idem = std::max(idem, std::abs(sq.at(i, j) - m.at(i, j)));
  if (idem > kIdemTol) {
    std::ostringstream msg;
    msg << "Projection: not idempotent (defect " << idem << ")";
    throw std::invalid_argument(msg.str());
  }
  const double tr = m.trace().real();
  const int rank = static_cast<int>(std::lround(tr));
  if (std::fabs(tr - rank) > kRankTol || rank < 0 || rank > m.dim()) {
    std::ostringstream msg;
    msg << "Projection: trace " << tr << " is not a valid rank";
    throw std::invalid_argument(msg.str());
  }
  return Projection(m, rank);
}

Projection Projection::complement() const {
  CMatrix c = CMatrix::identity(dim());
  c -= m_;
  return Projection(c, dim() - rank_);
}

Pvm Pvm::from_elements(std::vector<Projection> elements) {
  if (elements.empty()) throw std::invalid_argument("Pvm: no elements");
  const int d = elements.front().dim();
  CMatrix sum(d);
  for (const auto& p : elements) {
    if (p.dim() != d) throw std::invalid_argument("Pvm: mixed dimensions");
    sum += p.matrix();
  }
  sum -= CMatrix::identity(d);
  if (sum.max_abs() > 1e-10) {
    std::ostringstream msg;
    msg << "Pvm: elements do not sum to the identity (defect " << sum.max_abs() << ")";
    throw std::invalid_argument(msg.str());
  }
  return Pvm{std::move(elements)};
}

CMatrix haar_unitary(int dim, CounterRng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
  CMatrix a(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a.at(i, j) = rng.next_complex_gaussian();

  // Modified Gram-Schmidt on columns, one re-orthogonalization pass. The
  // normalizations are positive reals, so Q inherits the Haar distribution
  // of the Ginibre factor.
  for (int j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (int i = 0; i < dim; ++i) proj += std::conj(a.at(i, k)) * a.at(i, j);
        for (int i = 0; i < dim; ++i) a.at(i, j) -= proj * a.at(i, k);
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < dim; ++i) nrm += std::norm(a.at(i, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-150) {
      // Practically unreachable for Gaussian input; keep the factorization sane.
      a.at(j, j) = 1.0;
      nrm = 1.0;
    }
    for (int i = 0; i < dim; ++i) a.at(i, j) *= 1.0 / nrm;
  }
  return a;
}

CMatrix random_unitary(int dim, std::uint64_t seed) {
  CounterRng rng(seed);
  return haar_unitary(dim, rng);
}

Projection haar_projection(int dim, int rank, CounterRng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_projection: dimension must be positive");
  if (rank < 0 || rank > dim) throw std::invalid_argument("haar_projection: rank out of range");
  if (rank == 0) return Projection::from_matrix(CMatrix::zero(dim));
  if (rank == dim) return Projection::from_matrix(CMatrix::identity(dim));
  const CMatrix u = haar_unitary(dim, rng);
  CMatrix p(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < rank; ++k) s += u.at(i, k) * std::conj(u.at(j, k));
      p.at(i, j) = s;
    }
  // Symmetrize away rounding noise.
  for (int i = 0; i < dim; ++i) {
    p.at(i, i) = cplx(p.at(i, i).real(), 0.0);
    for (int j = i + 1; j < dim; ++j) {
      const cplx v = 0.5 * (p.at(i, j) + std::conj(p.at(j, i)));
      p.at(i, j) = v;
      p.at(j, i) = std::conj(v);
    }
  }
  return Projection::from_matrix(p);
}

Projection random_projection(int dim, int rank, std::uint64_t seed) {
  CounterRng rng(seed);
  return haar_projection(dim, rank, rng);
}

namespace {

double real_pair_trace(const CMatrix& a, const CMatrix& b, int d) {
  const cplx t = trace_product(a, b);
  if (std::fabs(t.imag()) > 1e-12 * std::max(1.0, std::fabs(t.real())))
    throw std::invalid_argument("trace_triple: unexpected imaginary trace");
  return t.real() / d;
}

}  // namespace

double pair_trace(const Projection& p, const Projection& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("pair_trace: dimension mismatch");
  return real_pair_trace(p.matrix(), q.matrix(), p.dim());
}

Vec3 trace_triple(const Projection& p1, const Projection& p2, const Projection& p3) {
  if (p1.dim() != p2.dim() || p2.dim() != p3.dim())
    throw std::invalid_argument("trace_triple: dimension mismatch");
  const int d = p1.dim();
  return {real_pair_trace(p1.matrix(), p2.matrix(), d),
          real_pair_trace(p1.matrix(), p3.matrix(), d),
          real_pair_trace(p2.matrix(), p3.matrix(), d)};
}

}  // namespace sqc
