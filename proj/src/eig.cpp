#include "sqc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sqc {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const CMatrix& m, double herm_tol) {
  const double defect = m.hermiticity_defect();
  if (defect > herm_tol) {
    std::ostringstream msg;
    msg << "hermitian_eig: input is not Hermitian (max asymmetry " << defect
        << " exceeds tolerance " << herm_tol << ")";
    throw std::invalid_argument(msg.str());
  }

  const int n = m.dim();
  CMatrix a = m;
  // Exact symmetrization so rotations see a clean Hermitian matrix.
  for (int i = 0; i < n; ++i) {
    a.at(i, i) = cplx(a.at(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
      a.at(i, j) = v;
      a.at(j, i) = std::conj(v);
    }
  }
  CMatrix vv = CMatrix::identity(n);

  const double scale = std::max(1.0, a.frobenius());
  const double target = 1e-15 * scale;
  const int max_sweeps = 80;

  for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx w = a.at(p, q);
        const double rho = std::abs(w);
        if (rho <= 1e-300) continue;
        const cplx phase = w / rho;
        const double alpha = a.at(p, p).real();
        const double beta = a.at(q, q).real();
        // Annihilate the (p,q) entry: need rho*(c^2-s^2) + (beta-alpha)*c*s = 0.
        // The tangent is the small root of t^2 - 2*theta*t - 1 = 0, written in
        // the cancellation-free form.
        const double theta = (beta - alpha) / (2.0 * rho);
        double t;
        if (theta >= 0.0) {
          t = -1.0 / (theta + std::sqrt(theta * theta + 1.0));
        } else {
          t = 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Rotation G: G_pp = c, G_pq = -s*phase, G_qp = s*conj(phase), G_qq = c.
        // A <- G^dagger A G, applied as a row pass then a column pass.
        for (int j = 0; j < n; ++j) {
          const cplx apj = a.at(p, j);
          const cplx aqj = a.at(q, j);
          a.at(p, j) = c * apj + s * phase * aqj;
          a.at(q, j) = -s * std::conj(phase) * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const cplx aip = a.at(i, p);
          const cplx aiq = a.at(i, q);
          a.at(i, p) = c * aip + s * std::conj(phase) * aiq;
          a.at(i, q) = -s * phase * aip + c * aiq;
          const cplx vip = vv.at(i, p);
          const cplx viq = vv.at(i, q);
          vv.at(i, p) = c * vip + s * std::conj(phase) * viq;
          vv.at(i, q) = -s * phase * vip + c * viq;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = cplx(a.at(p, p).real(), 0.0);
        a.at(q, q) = cplx(a.at(q, q).real(), 0.0);
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a.at(i, i).real() > a.at(j, j).real(); });

  EigResult res;
  res.values.resize(static_cast<std::size_t>(n));
  res.vectors = CMatrix(n);
  for (int k = 0; k < n; ++k) {
    res.values[static_cast<std::size_t>(k)] = a.at(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    for (int i = 0; i < n; ++i) res.vectors.at(i, k) = vv.at(i, order[static_cast<std::size_t>(k)]);
  }
  return res;
}

CMatrix eig_reconstruct(const EigResult& e) {
  const int n = e.vectors.dim();
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k)
        s += e.vectors.at(i, k) * e.values[static_cast<std::size_t>(k)] * std::conj(e.vectors.at(j, k));
      r.at(i, j) = s;
    }
  return r;
}

}  // namespace sqc
