#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace sqc {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for small operator algebra
/// work (dimensions up to a few dozen); everything is by value.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 0) throw std::invalid_argument("CMatrix: negative dimension");
  }

  static CMatrix identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }
  static CMatrix zero(int dim) { return CMatrix(dim); }

  int dim() const { return dim_; }

  cplx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const cplx& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

  CMatrix adjoint() const {
    CMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  /// Largest entrywise deviation from self-adjointness.
  double hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j)
        m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  CMatrix& operator+=(const CMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  CMatrix& operator*=(cplx s) {
    for (auto& z : a_) z *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    a.check_same(b);
    const int n = a.dim_;
    CMatrix r(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const cplx aik = a.at(i, k);
        if (aik == cplx(0.0)) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    }
    return r;
  }

  static CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.dim_ + b.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.dim_; ++i)
      for (int j = 0; j < b.dim_; ++j) r.at(a.dim_ + i, a.dim_ + j) = b.at(i, j);
    return r;
  }

  /// Principal submatrix starting at `offset` with the given size.
  CMatrix block(int offset, int size) const {
    if (offset < 0 || size < 0 || offset + size > dim_)
      throw std::invalid_argument("CMatrix::block: out of range");
    CMatrix r(size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) r.at(i, j) = at(offset + i, offset + j);
    return r;
  }

 private:
  void check_same(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
  }

  int dim_ = 0;
  std::vector<cplx> a_;
};

/// Tr(A B) without forming the product.
inline cplx trace_product(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace_product: dimension mismatch");
  cplx t = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k) t += a.at(i, k) * b.at(k, i);
  return t;
}

}  // namespace sqc
