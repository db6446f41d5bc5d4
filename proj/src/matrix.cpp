#include "pptkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pptkit {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_)
    throw std::invalid_argument("ComplexMatrix: entry count does not match dim*dim");
  if (!all_finite())
    throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  const std::size_t n = a.dim_;
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (!mat_.all_finite()) throw std::invalid_argument("HermitianMatrix: non-finite entry");
  const std::size_t n = mat_.dim();
  double asym = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      asym = std::max(asym, std::abs(mat_(r, c) - std::conj(mat_(c, r))));
  const double scale = mat_.max_abs_entry();
  if (asym > kRepairThreshold * scale)
    throw std::invalid_argument("HermitianMatrix: matrix is not Hermitian");
  for (std::size_t r = 0; r < n; ++r) {
    mat_(r, r) = Complex(mat_(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (mat_(r, c) + std::conj(mat_(c, r)));
      mat_(r, c) = avg;
      mat_(c, r) = std::conj(avg);
    }
  }
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  ComplexMatrix s(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) s(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  return HermitianMatrix(std::move(s));
}

HermitianMatrix principal_submatrix(const HermitianMatrix& h, std::span<const std::size_t> indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= h.dim())
      throw std::invalid_argument("principal_submatrix: index out of range");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw std::invalid_argument("principal_submatrix: indices must be strictly increasing");
  }
  ComplexMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) out(r, c) = h(indices[r], indices[c]);
  return HermitianMatrix(std::move(out));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

}  // namespace pptkit
