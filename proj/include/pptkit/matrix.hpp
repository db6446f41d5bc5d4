#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pptkit {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. dim == 0 denotes the empty
/// matrix (used for degenerate family blocks); it has no entries.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  Complex trace() const;
  double max_abs_entry() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest |a(i,j) - b(i,j)|; matrices must have equal dims.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian matrix enforced at construction. Asymmetry up to
/// 1e-12 * max|entry| is silently repaired by averaging with the
/// adjoint (tolerates I/O round-trip noise); anything larger throws.
class HermitianMatrix {
 public:
  static constexpr double kRepairThreshold = 1e-12;

  HermitianMatrix() = default;
  explicit HermitianMatrix(ComplexMatrix m);

  /// Zero matrix of the given dimension.
  static HermitianMatrix zero(std::size_t dim) { return HermitianMatrix(ComplexMatrix(dim)); }

  /// (m + m^dagger) / 2, accepted regardless of how asymmetric m is.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  std::size_t dim() const { return mat_.dim(); }
  bool empty() const { return mat_.empty(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

  double trace() const { return mat_.trace().real(); }

 private:
  ComplexMatrix mat_;
};

/// Submatrix on a common row/column index set. Indices must be strictly
/// increasing and in range; Hermiticity is inherited.
HermitianMatrix principal_submatrix(const HermitianMatrix& h, std::span<const std::size_t> indices);

/// Kronecker product, (A otimes B)(i*dimB+k, j*dimB+l) = A(i,j) * B(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace pptkit
