#include "pptkit/partial_transpose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pptkit {

ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dA, std::size_t dB) {
  if (rho.dim() != dA * dB)
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t j = 0; j < dA; ++j)
      for (std::size_t r = 0; r < dB; ++r)
        for (std::size_t c = 0; c < dB; ++c)
          out(i * dB + r, j * dB + c) = rho(i * dB + c, j * dB + r);
  return out;
}

std::vector<double> BlockSpectrum::flattened_sorted() const {
  std::vector<double> all = x_eigs;
  for (const auto& e : m_eigs) all.insert(all.end(), e.begin(), e.end());
  for (const auto& e : n_eigs) all.insert(all.end(), e.begin(), e.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<double> QubitQuditSpectrum::flattened_sorted() const {
  std::vector<double> all = x_eigs;
  all.insert(all.end(), a_eigs.begin(), a_eigs.end());
  all.insert(all.end(), b_eigs.begin(), b_eigs.end());
  std::sort(all.begin(), all.end());
  return all;
}

BlockSpectrum pt_block_spectrum(const FamilyParams& p) {
  check_dims(p);
  BlockSpectrum spec;
  spec.x_eigs = hermitian_eigenvalues(p.X);
  for (std::size_t k = 0; k < p.dA; ++k) {
    spec.m_eigs.push_back(hermitian_eigenvalues(p.M[k]));
    spec.n_eigs.push_back(hermitian_eigenvalues(p.N[k]));
  }
  return spec;
}

QubitQuditSpectrum pt_block_spectrum(const QubitQuditParams& q) {
  check_dims(q);
  ComplexMatrix x(2);
  x(0, 0) = q.x00;
  x(1, 1) = q.x11;
  x(0, 1) = q.x01;
  x(1, 0) = std::conj(q.x01);
  QubitQuditSpectrum spec;
  spec.x_eigs = hermitian_eigenvalues(HermitianMatrix(std::move(x)));
  spec.a_eigs = hermitian_eigenvalues(q.A);
  spec.b_eigs = hermitian_eigenvalues(q.B);
  return spec;
}

NegativityResult negativity(std::span<const double> eigenvalues, double tol) {
  NegativityResult res;
  for (double e : eigenvalues)
    if (e < -tol) res.negative_eigenvalues.push_back(e);
  std::sort(res.negative_eigenvalues.begin(), res.negative_eigenvalues.end());
  for (double e : res.negative_eigenvalues) res.negativity += -e;
  res.is_ppt = res.negative_eigenvalues.empty();
  return res;
}

NegativityResult negativity(const BlockSpectrum& spectrum, double tol) {
  return negativity(std::span<const double>(spectrum.x_eigs), tol);
}

NegativityResult negativity(const QubitQuditSpectrum& spectrum, double tol) {
  return negativity(std::span<const double>(spectrum.x_eigs), tol);
}

double two_qubit_negativity(double x00, double x11, Complex x01) {
  if (x00 < 0.0 || x11 < 0.0)
    throw std::invalid_argument("two_qubit_negativity: x00 and x11 must be >= 0");
  const double root = std::sqrt((x00 - x11) * (x00 - x11) + 4.0 * std::norm(x01));
  return 0.5 * std::max(0.0, root - (x00 + x11));
}

namespace {

DirectSumCheck compare_sorted(std::vector<double> fast, std::vector<double> dense, double tol) {
  DirectSumCheck check;
  if (fast.size() != dense.size()) {
    check.ok = false;
    check.max_deviation = std::numeric_limits<double>::infinity();
    return check;
  }
  for (std::size_t i = 0; i < fast.size(); ++i)
    check.max_deviation = std::max(check.max_deviation, std::abs(fast[i] - dense[i]));
  check.ok = check.max_deviation <= tol;
  return check;
}

}  // namespace

DirectSumCheck verify_direct_sum(const FamilyParams& p, double tol) {
  std::vector<double> fast = pt_block_spectrum(p).flattened_sorted();
  const ComplexMatrix pt = partial_transpose(assemble(p), p.dA, p.dB);
  std::vector<double> dense = hermitian_eigenvalues(HermitianMatrix(pt));
  return compare_sorted(std::move(fast), std::move(dense), tol);
}

DirectSumCheck verify_direct_sum(const QubitQuditParams& q, double tol) {
  std::vector<double> fast = pt_block_spectrum(q).flattened_sorted();
  const ComplexMatrix pt = partial_transpose(assemble_qubit_qudit(q), 2, q.dB);
  std::vector<double> dense = hermitian_eigenvalues(HermitianMatrix(pt));
  return compare_sorted(std::move(fast), std::move(dense), tol);
}

}  // namespace pptkit
