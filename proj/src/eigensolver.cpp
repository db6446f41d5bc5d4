#include "pptkit/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pptkit {

namespace {

constexpr double kConvergence = 1e-12;  // relative off-diagonal Frobenius norm
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One unitary plane rotation in the (p,q) plane annihilating a(p,q).
// For the Hermitian 2x2 block [[alpha, beta], [conj(beta), delta]] the
// rotation is the real Jacobi rotation on [[alpha, |beta|], [|beta|, delta]]
// composed with the phase of beta.
void rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const Complex beta = a(p, q);
  const double babs = std::abs(beta);
  if (babs == 0.0) return;
  const Complex w = beta / babs;  // phase
  const double alpha = a(p, p).real();
  const double delta = a(q, q).real();

  const double theta = 0.5 * (delta - alpha) / babs;
  double t;
  if (std::abs(theta) > 1e154) {
    t = 0.5 / theta;  // avoid overflow in theta*theta
  } else {
    t = ((theta >= 0.0) ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.dim();
  a(p, p) = alpha - t * babs;
  a(q, q) = delta + t * babs;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const Complex arp = a(r, p);
    const Complex arq = a(r, q);
    a(r, p) = arp * c - arq * s * std::conj(w);
    a(r, q) = arp * s * w + arq * c;
    a(p, r) = std::conj(a(r, p));
    a(q, r) = std::conj(a(r, q));
  }
  if (v) {
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vrp = (*v)(r, p);
      const Complex vrq = (*v)(r, q);
      (*v)(r, p) = vrp * c - vrq * s * std::conj(w);
      (*v)(r, q) = vrp * s * w + vrq * c;
    }
  }
}

EigenSystem jacobi(const HermitianMatrix& h, bool want_vectors) {
  const std::size_t n = h.dim();
  EigenSystem sys;
  if (n == 0) return sys;

  ComplexMatrix a = h.matrix();
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
  const double norm = a.frobenius_norm();
  const double threshold = kConvergence * norm;

  bool converged = (off_diagonal_norm(a) <= threshold);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, want_vectors ? &v : nullptr, p, q);
    converged = (off_diagonal_norm(a) <= threshold);
  }
  if (!converged) {
    const double residual = off_diagonal_norm(a);
    throw EigensolveError("hermitian_eigenvalues: no convergence after 100 sweeps, off-diagonal norm " +
                              std::to_string(residual) + " (threshold " + std::to_string(threshold) + ")",
                          residual);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  sys.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) sys.values[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    sys.vectors = ComplexMatrix(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) sys.vectors(r, c) = v(r, order[c]);
  }
  return sys;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h) {
  return jacobi(h, false).values;
}

EigenSystem hermitian_eigensystem(const HermitianMatrix& h) { return jacobi(h, true); }

PsdResult is_psd(const HermitianMatrix& h, double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_psd: tol must be >= 0");
  if (h.empty()) return {true, 0.0};
  const std::vector<double> eigs = hermitian_eigenvalues(h);
  const double min_eig = eigs.front();
  const double bound = tol * std::max(1.0, h.trace());
  return {min_eig >= -bound, min_eig};
}

}  // namespace pptkit
