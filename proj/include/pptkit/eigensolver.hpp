#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pptkit/matrix.hpp"

namespace pptkit {

/// Default tolerance for positivity / PPT verdicts. One value across the
/// library so validation, negativity and classification agree.
inline constexpr double kDefaultTolerance = 1e-10;

/// Thrown when the Jacobi sweep cap is reached before the off-diagonal
/// norm drops below the convergence threshold.
class EigensolveError : public std::runtime_error {
 public:
  EigensolveError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns, ordered to match values
};

/// Eigenvalues of a complex Hermitian matrix, ascending. Cyclic Jacobi
/// with unitary plane rotations; converges when the off-diagonal
/// Frobenius norm falls below 1e-12 * ||H||_F, capped at 100 sweeps.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h);

/// Eigenvalues and eigenvectors. Satisfies ||H V - V diag(values)||_F
/// <= 1e-10 * ||H||_F.
EigenSystem hermitian_eigensystem(const HermitianMatrix& h);

struct PsdResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

/// Positive-semidefiniteness test: true iff the minimum eigenvalue is
/// >= -tol * max(1, trace H). The empty matrix is PSD.
PsdResult is_psd(const HermitianMatrix& h, double tol = kDefaultTolerance);

}  // namespace pptkit
