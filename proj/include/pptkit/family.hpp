#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pptkit/eigensolver.hpp"
#include "pptkit/matrix.hpp"

namespace pptkit {

/// Generating data of a family member on a dA x dB bipartite system
/// (dA <= dB). X couples the |kk> axis; M[k] and N[k] are the lower and
/// upper diagonal sub-blocks of the k-th diagonal block, of sizes k and
/// dB-1-k. M[0] is always empty; N[dA-1] is empty only when dA == dB.
struct FamilyParams {
  std::size_t dA = 0;
  std::size_t dB = 0;
  HermitianMatrix X;
  std::vector<HermitianMatrix> M;
  std::vector<HermitianMatrix> N;
};

/// Qubit-qudit family on 2 x dB. The X coupling sits between |0,dB-1>
/// and |1,0>; A acts on Bob indices 1..dB-1 of the first block, B on
/// Bob indices 0..dB-2 of the second.
struct QubitQuditParams {
  std::size_t dB = 0;
  double x00 = 0.0;
  double x11 = 0.0;
  Complex x01;
  HermitianMatrix A;
  HermitianMatrix B;
};

struct ValidationReport {
  bool hermitian = false;
  double trace = 0.0;
  bool trace_ok = false;
  double min_eigenvalue = 0.0;
  bool psd = false;
  bool pattern_ok = true;  // sparsity pattern, only meaningful for structured inputs
  bool overall = false;    // hermitian && trace_ok && psd
};

/// Throws std::invalid_argument unless the block dimensions are
/// consistent with (dA, dB).
void check_dims(const FamilyParams& p);
void check_dims(const QubitQuditParams& q);

/// Dense dA*dB matrix of the family member in the standard computational
/// basis. Hermitian by construction.
ComplexMatrix assemble(const FamilyParams& p);

/// Dense 2*dB matrix of the qubit-qudit member.
ComplexMatrix assemble_qubit_qudit(const QubitQuditParams& q);

/// Largest |entry| outside the family sparsity pattern (0 when the
/// matrix fits the pattern exactly).
double family_pattern_max_violation(const ComplexMatrix& rho, std::size_t dA, std::size_t dB);
double qubit_qudit_pattern_max_violation(const ComplexMatrix& rho, std::size_t dB);

/// State-validity report: hermiticity, unit trace, positive
/// semidefiniteness. Failures are carried in the report, not thrown.
ValidationReport validate(const ComplexMatrix& rho, double tol = kDefaultTolerance);
ValidationReport validate(const FamilyParams& p, double tol = kDefaultTolerance);
ValidationReport validate(const QubitQuditParams& q, double tol = kDefaultTolerance);

/// Reads FamilyParams off a dense matrix when it fits the sparsity
/// pattern within tol; nullopt otherwise.
std::optional<FamilyParams> extract_family(const ComplexMatrix& rho, std::size_t dA,
                                           std::size_t dB, double tol = kDefaultTolerance);

/// Exact FamilyParams view of a qubit-qubit member (dB == 2 only).
std::optional<FamilyParams> qubit_qudit_to_family(const QubitQuditParams& q);

/// Deterministic valid family member. Blocks are Gram matrices, the X
/// diagonal is nonnegative, off-diagonal couplings are Gaussian scaled
/// by bias in [0,1] and then uniformly shrunk by bisection (at most 60
/// steps) until the assembled matrix is PSD; the result is
/// trace-normalized. bias == 0 yields a diagonal X.
FamilyParams sample_random(std::size_t dA, std::size_t dB, std::uint64_t seed,
                           double entanglement_bias);

/// Qubit-qudit analogue of sample_random.
QubitQuditParams sample_qubit_qudit(std::size_t dB, std::uint64_t seed,
                                    double entanglement_bias);

}  // namespace pptkit
