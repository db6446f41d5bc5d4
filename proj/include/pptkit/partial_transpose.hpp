#pragma once

#include <span>
#include <vector>

#include "pptkit/family.hpp"

namespace pptkit {

/// Partial transposition on Bob's subsystem: each dB x dB sub-block of
/// the SCB representation is transposed in place. An exact involution.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dA, std::size_t dB);

/// Eigenvalues of the partially transposed family member grouped by
/// originating block: the spectrum of X plus, per k, the spectra of
/// M[k] and N[k] (transposition preserves each block's spectrum).
struct BlockSpectrum {
  std::vector<double> x_eigs;                // ascending
  std::vector<std::vector<double>> m_eigs;   // per k, ascending
  std::vector<std::vector<double>> n_eigs;   // per k, ascending

  /// All dA*dB eigenvalues, sorted ascending.
  std::vector<double> flattened_sorted() const;
};

BlockSpectrum pt_block_spectrum(const FamilyParams& p);

/// Qubit-qudit analogue: X eigenvalues plus the spectra of A and B.
struct QubitQuditSpectrum {
  std::vector<double> x_eigs;
  std::vector<double> a_eigs;
  std::vector<double> b_eigs;

  std::vector<double> flattened_sorted() const;
};

QubitQuditSpectrum pt_block_spectrum(const QubitQuditParams& q);

struct NegativityResult {
  double negativity = 0.0;
  std::vector<double> negative_eigenvalues;  // ascending, all < -tol
  bool is_ppt = true;
};

/// Negativity as the absolute sum of eigenvalues below -tol.
NegativityResult negativity(std::span<const double> eigenvalues, double tol = kDefaultTolerance);

/// Fast path: only the X block can contribute negative eigenvalues.
NegativityResult negativity(const BlockSpectrum& spectrum, double tol = kDefaultTolerance);
NegativityResult negativity(const QubitQuditSpectrum& spectrum, double tol = kDefaultTolerance);

/// Closed form for the two-qubit member:
/// N = max{0, sqrt((x00-x11)^2 + 4|x01|^2) - (x00+x11)} / 2.
double two_qubit_negativity(double x00, double x11, Complex x01);

struct DirectSumCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

/// Cross-check of the block direct sum: sorted block-wise spectrum vs
/// sorted dense spectrum of the partial transpose, compared pairwise.
DirectSumCheck verify_direct_sum(const FamilyParams& p, double tol = 1e-9);
DirectSumCheck verify_direct_sum(const QubitQuditParams& q, double tol = 1e-9);

}  // namespace pptkit
