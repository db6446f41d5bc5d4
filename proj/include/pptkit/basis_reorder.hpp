#pragma once

#include <vector>

#include "pptkit/separability.hpp"

namespace pptkit {

/// Permutation of the SCB, map[new_position] = old_index. Acts on rows
/// and columns simultaneously (similarity), so spectra are preserved.
struct BasisPermutation {
  std::vector<std::size_t> map;

  bool is_bijection() const;
};

/// Ordering that makes the partial transpose of a family member
/// literally block diagonal: the X axis first, then for each k the M
/// group followed by the N group (empty groups skipped).
BasisPermutation subspace_permutation(std::size_t dA, std::size_t dB);
inline BasisPermutation subspace_permutation(const FamilyParams& p) {
  return subspace_permutation(p.dA, p.dB);
}

/// Sizes of the contiguous diagonal blocks produced by
/// subspace_permutation, in order.
std::vector<std::size_t> subspace_block_sizes(std::size_t dA, std::size_t dB);

/// result(r, c) = rho(map[r], map[c]).
ComplexMatrix apply_permutation(const ComplexMatrix& rho, const BasisPermutation& perm);

struct BlockDiagonalCheck {
  bool ok = false;
  double max_off_block = 0.0;
};

/// True iff every entry outside the contiguous diagonal blocks has
/// magnitude <= tol; always reports the largest such magnitude.
BlockDiagonalCheck verify_block_diagonal(const ComplexMatrix& m,
                                         std::span<const std::size_t> block_sizes,
                                         double tol = 0.0);

/// The diagonal blocks of m cut along block_sizes, in order.
std::vector<ComplexMatrix> extract_diagonal_blocks(const ComplexMatrix& m,
                                                   std::span<const std::size_t> block_sizes);

}  // namespace pptkit
