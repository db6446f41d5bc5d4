#include "pptkit/basis_reorder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pptkit {

bool BasisPermutation::is_bijection() const {
  std::vector<bool> seen(map.size(), false);
  for (std::size_t idx : map) {
    if (idx >= map.size() || seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

BasisPermutation subspace_permutation(std::size_t dA, std::size_t dB) {
  const BlockPartition part = subspace_partition(dA, dB);
  BasisPermutation perm;
  perm.map.reserve(dA * dB);
  for (const auto& group : part.groups)
    perm.map.insert(perm.map.end(), group.begin(), group.end());
  return perm;
}

std::vector<std::size_t> subspace_block_sizes(std::size_t dA, std::size_t dB) {
  const BlockPartition part = subspace_partition(dA, dB);
  std::vector<std::size_t> sizes;
  sizes.reserve(part.groups.size());
  for (const auto& group : part.groups) sizes.push_back(group.size());
  return sizes;
}

ComplexMatrix apply_permutation(const ComplexMatrix& rho, const BasisPermutation& perm) {
  if (perm.map.size() != rho.dim())
    throw std::invalid_argument("apply_permutation: dimension mismatch");
  if (!perm.is_bijection())
    throw std::invalid_argument("apply_permutation: map is not a bijection");
  ComplexMatrix out(rho.dim());
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) out(r, c) = rho(perm.map[r], perm.map[c]);
  return out;
}

BlockDiagonalCheck verify_block_diagonal(const ComplexMatrix& m,
                                         std::span<const std::size_t> block_sizes,
                                         double tol) {
  const std::size_t total = std::accumulate(block_sizes.begin(), block_sizes.end(),
                                            std::size_t{0});
  if (total != m.dim())
    throw std::invalid_argument("verify_block_diagonal: block sizes do not sum to dim");

  // block id per index
  std::vector<std::size_t> block_of(m.dim());
  std::size_t offset = 0, id = 0;
  for (std::size_t size : block_sizes) {
    for (std::size_t i = 0; i < size; ++i) block_of[offset + i] = id;
    offset += size;
    ++id;
  }

  BlockDiagonalCheck check;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (block_of[r] != block_of[c])
        check.max_off_block = std::max(check.max_off_block, std::abs(m(r, c)));
  check.ok = check.max_off_block <= tol;
  return check;
}

std::vector<ComplexMatrix> extract_diagonal_blocks(const ComplexMatrix& m,
                                                   std::span<const std::size_t> block_sizes) {
  const std::size_t total = std::accumulate(block_sizes.begin(), block_sizes.end(),
                                            std::size_t{0});
  if (total != m.dim())
    throw std::invalid_argument("extract_diagonal_blocks: block sizes do not sum to dim");
  std::vector<ComplexMatrix> blocks;
  std::size_t offset = 0;
  for (std::size_t size : block_sizes) {
    ComplexMatrix b(size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) b(r, c) = m(offset + r, offset + c);
    blocks.push_back(std::move(b));
    offset += size;
  }
  return blocks;
}

}  // namespace pptkit
