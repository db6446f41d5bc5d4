#pragma once

#include <string>
#include <vector>

#include "pptkit/partial_transpose.hpp"

namespace pptkit {

/// True iff every off-diagonal dB x dB sub-block of rho is zero within
/// tol entrywise, i.e. rho is block diagonal in the SCB.
bool is_simply_separable(const ComplexMatrix& rho, std::size_t dA, std::size_t dB,
                         double tol = kDefaultTolerance);

/// Explicit separable decomposition of a simply separable state:
/// sum_i (tr A_i) |i><i| (x) A_i / tr A_i, blocks with negligible trace
/// dropped.
struct SeparableDecomposition {
  struct Term {
    double weight = 0.0;   // tr A_i
    ComplexMatrix alice;   // |i><i|, dA x dA
    ComplexMatrix bob;     // A_i / tr A_i, dB x dB
  };
  std::vector<Term> terms;

  /// sum_i weight_i * alice_i (x) bob_i.
  ComplexMatrix reconstruct() const;
};

/// Throws std::invalid_argument when rho is not simply separable
/// within tol.
SeparableDecomposition decompose_simply_separable(const ComplexMatrix& rho, std::size_t dA,
                                                  std::size_t dB,
                                                  double tol = kDefaultTolerance);

/// Structural shape of the X matrix. Checked in the listed order, so a
/// diagonal matrix never reads as one of the 2x2-block shapes.
enum class XPattern {
  Null,         // all entries <= tol
  Diagonal,     // off-diagonal entries <= tol
  Antidiag2x2,  // consecutive 2x2 blocks [[0, x], [x*, 0]] (dA even)
  Lower2x2,     // consecutive 2x2 blocks [[0, x], [x*, y]] (dA even)
  General,
};

XPattern x_pattern(const HermitianMatrix& x, double tol = kDefaultTolerance);

enum class Verdict { NptEntangled, PptSeparable, PptUndecided };

enum class Reason {
  None,
  XNullForced,            // the X block vanishes; the state is block diagonal
  XDiagonal,              // positivity of the 2x2 shapes forces the couplings to zero
  SimplySeparable,        // X diagonal, so the state is block diagonal
  ProductSubspaceDimLe6,  // the X support sits in an invariant 2x2 or 2x3 product subspace
  Werner,                 // parameters match a Werner member
};

struct Classification {
  bool is_ppt = false;
  Verdict verdict = Verdict::PptUndecided;
  Reason reason = Reason::None;
  double negativity = 0.0;
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

/// PPT verdict via the block spectrum, then the subfamily rules under
/// which positivity of the partial transpose implies separability.
/// PptUndecided is the honest fallback.
Classification classify(const FamilyParams& p, double tol = kDefaultTolerance);
Classification classify(const QubitQuditParams& q, double tol = kDefaultTolerance);

/// Dense fallback: negativity from the dense PT spectrum; separability
/// only asserted for block-diagonal inputs, pattern-matching family
/// members, or total dimension <= 6.
Classification classify_dense(const ComplexMatrix& rho, std::size_t dA, std::size_t dB,
                              double tol = kDefaultTolerance);

/// Partition of the SCB indices into the X axis {|kk>} and the per-k
/// supports of M[k] and N[k]; empty groups omitted. Order: X, then for
/// each k the M group followed by the N group.
struct BlockPartition {
  std::vector<std::vector<std::size_t>> groups;
};

BlockPartition subspace_partition(std::size_t dA, std::size_t dB);

}  // namespace pptkit
