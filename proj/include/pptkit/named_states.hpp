#pragma once

#include <utility>

#include "pptkit/family.hpp"

namespace pptkit {

struct WernerSpec {
  std::size_t d = 2;
  double eps = 0.0;  // state is PSD iff eps in [-1/(d-1), 1/(d+1)]
};

struct IsotropicSpec {
  std::size_t d = 2;
  double eps = 0.0;  // state is PSD iff eps in [-1/(d^2-1), 1]
};

/// Flip (swap) operator on d x d: F |a>|b> = |b>|a|. F^2 = I, tr F = d.
ComplexMatrix flip_operator(std::size_t d);

/// Projector onto (1/sqrt d) sum_i |ii>. Idempotent, trace one. Its
/// partial transpose is flip_operator(d) / d, exactly.
ComplexMatrix max_entangled_projector(std::size_t d);

/// (1 - eps) I / d^2 + eps F / d. Validity is reported by validate, not
/// enforced here.
ComplexMatrix werner(const WernerSpec& spec);
inline ComplexMatrix werner(std::size_t d, double eps) { return werner(WernerSpec{d, eps}); }

/// (1 - eps) I / d^2 + eps P_+.
ComplexMatrix isotropic(const IsotropicSpec& spec);
inline ComplexMatrix isotropic(std::size_t d, double eps) {
  return isotropic(IsotropicSpec{d, eps});
}

/// PSD range of eps for each family, [lo, hi].
std::pair<double, double> werner_eps_range(std::size_t d);
std::pair<double, double> isotropic_eps_range(std::size_t d);

/// Conversion from the flip expectation value Phi = <F> to eps:
/// eps = -(1 - d Phi) / (d^2 - 1).
double phi_to_eps(double phi, std::size_t d);

/// Family parameters whose assembly reproduces werner(d, eps) entrywise.
/// Blocks are (1-eps)/d^2 times the identity and the off-diagonal
/// couplings are eps/d; the X diagonal is read off the assembled Werner
/// matrix directly rather than taken from a closed form. Throws on eps
/// outside the PSD range.
FamilyParams embed_werner(std::size_t d, double eps);

struct DualityCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

/// Checks that the partial transpose of the isotropic state equals
/// (1-eps) I / d^2 + (eps/d) F entrywise (expected exact).
DualityCheck isotropic_werner_duality(std::size_t d, double eps);

}  // namespace pptkit
