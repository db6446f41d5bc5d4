#pragma once

#include "pptkit/basis_reorder.hpp"
#include "pptkit/document.hpp"

namespace pptkit {

/// Dense spectra are included in reports up to this dimension.
inline constexpr std::size_t kDenseSpectrumLimit = 64;

nlohmann::ordered_json to_json(const ValidationReport& rep);

/// Full analysis of a document: validation, block and dense PT spectra,
/// negativity, classification, and the direct-sum cross-check whenever
/// the state has a block structure to verify.
nlohmann::ordered_json analysis_report(const MatrixDocument& doc, double tol = kDefaultTolerance);

/// Permuted partial transpose of a family-structured document together
/// with the permutation, the block sizes and the block-diagonality
/// check. Throws DocumentError when the document has no family view.
nlohmann::ordered_json reorder_report(const MatrixDocument& doc, double tol = kDefaultTolerance);

/// CSV sweep over an eps grid for the werner or isotropic family:
/// one "eps,min_pt_eigenvalue,negativity,verdict" row per grid point.
std::string sweep_csv(DocumentKind kind, std::size_t d, double eps_lo, double eps_hi,
                      std::size_t points, double tol = kDefaultTolerance);

}  // namespace pptkit
