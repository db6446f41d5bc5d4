#include "pptkit/reports.hpp"

#include <cmath>
#include <cstdio>

namespace pptkit {

namespace {

using nlohmann::ordered_json;

ordered_json eigs_to_json(const std::vector<double>& eigs) {
  return ordered_json(eigs);
}

ordered_json classification_to_json(const Classification& c) {
  ordered_json j;
  j["verdict"] = to_string(c.verdict);
  j["reason"] = to_string(c.reason);
  j["is_ppt"] = c.is_ppt;
  j["negativity"] = c.negativity;
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ordered_json to_json(const ValidationReport& rep) {
  ordered_json j;
  j["hermitian"] = rep.hermitian;
  j["trace"] = rep.trace;
  j["trace_ok"] = rep.trace_ok;
  j["min_eigenvalue"] = rep.min_eigenvalue;
  j["psd"] = rep.psd;
  j["pattern_ok"] = rep.pattern_ok;
  j["overall"] = rep.overall;
  return j;
}

ordered_json analysis_report(const MatrixDocument& doc, double tol) {
  ordered_json report;
  const std::size_t dA = doc.dA(), dB = doc.dB();
  const ComplexMatrix dense = doc.to_dense();

  switch (doc.kind()) {
    case DocumentKind::Family:
      report["validation"] = to_json(validate(std::get<FamilyParams>(doc.payload), tol));
      break;
    case DocumentKind::QubitQudit:
      report["validation"] = to_json(validate(std::get<QubitQuditParams>(doc.payload), tol));
      break;
    default:
      report["validation"] = to_json(validate(dense, tol));
      break;
  }

  const std::optional<FamilyParams> family = doc.family_view(tol);
  Classification classification;
  if (family) {
    const BlockSpectrum spectrum = pt_block_spectrum(*family);
    ordered_json blocks;
    blocks["x"] = eigs_to_json(spectrum.x_eigs);
    ordered_json m = ordered_json::array(), n = ordered_json::array();
    for (std::size_t k = 0; k < family->dA; ++k) {
      m.push_back(eigs_to_json(spectrum.m_eigs[k]));
      n.push_back(eigs_to_json(spectrum.n_eigs[k]));
    }
    blocks["m"] = std::move(m);
    blocks["n"] = std::move(n);
    report["block_spectrum"] = std::move(blocks);
    classification = classify(*family, tol);
  } else if (doc.kind() == DocumentKind::QubitQudit) {
    const QubitQuditParams& q = std::get<QubitQuditParams>(doc.payload);
    const QubitQuditSpectrum spectrum = pt_block_spectrum(q);
    ordered_json blocks;
    blocks["x"] = eigs_to_json(spectrum.x_eigs);
    blocks["a"] = eigs_to_json(spectrum.a_eigs);
    blocks["b"] = eigs_to_json(spectrum.b_eigs);
    report["block_spectrum"] = std::move(blocks);
    classification = classify(q, tol);
  } else {
    classification = classify_dense(dense, dA, dB, tol);
  }

  if (dense.dim() <= kDenseSpectrumLimit) {
    const ComplexMatrix pt = partial_transpose(dense, dA, dB);
    const std::vector<double> dense_eigs = hermitian_eigenvalues(HermitianMatrix::symmetrized(pt));
    report["dense_spectrum"] = eigs_to_json(dense_eigs);
    const NegativityResult neg = negativity(dense_eigs, tol);
    report["negativity"] = neg.negativity;
    report["is_ppt"] = neg.is_ppt;
    report["negative_eigenvalues"] = eigs_to_json(neg.negative_eigenvalues);
  } else {
    report["negativity"] = classification.negativity;
    report["is_ppt"] = classification.is_ppt;
  }

  report["classification"] = classification_to_json(classification);

  if (family && dense.dim() <= kDenseSpectrumLimit) {
    const DirectSumCheck check = verify_direct_sum(*family);
    ordered_json ds;
    ds["ok"] = check.ok;
    ds["max_deviation"] = check.max_deviation;
    report["direct_sum_verified"] = std::move(ds);
  } else if (doc.kind() == DocumentKind::QubitQudit && dense.dim() <= kDenseSpectrumLimit) {
    const DirectSumCheck check = verify_direct_sum(std::get<QubitQuditParams>(doc.payload));
    ordered_json ds;
    ds["ok"] = check.ok;
    ds["max_deviation"] = check.max_deviation;
    report["direct_sum_verified"] = std::move(ds);
  }
  return report;
}

ordered_json reorder_report(const MatrixDocument& doc, double tol) {
  const std::optional<FamilyParams> family = doc.family_view(tol);
  if (!family)
    throw DocumentError("reorder: document is not family-structured");

  const FamilyParams& p = *family;
  const BasisPermutation perm = subspace_permutation(p);
  const std::vector<std::size_t> sizes = subspace_block_sizes(p.dA, p.dB);
  const ComplexMatrix permuted = apply_permutation(partial_transpose(assemble(p), p.dA, p.dB), perm);
  const BlockDiagonalCheck check = verify_block_diagonal(permuted, sizes, tol);

  ordered_json report;
  MatrixDocument out;
  out.payload = DenseState{p.dA, p.dB, permuted};
  report["document"] = to_json(out);
  report["permutation"] = ordered_json(perm.map);
  report["block_sizes"] = ordered_json(sizes);
  ordered_json bd;
  bd["ok"] = check.ok;
  bd["max_off_block"] = check.max_off_block;
  report["block_diagonal"] = std::move(bd);
  return report;
}

std::string sweep_csv(DocumentKind kind, std::size_t d, double eps_lo, double eps_hi,
                      std::size_t points, double tol) {
  if (kind != DocumentKind::Werner && kind != DocumentKind::Isotropic)
    throw DocumentError("sweep: kind must be werner or isotropic");
  if (d < 2) throw DocumentError("sweep: d must be >= 2");
  if (!(std::isfinite(eps_lo) && std::isfinite(eps_hi)) || eps_hi < eps_lo || points < 2)
    throw DocumentError("sweep: invalid grid");

  std::string csv = "eps,min_pt_eigenvalue,negativity,verdict\n";
  for (std::size_t i = 0; i < points; ++i) {
    const double eps = eps_lo + (eps_hi - eps_lo) * static_cast<double>(i) /
                                    static_cast<double>(points - 1);
    const ComplexMatrix rho =
        (kind == DocumentKind::Werner) ? werner(d, eps) : isotropic(d, eps);
    const ComplexMatrix pt = partial_transpose(rho, d, d);
    const std::vector<double> eigs = hermitian_eigenvalues(HermitianMatrix(pt));
    const NegativityResult neg = negativity(eigs, tol);
    Verdict verdict;
    if (!neg.is_ppt) {
      verdict = Verdict::NptEntangled;
    } else if (kind == DocumentKind::Werner || d * d <= 6) {
      verdict = Verdict::PptSeparable;
    } else {
      verdict = Verdict::PptUndecided;
    }
    csv += format_double(eps) + "," + format_double(eigs.front()) + "," +
           format_double(neg.negativity) + "," + to_string(verdict) + "\n";
  }
  return csv;
}

}  // namespace pptkit
