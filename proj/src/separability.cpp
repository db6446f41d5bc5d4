#include "pptkit/separability.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace pptkit {

namespace {

// Positivity of the partial transpose implies separability on 2x2 and
// 2x3 systems, and trivially when one side is one-dimensional.
bool low_dimension_rule(std::size_t dA, std::size_t dB) {
  const std::size_t lo = std::min(dA, dB);
  return lo <= 1 || (dA * dB <= 6 && lo <= 2);
}

// True when the product subspace alice x bob is invariant under pt:
// no coupling between the subspace and its complement above tol.
bool invariant_product_subspace(const ComplexMatrix& pt, std::span<const std::size_t> alice,
                                std::span<const std::size_t> bob, std::size_t dB, double tol) {
  std::vector<bool> inside(pt.dim(), false);
  for (std::size_t a : alice)
    for (std::size_t b : bob) inside[a * dB + b] = true;
  for (std::size_t r = 0; r < pt.dim(); ++r)
    for (std::size_t c = 0; c < pt.dim(); ++c)
      if (inside[r] != inside[c] && std::abs(pt(r, c)) > tol) return false;
  return true;
}

// Indices k with an off-diagonal X coupling above tol. Diagonal-only
// entries x_kk |kk><kk| are product pieces and never obstruct
// separability, so they stay out of the support.
std::vector<std::size_t> coupled_support(const HermitianMatrix& x, double tol) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    bool hit = false;
    for (std::size_t j = 0; j < x.dim() && !hit; ++j)
      hit = (j != k) && std::abs(x(k, j)) > tol;
    if (hit) support.push_back(k);
  }
  return support;
}

bool product_subspace_rule(const FamilyParams& p, double tol) {
  if (low_dimension_rule(p.dA, p.dB)) return true;
  // X acts on span{|kk>}; a coupled support of at most two indices fits
  // in a 2x2 product subspace, which must additionally be invariant.
  const std::vector<std::size_t> support = coupled_support(p.X, tol);
  if (support.empty() || support.size() > 2) return false;
  const ComplexMatrix pt = partial_transpose(assemble(p), p.dA, p.dB);
  return invariant_product_subspace(pt, support, support, p.dB, tol);
}

bool product_subspace_rule(const QubitQuditParams& q, double tol) {
  if (low_dimension_rule(2, q.dB)) return true;
  // X acts on {|00>, |1,dB-1>}; the enclosing product subspace is
  // {|0>,|1>} x {|0>,|dB-1>}.
  const std::size_t alice[] = {0, 1};
  const std::size_t bob[] = {0, q.dB - 1};
  const ComplexMatrix pt = partial_transpose(assemble_qubit_qudit(q), 2, q.dB);
  return invariant_product_subspace(pt, alice, bob, q.dB, tol);
}

// Werner members have every M/N block equal to a common multiple of the
// identity, constant X diagonal and constant real off-diagonal coupling.
std::optional<double> werner_eps_match(const FamilyParams& p, double tol) {
  if (p.dA != p.dB) return std::nullopt;
  const std::size_t d = p.dA;
  const double m = p.N[0](0, 0).real();
  auto block_matches = [&](const HermitianMatrix& blk) {
    for (std::size_t r = 0; r < blk.dim(); ++r)
      for (std::size_t c = 0; c < blk.dim(); ++c) {
        const Complex want = (r == c) ? Complex(m) : Complex(0.0);
        if (std::abs(blk(r, c) - want) > tol) return false;
      }
    return true;
  };
  for (std::size_t k = 0; k < d; ++k)
    if (!block_matches(p.M[k]) || !block_matches(p.N[k])) return std::nullopt;

  const double dd = static_cast<double>(d);
  const double eps = 1.0 - m * dd * dd;
  if (eps < -1.0 / (dd - 1.0) - tol || eps > 1.0 / (dd + 1.0) + tol) return std::nullopt;
  const double coupling = eps / dd;
  const double diag = m + coupling;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const Complex want = (r == c) ? Complex(diag) : Complex(coupling);
      if (std::abs(p.X(r, c) - want) > tol) return std::nullopt;
    }
  return eps;
}

Classification ppt_classification(double neg) {
  Classification out;
  out.is_ppt = true;
  out.verdict = Verdict::PptSeparable;
  out.negativity = neg;
  return out;
}

}  // namespace

bool is_simply_separable(const ComplexMatrix& rho, std::size_t dA, std::size_t dB, double tol) {
  if (rho.dim() != dA * dB)
    throw std::invalid_argument("is_simply_separable: dimension mismatch");
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t j = 0; j < dA; ++j) {
      if (i == j) continue;
      for (std::size_t r = 0; r < dB; ++r)
        for (std::size_t c = 0; c < dB; ++c)
          if (std::abs(rho(i * dB + r, j * dB + c)) > tol) return false;
    }
  return true;
}

ComplexMatrix SeparableDecomposition::reconstruct() const {
  if (terms.empty()) throw std::invalid_argument("SeparableDecomposition: no terms");
  ComplexMatrix sum(terms.front().alice.dim() * terms.front().bob.dim());
  for (const Term& t : terms) {
    ComplexMatrix prod = tensor_product(t.alice, t.bob);
    prod *= t.weight;
    sum += prod;
  }
  return sum;
}

SeparableDecomposition decompose_simply_separable(const ComplexMatrix& rho, std::size_t dA,
                                                  std::size_t dB, double tol) {
  if (!is_simply_separable(rho, dA, dB, tol))
    throw std::invalid_argument("decompose_simply_separable: state is not simply separable");
  SeparableDecomposition dec;
  for (std::size_t i = 0; i < dA; ++i) {
    ComplexMatrix block(dB);
    for (std::size_t r = 0; r < dB; ++r)
      for (std::size_t c = 0; c < dB; ++c) block(r, c) = rho(i * dB + r, i * dB + c);
    const double weight = block.trace().real();
    if (weight <= tol) continue;
    block *= 1.0 / weight;
    ComplexMatrix alice(dA);
    alice(i, i) = 1.0;
    dec.terms.push_back({weight, std::move(alice), std::move(block)});
  }
  return dec;
}

XPattern x_pattern(const HermitianMatrix& x, double tol) {
  const std::size_t n = x.dim();
  double max_all = 0.0, max_off = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      max_all = std::max(max_all, std::abs(x(r, c)));
      if (r != c) max_off = std::max(max_off, std::abs(x(r, c)));
    }
  if (max_all <= tol) return XPattern::Null;
  if (max_off <= tol) return XPattern::Diagonal;
  if (n % 2 == 0) {
    bool block_diagonal = true;
    for (std::size_t r = 0; r < n && block_diagonal; ++r)
      for (std::size_t c = 0; c < n && block_diagonal; ++c)
        if (r / 2 != c / 2 && std::abs(x(r, c)) > tol) block_diagonal = false;
    if (block_diagonal) {
      bool antidiag = true, lower = true;
      for (std::size_t b = 0; b < n / 2; ++b) {
        if (std::abs(x(2 * b, 2 * b)) > tol) antidiag = lower = false;
        if (std::abs(x(2 * b + 1, 2 * b + 1)) > tol) antidiag = false;
      }
      if (antidiag) return XPattern::Antidiag2x2;
      if (lower) return XPattern::Lower2x2;
    }
  }
  return XPattern::General;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NptEntangled: return "NPT_ENTANGLED";
    case Verdict::PptSeparable: return "PPT_SEPARABLE";
    case Verdict::PptUndecided: return "PPT_UNDECIDED";
  }
  return "PPT_UNDECIDED";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::None: return "NONE";
    case Reason::XNullForced: return "X_NULL_FORCED";
    case Reason::XDiagonal: return "X_DIAGONAL";
    case Reason::SimplySeparable: return "SIMPLY_SEPARABLE";
    case Reason::ProductSubspaceDimLe6: return "PRODUCT_SUBSPACE_DIM_LE_6";
    case Reason::Werner: return "WERNER";
  }
  return "NONE";
}

Classification classify(const FamilyParams& p, double tol) {
  const BlockSpectrum spectrum = pt_block_spectrum(p);
  const NegativityResult neg = negativity(spectrum, tol);
  if (!neg.is_ppt) {
    Classification out;
    out.is_ppt = false;
    out.verdict = Verdict::NptEntangled;
    out.reason = Reason::None;
    out.negativity = neg.negativity;
    return out;
  }

  Classification out = ppt_classification(neg.negativity);
  switch (x_pattern(p.X, tol)) {
    case XPattern::Null:
      out.reason = Reason::XNullForced;
      return out;
    case XPattern::Diagonal:
      out.reason = Reason::SimplySeparable;
      return out;
    case XPattern::Antidiag2x2:
      // positivity of the partial transpose bounds every coupling by tol
      out.reason = Reason::XNullForced;
      return out;
    case XPattern::Lower2x2:
    case XPattern::General:
      break;
  }
  if (werner_eps_match(p, tol)) {
    out.reason = Reason::Werner;
    return out;
  }
  if (product_subspace_rule(p, tol)) {
    out.reason = Reason::ProductSubspaceDimLe6;
    return out;
  }
  out.verdict = Verdict::PptUndecided;
  out.reason = Reason::None;
  return out;
}

Classification classify(const QubitQuditParams& q, double tol) {
  const QubitQuditSpectrum spectrum = pt_block_spectrum(q);
  const NegativityResult neg = negativity(spectrum, tol);
  if (!neg.is_ppt) {
    Classification out;
    out.is_ppt = false;
    out.verdict = Verdict::NptEntangled;
    out.reason = Reason::None;
    out.negativity = neg.negativity;
    return out;
  }
  Classification out = ppt_classification(neg.negativity);
  if (std::abs(q.x01) <= tol) {
    out.reason = Reason::SimplySeparable;
    return out;
  }
  if (product_subspace_rule(q, tol)) {
    out.reason = Reason::ProductSubspaceDimLe6;
    return out;
  }
  out.verdict = Verdict::PptUndecided;
  out.reason = Reason::None;
  return out;
}

Classification classify_dense(const ComplexMatrix& rho, std::size_t dA, std::size_t dB,
                              double tol) {
  if (rho.dim() != dA * dB) throw std::invalid_argument("classify_dense: dimension mismatch");
  const ComplexMatrix pt = partial_transpose(rho, dA, dB);
  const std::vector<double> eigs = hermitian_eigenvalues(HermitianMatrix(pt));
  const NegativityResult neg = negativity(eigs, tol);
  if (!neg.is_ppt) {
    Classification out;
    out.is_ppt = false;
    out.verdict = Verdict::NptEntangled;
    out.reason = Reason::None;
    out.negativity = neg.negativity;
    return out;
  }
  if (is_simply_separable(rho, dA, dB, tol)) {
    Classification out = ppt_classification(neg.negativity);
    out.reason = Reason::SimplySeparable;
    return out;
  }
  if (dA >= 2 && dA <= dB) {
    if (std::optional<FamilyParams> fam = extract_family(rho, dA, dB, tol)) {
      return classify(*fam, tol);
    }
  }
  if (low_dimension_rule(dA, dB)) {
    Classification out = ppt_classification(neg.negativity);
    out.reason = Reason::ProductSubspaceDimLe6;
    return out;
  }
  Classification out;
  out.is_ppt = true;
  out.verdict = Verdict::PptUndecided;
  out.reason = Reason::None;
  out.negativity = neg.negativity;
  return out;
}

BlockPartition subspace_partition(std::size_t dA, std::size_t dB) {
  if (dA < 2 || dB < dA)
    throw std::invalid_argument("subspace_partition: requires 2 <= dA <= dB");
  BlockPartition part;
  std::vector<std::size_t> x_axis;
  for (std::size_t k = 0; k < dA; ++k) x_axis.push_back(k * dB + k);
  part.groups.push_back(std::move(x_axis));
  for (std::size_t k = 0; k < dA; ++k) {
    std::vector<std::size_t> m_group, n_group;
    for (std::size_t j = 0; j < k; ++j) m_group.push_back(k * dB + j);
    for (std::size_t j = k + 1; j < dB; ++j) n_group.push_back(k * dB + j);
    if (!m_group.empty()) part.groups.push_back(std::move(m_group));
    if (!n_group.empty()) part.groups.push_back(std::move(n_group));
  }
  return part;
}

}  // namespace pptkit
