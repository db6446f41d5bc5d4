#include "pptkit/family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pptkit/rng.hpp"

namespace pptkit {

namespace {

constexpr double kTraceTolerance = 1e-10;
constexpr int kBisectionSteps = 60;

bool hermitian_within_repair(const ComplexMatrix& m) {
  double asym = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c)
      asym = std::max(asym, std::abs(m(r, c) - std::conj(m(c, r))));
  return asym <= HermitianMatrix::kRepairThreshold * m.max_abs_entry();
}

ValidationReport report_for(const ComplexMatrix& rho, double tol, double pattern_violation) {
  ValidationReport rep;
  rep.hermitian = hermitian_within_repair(rho);
  rep.trace = rho.trace().real();
  rep.trace_ok = std::abs(rep.trace - 1.0) <= kTraceTolerance;
  const PsdResult psd = is_psd(HermitianMatrix::symmetrized(rho), tol);
  rep.min_eigenvalue = psd.min_eigenvalue;
  rep.psd = rep.hermitian && psd.psd;
  rep.pattern_ok = pattern_violation <= tol;
  rep.overall = rep.hermitian && rep.trace_ok && rep.psd;
  return rep;
}

}  // namespace

void check_dims(const FamilyParams& p) {
  if (p.dA < 2) throw std::invalid_argument("FamilyParams: dA must be >= 2");
  if (p.dB < p.dA) throw std::invalid_argument("FamilyParams: requires dA <= dB");
  if (p.X.dim() != p.dA) throw std::invalid_argument("FamilyParams: X must be dA x dA");
  if (p.M.size() != p.dA || p.N.size() != p.dA)
    throw std::invalid_argument("FamilyParams: need dA blocks M[k] and N[k]");
  for (std::size_t k = 0; k < p.dA; ++k) {
    if (p.M[k].dim() != k) throw std::invalid_argument("FamilyParams: M[k] must be k x k");
    if (p.N[k].dim() != p.dB - 1 - k)
      throw std::invalid_argument("FamilyParams: N[k] must be (dB-1-k) x (dB-1-k)");
  }
}

void check_dims(const QubitQuditParams& q) {
  if (q.dB < 2) throw std::invalid_argument("QubitQuditParams: dB must be >= 2");
  if (q.A.dim() != q.dB - 1 || q.B.dim() != q.dB - 1)
    throw std::invalid_argument("QubitQuditParams: A and B must be (dB-1) x (dB-1)");
  if (!std::isfinite(q.x00) || !std::isfinite(q.x11) || !std::isfinite(q.x01.real()) ||
      !std::isfinite(q.x01.imag()))
    throw std::invalid_argument("QubitQuditParams: non-finite entry");
}

ComplexMatrix assemble(const FamilyParams& p) {
  check_dims(p);
  const std::size_t dB = p.dB;
  ComplexMatrix rho(p.dA * dB);
  for (std::size_t k = 0; k < p.dA; ++k) {
    const std::size_t base = k * dB;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) rho(base + i, base + j) = p.M[k](i, j);
    rho(base + k, base + k) = p.X(k, k);
    for (std::size_t i = 0; i < dB - 1 - k; ++i)
      for (std::size_t j = 0; j < dB - 1 - k; ++j)
        rho(base + k + 1 + i, base + k + 1 + j) = p.N[k](i, j);
  }
  // x_mn couples |m,n><n,m| for m != n
  for (std::size_t m = 0; m < p.dA; ++m)
    for (std::size_t n = 0; n < p.dA; ++n)
      if (m != n) rho(m * dB + n, n * dB + m) = p.X(m, n);
  return rho;
}

ComplexMatrix assemble_qubit_qudit(const QubitQuditParams& q) {
  check_dims(q);
  const std::size_t dB = q.dB;
  ComplexMatrix rho(2 * dB);
  rho(0, 0) = q.x00;
  rho(2 * dB - 1, 2 * dB - 1) = q.x11;
  rho(dB - 1, dB) = q.x01;
  rho(dB, dB - 1) = std::conj(q.x01);
  for (std::size_t i = 0; i + 1 < dB; ++i)
    for (std::size_t j = 0; j + 1 < dB; ++j) {
      rho(1 + i, 1 + j) = q.A(i, j);
      rho(dB + i, dB + j) = q.B(i, j);
    }
  return rho;
}

double family_pattern_max_violation(const ComplexMatrix& rho, std::size_t dA, std::size_t dB) {
  if (rho.dim() != dA * dB)
    throw std::invalid_argument("family_pattern_max_violation: dimension mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    const std::size_t a = r / dB, i = r % dB;
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      const std::size_t b = c / dB, j = c % dB;
      bool allowed;
      if (a == b) {
        allowed = (i < a && j < a) || (i == a && j == a) || (i > a && j > a);
      } else {
        allowed = (i == b && j == a);
      }
      if (!allowed) worst = std::max(worst, std::abs(rho(r, c)));
    }
  }
  return worst;
}

double qubit_qudit_pattern_max_violation(const ComplexMatrix& rho, std::size_t dB) {
  if (rho.dim() != 2 * dB)
    throw std::invalid_argument("qubit_qudit_pattern_max_violation: dimension mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      const bool in_a = r >= 1 && r <= dB - 1 && c >= 1 && c <= dB - 1;
      const bool in_b = r >= dB && r <= 2 * dB - 2 && c >= dB && c <= 2 * dB - 2;
      const bool allowed = (r == 0 && c == 0) || (r == 2 * dB - 1 && c == 2 * dB - 1) ||
                           (r == dB - 1 && c == dB) || (r == dB && c == dB - 1) || in_a || in_b;
      if (!allowed) worst = std::max(worst, std::abs(rho(r, c)));
    }
  return worst;
}

ValidationReport validate(const ComplexMatrix& rho, double tol) {
  if (rho.empty()) throw std::invalid_argument("validate: empty matrix");
  return report_for(rho, tol, 0.0);
}

ValidationReport validate(const FamilyParams& p, double tol) {
  const ComplexMatrix rho = assemble(p);
  return report_for(rho, tol, family_pattern_max_violation(rho, p.dA, p.dB));
}

ValidationReport validate(const QubitQuditParams& q, double tol) {
  const ComplexMatrix rho = assemble_qubit_qudit(q);
  return report_for(rho, tol, qubit_qudit_pattern_max_violation(rho, q.dB));
}

std::optional<FamilyParams> extract_family(const ComplexMatrix& rho, std::size_t dA,
                                           std::size_t dB, double tol) {
  if (dA < 2 || dB < dA || rho.dim() != dA * dB) return std::nullopt;
  if (family_pattern_max_violation(rho, dA, dB) > tol) return std::nullopt;
  FamilyParams p;
  p.dA = dA;
  p.dB = dB;
  ComplexMatrix x(dA);
  for (std::size_t m = 0; m < dA; ++m)
    for (std::size_t n = 0; n < dA; ++n) x(m, n) = rho(m * dB + n, n * dB + m);
  try {
    p.X = HermitianMatrix(std::move(x));
    for (std::size_t k = 0; k < dA; ++k) {
      ComplexMatrix mk(k), nk(dB - 1 - k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) mk(i, j) = rho(k * dB + i, k * dB + j);
      for (std::size_t i = 0; i < dB - 1 - k; ++i)
        for (std::size_t j = 0; j < dB - 1 - k; ++j)
          nk(i, j) = rho(k * dB + k + 1 + i, k * dB + k + 1 + j);
      p.M.emplace_back(std::move(mk));
      p.N.emplace_back(std::move(nk));
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // blocks not Hermitian
  }
  return p;
}

std::optional<FamilyParams> qubit_qudit_to_family(const QubitQuditParams& q) {
  if (q.dB != 2) return std::nullopt;
  FamilyParams p;
  p.dA = p.dB = 2;
  ComplexMatrix x(2);
  x(0, 0) = q.x00;
  x(1, 1) = q.x11;
  x(0, 1) = q.x01;
  x(1, 0) = std::conj(q.x01);
  p.X = HermitianMatrix(std::move(x));
  p.M = {HermitianMatrix(), q.B};
  p.N = {q.A, HermitianMatrix()};
  return p;
}

namespace {

// Shrinks `coupling(scale)` by bisection until `assemble(scale)` is PSD.
// scale = 0 must be PSD (block-diagonal with PSD blocks). Acceptance is
// much stricter than the validation tolerance so that the later trace
// normalization cannot push the state back across the PSD boundary.
template <typename AssembleFn>
double shrink_to_psd(const AssembleFn& assemble_scaled) {
  constexpr double kAcceptTolerance = 1e-14;
  if (is_psd(HermitianMatrix::symmetrized(assemble_scaled(1.0)), kAcceptTolerance).psd) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (is_psd(HermitianMatrix::symmetrized(assemble_scaled(mid)), kAcceptTolerance).psd)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

FamilyParams sample_random(std::size_t dA, std::size_t dB, std::uint64_t seed,
                           double entanglement_bias) {
  if (dA < 2 || dB < dA) throw std::invalid_argument("sample_random: requires 2 <= dA <= dB");
  if (!(entanglement_bias >= 0.0 && entanglement_bias <= 1.0))
    throw std::invalid_argument("sample_random: entanglement_bias must be in [0,1]");
  Rng rng(seed);
  FamilyParams p;
  p.dA = dA;
  p.dB = dB;
  for (std::size_t k = 0; k < dA; ++k) {
    p.M.push_back(rng.gram(k));
    p.N.push_back(rng.gram(dB - 1 - k));
  }
  ComplexMatrix x(dA);
  for (std::size_t k = 0; k < dA; ++k) x(k, k) = std::abs(rng.gaussian());
  for (std::size_t m = 0; m < dA; ++m)
    for (std::size_t n = m + 1; n < dA; ++n) {
      x(m, n) = entanglement_bias * rng.complex_gaussian();
      x(n, m) = std::conj(x(m, n));
    }
  p.X = HermitianMatrix(x);

  const double scale = shrink_to_psd(
      [&](double s) {
        ComplexMatrix xs = x;
        for (std::size_t m = 0; m < dA; ++m)
          for (std::size_t n = 0; n < dA; ++n)
            if (m != n) xs(m, n) *= s;
        FamilyParams scaled = p;
        scaled.X = HermitianMatrix(std::move(xs));
        return assemble(scaled);
      });
  for (std::size_t m = 0; m < dA; ++m)
    for (std::size_t n = 0; n < dA; ++n)
      if (m != n) x(m, n) *= scale;

  const double total = [&] {
    double t = 0.0;
    for (std::size_t k = 0; k < dA; ++k) t += p.M[k].trace() + p.N[k].trace();
    for (std::size_t k = 0; k < dA; ++k) t += x(k, k).real();
    return t;
  }();
  for (std::size_t m = 0; m < dA; ++m)
    for (std::size_t n = 0; n < dA; ++n) x(m, n) /= total;
  p.X = HermitianMatrix(std::move(x));
  for (std::size_t k = 0; k < dA; ++k) {
    ComplexMatrix mk = p.M[k].matrix();
    mk *= 1.0 / total;
    p.M[k] = HermitianMatrix(std::move(mk));
    ComplexMatrix nk = p.N[k].matrix();
    nk *= 1.0 / total;
    p.N[k] = HermitianMatrix(std::move(nk));
  }
  return p;
}

QubitQuditParams sample_qubit_qudit(std::size_t dB, std::uint64_t seed,
                                    double entanglement_bias) {
  if (dB < 2) throw std::invalid_argument("sample_qubit_qudit: dB must be >= 2");
  if (!(entanglement_bias >= 0.0 && entanglement_bias <= 1.0))
    throw std::invalid_argument("sample_qubit_qudit: entanglement_bias must be in [0,1]");
  Rng rng(seed);
  QubitQuditParams q;
  q.dB = dB;
  q.A = rng.gram(dB - 1);
  q.B = rng.gram(dB - 1);
  q.x00 = std::abs(rng.gaussian());
  q.x11 = std::abs(rng.gaussian());
  const Complex x01 = entanglement_bias * rng.complex_gaussian();

  const double scale = shrink_to_psd(
      [&](double s) {
        QubitQuditParams scaled = q;
        scaled.x01 = s * x01;
        return assemble_qubit_qudit(scaled);
      });
  q.x01 = scale * x01;

  const double total = q.x00 + q.x11 + q.A.trace() + q.B.trace();
  q.x00 /= total;
  q.x11 /= total;
  q.x01 /= total;
  ComplexMatrix a = q.A.matrix(), b = q.B.matrix();
  a *= 1.0 / total;
  b *= 1.0 / total;
  q.A = HermitianMatrix(std::move(a));
  q.B = HermitianMatrix(std::move(b));
  return q;
}

}  // namespace pptkit
