#include "pptkit/named_states.hpp"

#include <cmath>
#include <stdexcept>

#include "pptkit/partial_transpose.hpp"

namespace pptkit {

ComplexMatrix flip_operator(std::size_t d) {
  if (d < 1) throw std::invalid_argument("flip_operator: d must be >= 1");
  ComplexMatrix f(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  return f;
}

ComplexMatrix max_entangled_projector(std::size_t d) {
  if (d < 1) throw std::invalid_argument("max_entangled_projector: d must be >= 1");
  ComplexMatrix p(d * d);
  const double w = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i * d + i, j * d + j) = w;
  return p;
}

ComplexMatrix werner(const WernerSpec& spec) {
  if (spec.d < 2) throw std::invalid_argument("werner: d must be >= 2");
  const double dd = static_cast<double>(spec.d);
  ComplexMatrix rho = flip_operator(spec.d);
  rho *= spec.eps / dd;
  const double diag = (1.0 - spec.eps) / (dd * dd);
  for (std::size_t i = 0; i < rho.dim(); ++i) rho(i, i) += diag;
  return rho;
}

ComplexMatrix isotropic(const IsotropicSpec& spec) {
  if (spec.d < 2) throw std::invalid_argument("isotropic: d must be >= 2");
  const double dd = static_cast<double>(spec.d);
  ComplexMatrix rho = max_entangled_projector(spec.d);
  rho *= spec.eps;
  const double diag = (1.0 - spec.eps) / (dd * dd);
  for (std::size_t i = 0; i < rho.dim(); ++i) rho(i, i) += diag;
  return rho;
}

std::pair<double, double> werner_eps_range(std::size_t d) {
  const double dd = static_cast<double>(d);
  return {-1.0 / (dd - 1.0), 1.0 / (dd + 1.0)};
}

std::pair<double, double> isotropic_eps_range(std::size_t d) {
  const double dd = static_cast<double>(d);
  return {-1.0 / (dd * dd - 1.0), 1.0};
}

double phi_to_eps(double phi, std::size_t d) {
  if (d < 2) throw std::invalid_argument("phi_to_eps: d must be >= 2");
  const double dd = static_cast<double>(d);
  return -(1.0 - dd * phi) / (dd * dd - 1.0);
}

FamilyParams embed_werner(std::size_t d, double eps) {
  if (d < 2) throw std::invalid_argument("embed_werner: d must be >= 2");
  const auto [lo, hi] = werner_eps_range(d);
  if (eps < lo - 1e-12 || eps > hi + 1e-12)
    throw std::invalid_argument("embed_werner: eps outside the PSD range");

  const ComplexMatrix rho = werner(d, eps);
  const double dd = static_cast<double>(d);
  const double block = (1.0 - eps) / (dd * dd);
  const double coupling = eps / dd;

  FamilyParams p;
  p.dA = p.dB = d;
  ComplexMatrix x(d);
  for (std::size_t k = 0; k < d; ++k) x(k, k) = rho(k * d + k, k * d + k);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n)
      if (m != n) x(m, n) = coupling;
  p.X = HermitianMatrix(std::move(x));
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix mk(k);
    for (std::size_t i = 0; i < k; ++i) mk(i, i) = block;
    ComplexMatrix nk(d - 1 - k);
    for (std::size_t i = 0; i < d - 1 - k; ++i) nk(i, i) = block;
    p.M.emplace_back(std::move(mk));
    p.N.emplace_back(std::move(nk));
  }
  return p;
}

DualityCheck isotropic_werner_duality(std::size_t d, double eps) {
  if (d < 2) throw std::invalid_argument("isotropic_werner_duality: d must be >= 2");
  const ComplexMatrix lhs = partial_transpose(isotropic(d, eps), d, d);
  const double dd = static_cast<double>(d);
  // scale by eps * (1/d) so both sides round through the identical
  // expression and the comparison is exact
  ComplexMatrix rhs = flip_operator(d);
  rhs *= eps * (1.0 / dd);
  const double diag = (1.0 - eps) / (dd * dd);
  for (std::size_t i = 0; i < rhs.dim(); ++i) rhs(i, i) += diag;
  DualityCheck check;
  check.max_deviation = max_abs_diff(lhs, rhs);
  check.ok = check.max_deviation == 0.0;
  return check;
}

}  // namespace pptkit
