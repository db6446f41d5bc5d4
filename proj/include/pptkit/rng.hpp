#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "pptkit/matrix.hpp"

namespace pptkit {

/// Deterministic generator for sampling. Gaussian variates come from a
/// hand-rolled Box-Muller transform so that a seed yields the same
/// stream on every platform (std::normal_distribution is
/// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_cached_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  /// Hermitian PSD matrix G^dagger G with G complex Gaussian.
  HermitianMatrix gram(std::size_t dim) {
    ComplexMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) g(r, c) = complex_gaussian();
    return HermitianMatrix(g.adjoint() * g);
  }

  /// Random Hermitian matrix (not necessarily PSD).
  HermitianMatrix hermitian(std::size_t dim) {
    ComplexMatrix h(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      h(r, r) = gaussian();
      for (std::size_t c = r + 1; c < dim; ++c) {
        h(r, c) = complex_gaussian();
        h(c, r) = std::conj(h(r, c));
      }
    }
    return HermitianMatrix(std::move(h));
  }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace pptkit
