// Test-only reference implementations, independent of the library paths
// they are used to check.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "pptkit/family.hpp"

namespace oracle {

// Eigenvalues of a 3x3 Hermitian matrix as roots of the characteristic
// polynomial, located by sign scan plus bisection. Assumes the generic
// case of three separated roots.
inline std::vector<double> eigenvalues_3x3_charpoly(const pptkit::HermitianMatrix& h) {
  using pptkit::Complex;
  const double a = h(0, 0).real(), b = h(1, 1).real(), c = h(2, 2).real();
  const Complex p = h(0, 1), q = h(0, 2), r = h(1, 2);
  // det(lambda I - H) = lambda^3 - c2 lambda^2 + c1 lambda - c0
  const double c2 = a + b + c;
  const double c1 = a * b + a * c + b * c - std::norm(p) - std::norm(q) - std::norm(r);
  const double c0 = a * (b * c - std::norm(r)) - (std::conj(p) * (p * c - q * std::conj(r))).real() +
                    (std::conj(q) * (p * r - q * b)).real();
  auto poly = [&](double x) { return ((x - c2) * x + c1) * x - c0; };

  double radius = 1.0;
  for (int i = 0; i < 3; ++i) {
    double row = 0.0;
    for (int j = 0; j < 3; ++j) row += std::abs(h(i, j));
    radius = std::max(radius, row);
  }
  const double lo = -radius - 1.0, hi = radius + 1.0;
  const int scan = 200000;
  std::vector<double> roots;
  double prev_x = lo, prev_v = poly(lo);
  for (int i = 1; i <= scan && roots.size() < 3; ++i) {
    const double x = lo + (hi - lo) * i / scan;
    const double v = poly(x);
    if (prev_v == 0.0) roots.push_back(prev_x);
    else if ((prev_v < 0.0) != (v < 0.0)) {
      double xl = prev_x, xr = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (xl + xr);
        if ((poly(xl) < 0.0) != (poly(mid) < 0.0)) xr = mid;
        else xl = mid;
      }
      roots.push_back(0.5 * (xl + xr));
    }
    prev_x = x;
    prev_v = v;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Closed form for [[a, b], [conj(b), d]].
inline std::array<double, 2> eigenvalues_2x2(double a, double d, pptkit::Complex b) {
  const double mean = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return {mean - rad, mean + rad};
}

// Negativity from a dense trace-one spectrum via (sum |lambda| - 1) / 2.
inline double negativity_trace_convention(const std::vector<double>& eigs) {
  double abs_sum = 0.0;
  for (double e : eigs) abs_sum += std::abs(e);
  return 0.5 * (abs_sum - 1.0);
}

// Four-level fixture exercising every block shape: alternating M/N
// sizes 0,1,2,3 with distinct entries everywhere.
inline pptkit::FamilyParams four_level_fixture() {
  using pptkit::Complex;
  using pptkit::ComplexMatrix;
  using pptkit::HermitianMatrix;
  auto herm = [](std::size_t n, std::vector<Complex> upper) {
    ComplexMatrix m(n);
    std::size_t idx = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        m(r, c) = upper[idx++];
        m(c, r) = std::conj(m(r, c));
      }
    return HermitianMatrix(std::move(m));
  };

  pptkit::FamilyParams p;
  p.dA = p.dB = 4;
  p.M = {
      HermitianMatrix(),
      herm(1, {{0.05, 0.0}}),
      herm(2, {{0.08, 0.0}, {0.012, -0.008}, {0.09, 0.0}}),
      herm(3, {{0.10, 0.0}, {0.0, 0.02}, {-0.005, 0.005}, {0.11, 0.0}, {0.01, 0.0}, {0.12, 0.0}}),
  };
  p.N = {
      herm(3, {{0.11, 0.0}, {0.01, 0.02}, {-0.02, 0.015}, {0.12, 0.0}, {0.03, -0.01}, {0.13, 0.0}}),
      herm(2, {{0.06, 0.0}, {0.005, 0.01}, {0.07, 0.0}}),
      herm(1, {{0.04, 0.0}}),
      HermitianMatrix(),
  };
  p.X = herm(4, {{0.03, 0.0}, {0.01, 0.005}, {0.008, -0.004}, {0.003, 0.002},
                 {0.02, 0.0}, {0.0, 0.006}, {0.004, 0.0},
                 {0.025, 0.0}, {0.002, -0.001},
                 {0.015, 0.0}});
  return p;
}

}  // namespace oracle
