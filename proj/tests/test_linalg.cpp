#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "pptkit/eigensolver.hpp"
#include "pptkit/rng.hpp"

using namespace pptkit;

namespace {

ComplexMatrix matrix2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("matrix construction rejects non-finite entries") {
  CHECK_THROWS_AS(ComplexMatrix(1, {Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(1, {Complex(0.0, std::numeric_limits<double>::infinity())}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(2, {Complex(1.0)}), std::invalid_argument);
}

TEST_CASE("hermitian construction repairs tiny asymmetry and rejects real ones") {
  ComplexMatrix tiny = matrix2(1.0, Complex(0.5, 1e-14), Complex(0.5, 1e-14), 2.0);
  const HermitianMatrix repaired(tiny);
  CHECK(repaired(0, 1) == std::conj(repaired(1, 0)));

  ComplexMatrix bad = matrix2(1.0, Complex(0.5, 0.1), Complex(0.5, 0.1), 2.0);
  CHECK_THROWS_AS(HermitianMatrix{bad}, std::invalid_argument);
}

TEST_CASE("eigenvalues of the identity") {
  const auto eigs = hermitian_eigenvalues(HermitianMatrix(ComplexMatrix::identity(3)));
  REQUIRE(eigs.size() == 3);
  for (double e : eigs) CHECK(e == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues of a pure coupling are plus-minus its magnitude") {
  const Complex x(0.3, 0.4);
  const HermitianMatrix h(matrix2(0.0, x, std::conj(x), 0.0));
  const auto eigs = hermitian_eigenvalues(h);
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(eigs[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("seeded 3x3 eigenvalues match the characteristic-polynomial oracle") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng rng(seed);
    const HermitianMatrix h = rng.hermitian(3);
    const auto fast = hermitian_eigenvalues(h);
    const auto slow = oracle::eigenvalues_3x3_charpoly(h);
    REQUIRE(slow.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(fast[i] - slow[i]) <= 1e-9);
  }
}

TEST_CASE("eigenvalue sum equals the trace") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const HermitianMatrix h = rng.hermitian(2 + seed % 7);
    const auto eigs = hermitian_eigenvalues(h);
    double sum = 0.0;
    for (double e : eigs) sum += e;
    const double scale = std::max(1.0, std::abs(h.trace()));
    CHECK(std::abs(sum - h.trace()) <= 1e-10 * scale);
  }
}

TEST_CASE("spectrum is invariant under permutation similarity") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    const std::size_t n = 3 + seed % 5;
    const HermitianMatrix h = rng.hermitian(n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i)
      std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform() * i)]);
    ComplexMatrix permuted(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) permuted(r, c) = h(perm[r], perm[c]);
    const auto a = hermitian_eigenvalues(h);
    const auto b = hermitian_eigenvalues(HermitianMatrix(permuted));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-10);
  }
}

TEST_CASE("clustered and repeated eigenvalues are recovered") {
  // build A = V diag(target) V^dagger from the eigenvectors of a random
  // Hermitian matrix, with heavy degeneracy in the target spectrum
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Rng rng(seed);
    const std::size_t n = 6;
    const EigenSystem basis = hermitian_eigensystem(rng.hermitian(n));
    const std::vector<double> target = {-1.0, -1.0, 0.0, 0.5, 0.5, 0.5};
    ComplexMatrix scaled = basis.vectors;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= target[c];
    const ComplexMatrix a = scaled * basis.vectors.adjoint();
    const auto eigs = hermitian_eigenvalues(HermitianMatrix::symmetrized(a));
    REQUIRE(eigs.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(eigs[i] - target[i]) <= 1e-10);
  }
}

TEST_CASE("eigensystem residual stays below 1e-10 of the norm") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + seed % 8;
    const HermitianMatrix h = rng.hermitian(n);
    const EigenSystem sys = hermitian_eigensystem(h);
    ComplexMatrix hv = h.matrix() * sys.vectors;
    ComplexMatrix vl = sys.vectors;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) vl(r, c) *= sys.values[c];
    double resid = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) resid += std::norm(hv(r, c) - vl(r, c));
    CHECK(std::sqrt(resid) <= 1e-10 * h.matrix().frobenius_norm());
  }
}

TEST_CASE("is_psd basics") {
  SUBCASE("zero matrix") {
    const auto res = is_psd(HermitianMatrix::zero(3));
    CHECK(res.psd);
    CHECK(res.min_eigenvalue == 0.0);
  }
  SUBCASE("indefinite real matrix") {
    const auto res = is_psd(HermitianMatrix(matrix2(1.0, 2.0, 2.0, 1.0)));
    CHECK_FALSE(res.psd);
    CHECK(res.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("diagonal block") {
    ComplexMatrix d(3);
    d(0, 0) = d(1, 1) = d(2, 2) = 1.0 / 9.0;
    const auto res = is_psd(HermitianMatrix(std::move(d)));
    CHECK(res.psd);
    CHECK(res.min_eigenvalue == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  }
  SUBCASE("negative tol rejected") {
    CHECK_THROWS_AS(is_psd(HermitianMatrix::zero(2), -1.0), std::invalid_argument);
  }
}

TEST_CASE("principal submatrix") {
  const FamilyParams fixture = oracle::four_level_fixture();
  const HermitianMatrix rho(assemble(fixture));

  SUBCASE("full index set returns the matrix itself") {
    std::vector<std::size_t> all(rho.dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const HermitianMatrix sub = principal_submatrix(rho, all);
    CHECK(max_abs_diff(sub.matrix(), rho.matrix()) == 0.0);
  }
  SUBCASE("rows 1..3 recover the first upper block") {
    const std::vector<std::size_t> idx = {1, 2, 3};
    const HermitianMatrix sub = principal_submatrix(rho, idx);
    CHECK(max_abs_diff(sub.matrix(), fixture.N[0].matrix()) == 0.0);
  }
  SUBCASE("row 4 recovers the single-entry block") {
    const std::vector<std::size_t> idx = {4};
    const HermitianMatrix sub = principal_submatrix(rho, idx);
    CHECK(sub(0, 0) == fixture.M[1](0, 0));
  }
  SUBCASE("errors") {
    const std::vector<std::size_t> bad_range = {3, 99};
    CHECK_THROWS_AS(principal_submatrix(rho, bad_range), std::invalid_argument);
    const std::vector<std::size_t> not_increasing = {3, 3};
    CHECK_THROWS_AS(principal_submatrix(rho, not_increasing), std::invalid_argument);
  }
}

TEST_CASE("principal submatrices of PSD matrices stay PSD") {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 200; ++seed) {
    Rng rng(seed);
    const std::size_t n = 3 + seed % 5;
    const HermitianMatrix psd = rng.gram(n);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (rng.uniform() < 0.6) idx.push_back(i);
    if (idx.empty()) continue;
    const auto res = is_psd(principal_submatrix(psd, idx));
    CHECK(res.psd);
    ++checked;
  }
}

TEST_CASE("tensor product") {
  SUBCASE("identity times identity") {
    const ComplexMatrix i4 = tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
    CHECK(max_abs_diff(i4, ComplexMatrix::identity(4)) == 0.0);
  }
  SUBCASE("projector puts the factor in the top-left block") {
    ComplexMatrix proj(2);
    proj(0, 0) = 1.0;
    const ComplexMatrix b = matrix2({1, 1}, {2, 0}, {3, -1}, {4, 0});
    const ComplexMatrix prod = tensor_product(proj, b);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        const Complex want = (r < 2 && c < 2) ? b(r, c) : Complex(0.0);
        CHECK(prod(r, c) == want);
      }
  }
  SUBCASE("trace is multiplicative on seeded inputs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Rng rng(seed);
      const ComplexMatrix a = rng.hermitian(2).matrix();
      const ComplexMatrix b = rng.hermitian(3).matrix();
      const Complex lhs = tensor_product(a, b).trace();
      const Complex rhs = a.trace() * b.trace();
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
    }
  }
  SUBCASE("associativity is exact") {
    // small integer entries keep every product exactly representable,
    // so this checks the index layout alone
    Rng rng(7);
    auto integer_matrix = [&rng](std::size_t n) {
      ComplexMatrix m(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          m(r, c) = Complex(std::floor(5.0 * rng.uniform()) - 2.0,
                            std::floor(3.0 * rng.uniform()) - 1.0);
      return m;
    };
    const ComplexMatrix a = integer_matrix(2);
    const ComplexMatrix b = integer_matrix(2);
    const ComplexMatrix c = integer_matrix(3);
    const ComplexMatrix left = tensor_product(tensor_product(a, b), c);
    const ComplexMatrix right = tensor_product(a, tensor_product(b, c));
    CHECK(max_abs_diff(left, right) == 0.0);
  }
}
