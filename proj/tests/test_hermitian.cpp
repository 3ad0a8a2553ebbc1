#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "micpovm/error.hpp"
#include "micpovm/frame.hpp"
#include "micpovm/hermitian.hpp"
#include "micpovm/povm.hpp"
#include "support.hpp"

using namespace micpovm;
using micpovm::test::max_abs_diff;

namespace {

HermitianOperator diag(std::initializer_list<double> v) {
  RealVector d(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) d(i++) = x;
  return HermitianOperator::from_real(RealMatrix(d.asDiagonal()));
}

double reconstruction_error(const HermitianOperator& h, const EigenDecomposition& e) {
  const ComplexMatrix v = e.eigenvectors;
  const ComplexMatrix r = v * e.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
  return (r - h.matrix()).norm();
}

}  // namespace

TEST_CASE("construction symmetrizes and rejects clearly non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(0.0, 1.0), Complex(0.0, -1.0 + 1e-12), Complex(2.0, 1e-13);
  HermitianOperator h(m);
  CHECK(h(0, 1) == std::conj(h(1, 0)));
  CHECK(h(1, 1).imag() == 0.0);

  ComplexMatrix bad(2, 2);
  bad << 1.0, 1.0, 0.0, 1.0;
  CHECK_THROWS_AS(HermitianOperator{bad}, Error);
  CHECK_THROWS_AS(HermitianOperator{ComplexMatrix(2, 3)}, Error);
}

TEST_CASE("eig_hermitian on identity, diagonal and Pauli x") {
  auto e = eig_hermitian(HermitianOperator::identity(3));
  CHECK(e.eigenvalues.isApprox(RealVector::Ones(3)));

  e = eig_hermitian(diag({2.0, -1.0}));
  CHECK(e.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(2.0));
  // Permuted standard basis, up to phase.
  CHECK(std::abs(e.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(e.eigenvectors(0, 1)) == doctest::Approx(1.0));

  // det(sigma_x - l I) = l^2 - 1
  e = eig_hermitian(pauli(0));
  CHECK(e.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigen-reconstruction and orthonormality on random Hermitian matrices") {
  Rng rng(2024);
  for (int d : {2, 3, 4, 5, 8}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto h = test::random_hermitian(d, rng, trial % 7 == 0 ? 1e3 : 1.0);
      const auto e = eig_hermitian(h);
      const double scale = std::max(1.0, frobenius_norm(h));
      REQUIRE(reconstruction_error(h, e) <= 1e-9 * scale);
      const ComplexMatrix vv = e.eigenvectors.adjoint() * e.eigenvectors;
      REQUIRE((vv - ComplexMatrix::Identity(d, d)).norm() <= 1e-10);
      for (int r = 0; r < d; ++r) {
        const ComplexVector res = h.matrix() * e.eigenvectors.col(r) - e.eigenvalues(r) * e.eigenvectors.col(r);
        REQUIRE(res.norm() <= 1e-9 * scale);
      }
      for (int r = 1; r < d; ++r) REQUIRE(e.eigenvalues(r - 1) <= e.eigenvalues(r));
      // Independent oracle: Eigen's tridiagonal QR solver.
      REQUIRE((e.eigenvalues - test::oracle_eigenvalues(h)).norm() <= 1e-9 * scale);
      // Norm dominance of the Frobenius norm over the spectrum.
      REQUIRE(frobenius_norm(h) >= e.eigenvalues.cwiseAbs().maxCoeff() - 1e-12);
    }
  }
}

TEST_CASE("degenerate and zero spectra") {
  CHECK(min_eigenvalue(HermitianOperator::zero(4)) == 0.0);
  Rng rng(5);
  const auto psi = test::random_unit_vector(5, rng);
  const auto e = eig_hermitian(HermitianOperator::outer(psi));
  CHECK(e.eigenvalues(4) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(e.eigenvalues(0)) < 1e-12);
  CHECK(eig_hermitian(HermitianOperator::identity(1)).eigenvalues(0) == 1.0);
}

TEST_CASE("min_eigenvalue examples") {
  CHECK(min_eigenvalue(HermitianOperator::identity(2) + pauli(2)) == doctest::Approx(0.0));
  // Tetrahedral dual Q^1 = (1/2)(5Q_1 - Q_2 - Q_3 - Q_4) = 3 Q_1 - I has spectrum {-1, 2}.
  const auto dirs = tetrahedral_directions();
  const auto q = coherent_projectors(dirs, 2);
  const auto dual1 = 0.5 * (5.0 * q[0] - q[1] - q[2] - q[3]);
  CHECK(min_eigenvalue(dual1) == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("variational property of the smallest eigenvalue") {
  Rng rng(77);
  for (int d : {2, 3, 5}) {
    const auto h = test::random_hermitian(d, rng);
    const double lo = min_eigenvalue(h);
    for (int k = 0; k < 1000; ++k) {
      const auto psi = test::random_unit_vector(d, rng);
      const double ev = (psi.adjoint() * h.matrix() * psi)(0).real();
      REQUIRE(ev >= lo - 1e-9);
    }
  }
}

TEST_CASE("is_psd") {
  Rng rng(3);
  CHECK(is_psd(HermitianOperator::outer(test::random_unit_vector(3, rng)), 1e-10));
  CHECK_FALSE(is_psd(pauli(2), 1e-10));
  for (int i = 0; i < 3; ++i) CHECK(is_psd(HermitianOperator::identity(2) + pauli(i), 1e-10));
}

TEST_CASE("sqrt_psd") {
  CHECK(max_abs_diff(sqrt_psd(HermitianOperator::identity(3)).matrix(), ComplexMatrix::Identity(3, 3)) < 1e-14);
  CHECK(max_abs_diff(sqrt_psd(diag({4.0, 9.0})).matrix(), diag({2.0, 3.0}).matrix()) < 1e-14);
  Rng rng(9);
  const auto psi = test::random_unit_vector(3, rng);
  const auto proj = HermitianOperator::outer(psi);
  CHECK(max_abs_diff(sqrt_psd(4.0 * proj).matrix(), (2.0 * proj).matrix()) < 1e-12);

  CHECK_THROWS_AS(sqrt_psd(pauli(2)), Error);
  // Slightly negative round-off is clamped.
  CHECK_NOTHROW(sqrt_psd(diag({1.0, -5e-11})));
}

TEST_CASE("inv_sqrt_pd") {
  CHECK(max_abs_diff(inv_sqrt_pd(HermitianOperator::identity(2)).matrix(), ComplexMatrix::Identity(2, 2)) < 1e-14);
  CHECK(max_abs_diff(inv_sqrt_pd(diag({4.0, 0.25})).matrix(), diag({0.5, 2.0}).matrix()) < 1e-14);

  // S = sum of tetrahedral projectors = 2 I.
  const auto q = coherent_projectors(tetrahedral_directions(), 2);
  HermitianOperator s = q[0] + q[1] + q[2] + q[3];
  CHECK(max_abs_diff(inv_sqrt_pd(s).matrix(), ComplexMatrix::Identity(2, 2) / std::sqrt(2.0)) < 1e-12);

  try {
    inv_sqrt_pd(diag({1.0, 0.0}));
    FAIL("expected NotStrictlyPositive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStrictlyPositive);
  }
}

TEST_CASE("square-root round trips on random positive definite matrices") {
  Rng rng(11);
  for (int d : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto h = test::random_pd(d, rng);
      const auto r = sqrt_psd(h);
      REQUIRE((r.matrix() * r.matrix() - h.matrix()).norm() <= 1e-9 * std::max(1.0, frobenius_norm(h)));
      REQUIRE(is_psd(r, 1e-10));
      const auto ri = inv_sqrt_pd(h);
      REQUIRE((ri.matrix() * h.matrix() * ri.matrix() - ComplexMatrix::Identity(d, d)).norm() <= 1e-8);
    }
  }
}

TEST_CASE("hs_inner and frobenius_norm") {
  CHECK(hs_inner(HermitianOperator::identity(4), HermitianOperator::identity(4)) == doctest::Approx(4.0));
  CHECK(hs_inner(pauli(0), pauli(2)) == doctest::Approx(0.0));
  const auto q = coherent_projectors(tetrahedral_directions(), 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(hs_inner(q[i], q[j]) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK_THROWS_AS(hs_inner(pauli(0), HermitianOperator::identity(3)), Error);

  Rng rng(1);
  const auto a = test::random_hermitian(3, rng);
  const auto b = test::random_hermitian(3, rng);
  CHECK(hs_inner(a, b) == doctest::Approx(hs_inner(b, a)));
  CHECK(hs_inner(a, a) == doctest::Approx(std::pow(frobenius_norm(a), 2)));

  CHECK(frobenius_norm(HermitianOperator::identity(2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(frobenius_norm(pauli(2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(frobenius_norm(HermitianOperator::zero(3)) == 0.0);
}
