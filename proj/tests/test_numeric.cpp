#include <doctest.h>

#include <cmath>
#include <limits>

#include "revbound/numeric.hpp"
#include "revbound/sampling.hpp"
#include "support.hpp"

using namespace revbound;
using testsupport::I;

TEST_CASE("inner: bra-ket convention, conjugate-linear in the first slot") {
  CVector e0(2), e1(2), half(2);
  e0[0] = 1.0;
  e1[1] = 1.0;
  half[0] = half[1] = 1.0 / std::sqrt(2.0);

  CHECK(std::abs(inner(e0, e1)) == 0.0);
  CHECK(inner(half, half).real() == doctest::Approx(1.0).epsilon(1e-15));

  CVector ie1(2), ie0(2);
  ie1[1] = I;
  ie0[0] = I;
  CHECK(std::abs(inner(ie1, e0)) == 0.0);
  CHECK(inner(ie0, e0) == Complex(0.0, -1.0));

  CVector wrong(3);
  CHECK_THROWS_AS((void)inner(e0, wrong), std::invalid_argument);
}

TEST_CASE("inner: conjugate symmetry and Cauchy-Schwarz over random pairs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t dim = 2 + seed % 15;
    const CVector v = testsupport::random_vector(dim, derive_seed(seed, 0));
    const CVector w = testsupport::random_vector(dim, derive_seed(seed, 1));
    const Complex vw = inner(v, w);
    const Complex wv = inner(w, v);
    CHECK(std::abs(vw - std::conj(wv)) <= 1e-14 * (1.0 + std::abs(vw)));
    CHECK(std::abs(vw) <= norm(v) * norm(w) + 1e-12);
  }
}

TEST_CASE("norm: examples and homogeneity") {
  CVector zero(3);
  CHECK(norm(zero) == 0.0);

  CVector v34(2);
  v34[0] = 3.0;
  v34[1] = 4.0 * I;
  CHECK(norm(v34) == doctest::Approx(5.0).epsilon(1e-15));

  CVector half(2);
  half[0] = half[1] = 1.0 / std::sqrt(2.0);
  CHECK(norm(half) == doctest::Approx(1.0).epsilon(1e-15));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Complex c(rng.next_normal(), rng.next_normal());
    const CVector v = testsupport::random_vector(2 + seed % 8, derive_seed(seed, 2));
    CHECK(norm(c * v) == doctest::Approx(std::abs(c) * norm(v)).epsilon(1e-12));
  }
}

TEST_CASE("matvec: identity, sigma_x flip, zero matrix") {
  const CVector v = testsupport::random_vector(4, 7);
  const CVector iv = matvec(identity_matrix(4), v);
  for (std::size_t k = 0; k < 4; ++k) CHECK(iv[k] == v[k]);

  CVector e0(2);
  e0[0] = 1.0;
  const CVector flipped = matvec(testsupport::sigma_x(), e0);
  CHECK(flipped[0] == Complex(0.0));
  CHECK(flipped[1] == Complex(1.0));

  const CVector zeroed = matvec(CMatrix(4), v);
  for (std::size_t k = 0; k < 4; ++k) CHECK(zeroed[k] == Complex(0.0));

  CHECK_THROWS_AS((void)matvec(CMatrix(3), v), std::invalid_argument);
}

TEST_CASE("hermiticity_defect: Pauli, nilpotent, diagonal") {
  CHECK(hermiticity_defect(testsupport::sigma_y()) == 0.0);

  CMatrix n(2);
  n.at(0, 1) = 1.0;
  CHECK(hermiticity_defect(n) == doctest::Approx(1.0).epsilon(1e-15));

  CMatrix d(3);
  d.at(0, 0) = -2.0;
  d.at(1, 1) = 0.5;
  d.at(2, 2) = 7.0;
  CHECK(hermiticity_defect(d) == 0.0);
}

TEST_CASE("finiteness is validated at construction") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(CVector({Complex(1.0), Complex(nan)}), std::invalid_argument);
  CHECK_THROWS_AS(CMatrix(1, {Complex(0.0, nan)}), std::invalid_argument);
  CHECK_THROWS_AS(CMatrix(2, {Complex(1.0)}), std::invalid_argument);
}

TEST_CASE("eig_hermitian: diagonal read-off and degenerate spectrum") {
  const EigenDecomposition ez = eig_hermitian(testsupport::sigma_z());
  CHECK(ez.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ez.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  const EigenDecomposition eye = eig_hermitian(identity_matrix(3));
  for (double lambda : eye.eigenvalues) CHECK(lambda == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(std::abs(inner(eye.eigenvectors[j], eye.eigenvectors[k]) -
                     (j == k ? 1.0 : 0.0)) <= 1e-10);
}

TEST_CASE("eig_hermitian: sigma_x eigenvectors up to phase") {
  const EigenDecomposition ex = eig_hermitian(testsupport::sigma_x());
  CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  // |<v| (1, -/+1)/sqrt(2)>| = 1 identifies the eigenvector up to phase
  CVector minus(2), plus(2);
  minus[0] = 1.0 / std::sqrt(2.0);
  minus[1] = -1.0 / std::sqrt(2.0);
  plus[0] = plus[1] = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(inner(ex.eigenvectors[0], minus)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(ex.eigenvectors[1], plus)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian: rejects non-Hermitian input") {
  CMatrix n(2);
  n.at(0, 1) = 1.0;
  CHECK_THROWS_AS((void)eig_hermitian(n), std::invalid_argument);
}

TEST_CASE("eig_hermitian: reconstruction, residual, orthonormality over random matrices") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t dim = 2 + seed % 15;  // up to 16
    const Observable h = gue_hermitian(dim, seed, 1.0, "H");
    const CMatrix& m = h.matrix();
    const EigenDecomposition ed = eig_hermitian(m);
    const double scale = 1.0 + frobenius_norm(m);

    REQUIRE(ed.eigenvalues.size() == dim);
    for (std::size_t k = 0; k + 1 < dim; ++k) CHECK(ed.eigenvalues[k] <= ed.eigenvalues[k + 1]);

    // eigen residual ||M v - lambda v||
    for (std::size_t k = 0; k < dim; ++k) {
      const CVector r = matvec(m, ed.eigenvectors[k]) -
                        Complex(ed.eigenvalues[k]) * ed.eigenvectors[k];
      CHECK(norm(r) <= 1e-10 * scale);
    }
    // orthonormality
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        CHECK(std::abs(inner(ed.eigenvectors[j], ed.eigenvectors[k]) -
                       (j == k ? 1.0 : 0.0)) <= 1e-10);
    // reconstruction: || M - sum_k lambda_k v_k v_k^dagger ||_F
    CMatrix rebuilt(dim);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          rebuilt.at(r, c) += ed.eigenvalues[k] * ed.eigenvectors[k][r] *
                              std::conj(ed.eigenvectors[k][c]);
    CHECK(frobenius_norm(m - rebuilt) <= 1e-9 * scale);
  }
}

TEST_CASE("eig_hermitian: deterministic for identical input") {
  const Observable h = gue_hermitian(6, 42, 1.0, "H");
  const EigenDecomposition a = eig_hermitian(h.matrix());
  const EigenDecomposition b = eig_hermitian(h.matrix());
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(a.eigenvalues[k] == b.eigenvalues[k]);
    for (std::size_t j = 0; j < 6; ++j) CHECK(a.eigenvectors[k][j] == b.eigenvectors[k][j]);
  }
}
