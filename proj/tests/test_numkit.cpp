// Copyright 2026 The qaem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaem/numkit.hpp"

#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace qaem {
namespace {

using test::fnorm;
using test::random_hermitian;
using test::random_matrix;

// Independent oracle for exp(-i H t): plain Taylor series, valid for the
// small norms used here.
Matrix taylor_exp(const Matrix& h, double t) {
  const Index n = h.rows();
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  const Matrix a = Complex(0.0, -t) * h;
  for (int k = 1; k <= 80; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

TEST_CASE("kron matches the hand-expanded 2x2 block layout") {
  Matrix a(2, 2), b(2, 2);
  a << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(0, 1);
  b << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  // Block (i, j) equals a(i, j) * b.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(fnorm(k.block(2 * i, 2 * j, 2, 2), a(i, j) * b) == 0.0);
  // Spot entries.
  CHECK(k(0, 1) == Complex(1, 0));
  CHECK(k(0, 3) == Complex(2, 0));
  CHECK(k(2, 3) == Complex(0, 1));
}

TEST_CASE("kron is associative and kron_all folds left") {
  const Matrix a = random_matrix(2, 2, 11);
  const Matrix b = random_matrix(3, 3, 12);
  const Matrix c = random_matrix(2, 2, 13);
  CHECK(fnorm(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
  CHECK(fnorm(kron_all({a, b, c}), kron(kron(a, b), c)) == 0.0);
}

TEST_CASE("kron mixed real/complex arguments promote to complex") {
  Eigen::MatrixXd a(2, 2);
  a << 1, 0, 0, -1;
  const Matrix b = random_matrix(2, 2, 14);
  const Matrix k = kron(a, b);
  CHECK(fnorm(k.block(2, 2, 2, 2), -b) == 0.0);
}

TEST_CASE("pauli matrices have their textbook entries") {
  const Matrix x = pauli_matrix(Pauli::x);
  const Matrix y = pauli_matrix(Pauli::y);
  const Matrix z = pauli_matrix(Pauli::z);
  CHECK(x(0, 1) == Complex(1, 0));
  CHECK(x(1, 0) == Complex(1, 0));
  CHECK(x(0, 0) == Complex(0, 0));
  CHECK(y(0, 1) == Complex(0, -1));
  CHECK(y(1, 0) == Complex(0, 1));
  CHECK(z(0, 0) == Complex(1, 0));
  CHECK(z(1, 1) == Complex(-1, 0));
  // Algebra: X Y = i Z, X^2 = I.
  CHECK(fnorm(x * y, Complex(0, 1) * z) == 0.0);
  CHECK(fnorm(x * x, Matrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("pauli_on places the factor at the requested site") {
  const Matrix z = pauli_matrix(Pauli::z);
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(fnorm(pauli_on(2, 0, Pauli::z), kron(z, i2)) == 0.0);
  CHECK(fnorm(pauli_on(2, 1, Pauli::z), kron(i2, z)) == 0.0);
  CHECK(fnorm(pauli_on(3, 1, Pauli::x),
              kron(kron(i2, pauli_matrix(Pauli::x)), i2)) == 0.0);
  CHECK_RAISES(Errc::bad_index, pauli_on(2, 2, Pauli::x));
  CHECK_RAISES(Errc::bad_subsystem, pauli_on(0, 0, Pauli::x));
}

TEST_CASE("hermitian_eig solves the 2x2 oracle exactly") {
  Matrix a(2, 2);
  a << Complex(2, 0), Complex(1, 0), Complex(1, 0), Complex(2, 0);
  const HermitianEigen eig = hermitian_eig(a);
  // Eigenvalues of [[2,1],[1,2]] are 1 and 3, returned ascending.
  CHECK(eig.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(fnorm(eig.reconstruct(), a) < 1e-14);
}

TEST_CASE("hermitian_eig properties on random input") {
  const Matrix h = random_hermitian(8, 21);
  const HermitianEigen eig = hermitian_eig(h);
  // Ascending order.
  for (Index i = 1; i < eig.eigenvalues.size(); ++i)
    CHECK(eig.eigenvalues(i) >= eig.eigenvalues(i - 1));
  // Eigenvalue sum equals the trace.
  CHECK(eig.eigenvalues.sum() ==
        doctest::Approx(h.trace().real()).epsilon(1e-12));
  // Orthonormal eigenvectors and exact reconstruction.
  CHECK(fnorm(eig.eigenvectors.adjoint() * eig.eigenvectors,
              Matrix::Identity(8, 8)) < 1e-12);
  CHECK(fnorm(eig.reconstruct(), h) < 1e-12);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Matrix a = random_matrix(3, 3, 22);
  a(0, 1) += Complex(1.0, 0.0);  // break symmetry decisively
  CHECK_RAISES(Errc::non_hermitian, hermitian_eig(a));
  CHECK_RAISES(Errc::dimension_mismatch, hermitian_eig(random_matrix(2, 3, 23)));
}

TEST_CASE("unitary_from_hermitian reproduces closed-form qubit rotations") {
  const Matrix z = pauli_matrix(Pauli::z);
  // exp(-i pi Z) = -I: both levels pick up a half-turn phase.
  CHECK(fnorm(unitary_from_hermitian(z, std::numbers::pi),
              -Matrix::Identity(2, 2)) < 1e-14);
  // exp(-i (pi/2) Z) = diag(-i, i).
  Matrix quarter(2, 2);
  quarter << Complex(0, -1), Complex(0, 0), Complex(0, 0), Complex(0, 1);
  CHECK(fnorm(unitary_from_hermitian(z, 0.5 * std::numbers::pi), quarter) <
        1e-14);
}

TEST_CASE("unitary_from_hermitian matches the Taylor oracle") {
  Matrix h = random_hermitian(6, 31);
  h /= h.norm();  // keep the series comfortably convergent
  for (const double t : {0.1, 0.7, 1.9}) {
    const Matrix u = unitary_from_hermitian(h, t);
    CHECK(is_unitary(u, 1e-12));
    CHECK(fnorm(u, taylor_exp(h, t)) < 1e-12);
  }
}

TEST_CASE("unitary_from_hermitian is a one-parameter group") {
  Matrix h = random_hermitian(5, 32);
  h /= h.norm();
  const Matrix us = unitary_from_hermitian(h, 0.3);
  const Matrix ut = unitary_from_hermitian(h, 1.1);
  const Matrix ust = unitary_from_hermitian(h, 1.4);
  CHECK(fnorm(us * ut, ust) < 1e-12);
  // t = 0 is the identity.
  CHECK(fnorm(unitary_from_hermitian(h, 0.0), Matrix::Identity(5, 5)) <
        1e-14);
}

TEST_CASE("psd_sqrt takes the principal root") {
  Matrix a(2, 2);
  a << Complex(4, 0), Complex(0, 0), Complex(0, 0), Complex(9, 0);
  Matrix expected(2, 2);
  expected << Complex(2, 0), Complex(0, 0), Complex(0, 0), Complex(3, 0);
  CHECK(fnorm(psd_sqrt(a), expected) < 1e-14);
}

TEST_CASE("psd_sqrt squares back and iterates to the fourth root") {
  const Matrix g = random_matrix(6, 6, 41);
  const Matrix a = g * g.adjoint();
  const Matrix b = psd_sqrt(a);
  CHECK(fnorm(b * b, a) < 1e-9 * a.norm());
  const Matrix c = psd_sqrt(b);  // fourth root of a
  CHECK(fnorm(c * c * c * c, a) < 1e-8 * a.norm());
}

TEST_CASE("psd_sqrt clamps tiny negatives and rejects real ones") {
  Matrix tiny(2, 2);
  tiny << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1e-12, 0);
  const Matrix root = psd_sqrt(tiny);  // clamped to diag(1, 0)
  CHECK(root(1, 1).real() == 0.0);
  Matrix negative(2, 2);
  negative << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-0.5, 0);
  CHECK_RAISES(Errc::not_psd, psd_sqrt(negative));
}

TEST_CASE("predicate helpers") {
  CHECK(is_hermitian(random_hermitian(4, 51), 1e-12));
  CHECK_FALSE(is_hermitian(random_matrix(4, 4, 52), 1e-12));
  CHECK(is_unitary(Matrix::Identity(3, 3), 1e-12));
  CHECK_FALSE(is_unitary(2.0 * Matrix::Identity(3, 3), 1e-12));
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_FALSE(all_finite(bad));
  CHECK(all_finite(Matrix::Identity(2, 2)));
}

}  // namespace
}  // namespace qaem
