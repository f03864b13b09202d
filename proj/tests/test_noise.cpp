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

#include "qaem/noise.hpp"

#include <cmath>

#include "test_support.hpp"

namespace qaem {
namespace {

using test::fnorm;
using test::random_density;
using test::random_pure;

TEST_CASE("global depolarizing error term is the maximally mixed state") {
  const HilbertSpace space = HilbertSpace::qubits(2);
  const DensityMatrix rho = random_density(space, 3);
  const NoiseModel model = NoiseModel::global_depolarizing();
  const DensityMatrix err = error_state(model, rho);
  CHECK(fnorm(err.matrix(), 0.25 * Matrix::Identity(4, 4)) == 0.0);
  CHECK(model.name() == "global_depolarizing");
}

TEST_CASE("local depolarizing error term matches the hand oracle on |00>") {
  const HilbertSpace space = HilbertSpace::qubits(2);
  const DensityMatrix rho =
      DensityMatrix::from_pure(PureState::basis(space, 0));
  const DensityMatrix err =
      error_state(NoiseModel::local_depolarizing(), rho);
  // (1/(3n)) sum_{i,mu} sigma_i^mu |00><00| sigma_i^mu with n = 2:
  // each qubit contributes X, Y -> |01>/|10> flips and Z -> |00| itself,
  // so the diagonal is (1/3, 1/3, 1/3, 0) in the order 00, 01, 10, 11.
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 1.0 / 3.0;
  expected(1, 1) = 1.0 / 3.0;
  expected(2, 2) = 1.0 / 3.0;
  CHECK(fnorm(err.matrix(), expected) < 1e-14);
}

TEST_CASE("local depolarizing error term from the summation oracle") {
  const HilbertSpace space = HilbertSpace::qubits(3);
  const DensityMatrix rho = random_density(space, 5);
  Matrix expected = Matrix::Zero(8, 8);
  for (int site = 0; site < 3; ++site) {
    for (const Pauli p : {Pauli::x, Pauli::y, Pauli::z}) {
      const Matrix s = pauli_on(3, site, p);
      expected += s * rho.matrix() * s;
    }
  }
  expected /= 9.0;  // 1/(3n) with n = 3
  const DensityMatrix err =
      error_state(NoiseModel::local_depolarizing(), rho);
  CHECK(fnorm(err.matrix(), expected) < 1e-13);
  CHECK(err.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("leakage error term is the target projector for any input") {
  const HilbertSpace space = HilbertSpace::qudit(5);
  const DensityMatrix rho = random_density(space, 7);
  const DensityMatrix err = error_state(NoiseModel::leakage(), rho);
  Matrix expected = Matrix::Zero(5, 5);
  expected(0, 0) = 1.0;
  CHECK(fnorm(err.matrix(), expected) == 0.0);

  const PureState target = PureState::basis(space, 3);
  const DensityMatrix err2 =
      error_state(NoiseModel::leakage(target), rho);
  CHECK(err2.matrix()(3, 3).real() == doctest::Approx(1.0));
}

TEST_CASE("custom Kraus channels validate completeness and apply correctly") {
  // Amplitude damping with gamma = 0.36: A0 = diag(1, 0.8), A1 = 0.6 E01.
  Matrix a0 = Matrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = 0.8;
  Matrix a1 = Matrix::Zero(2, 2);
  a1(0, 1) = 0.6;
  const NoiseModel model = NoiseModel::custom_kraus({a0, a1});
  const HilbertSpace space = HilbertSpace::qubits(1);
  const DensityMatrix one =
      DensityMatrix::from_pure(PureState::basis(space, 1));
  const DensityMatrix err = error_state(model, one);
  CHECK(err.matrix()(0, 0).real() == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(err.matrix()(1, 1).real() == doctest::Approx(0.64).epsilon(1e-14));

  // Missing A1: sum A^dag A != I.
  CHECK_RAISES(Errc::bad_kind, NoiseModel::custom_kraus({a0}));
  CHECK_RAISES(Errc::bad_kind, NoiseModel::custom_kraus({}));
}

TEST_CASE("apply_noise is the convex mixing law") {
  const HilbertSpace space = HilbertSpace::qubits(2);
  const DensityMatrix rho = random_density(space, 11);
  const NoiseModel model = NoiseModel::global_depolarizing();
  const double eps = 0.3;
  const DensityMatrix noisy = apply_noise(rho, model, eps);
  const Matrix expected =
      (1.0 - eps) * rho.matrix() + eps * 0.25 * Matrix::Identity(4, 4);
  CHECK(fnorm(noisy.matrix(), expected) < 1e-14);
  // Boundary weights.
  CHECK(fnorm(apply_noise(rho, model, 0.0).matrix(), rho.matrix()) == 0.0);
  CHECK(fnorm(apply_noise(rho, model, 1.0).matrix(),
              0.25 * Matrix::Identity(4, 4)) < 1e-14);
  CHECK_RAISES(Errc::bad_epsilon, apply_noise(rho, model, -0.1));
  CHECK_RAISES(Errc::bad_epsilon, apply_noise(rho, model, 1.1));
}

TEST_CASE("pure-state infidelity is exactly linear in the mixing weight") {
  // For pure rho, 1 - F(rho, rho_noisy) = eps * (1 - F(rho, rho_err)).
  const HilbertSpace space = HilbertSpace::qubits(3);
  for (const NoiseModel& model :
       {NoiseModel::global_depolarizing(), NoiseModel::local_depolarizing()}) {
    for (uint64_t seed : {21u, 22u, 23u}) {
      const DensityMatrix rho =
          DensityMatrix::from_pure(random_pure(space, seed));
      for (const double eps : {0.05, 0.37, 0.9}) {
        const double direct = infidelity(rho, apply_noise(rho, model, eps));
        const double scaled =
            eps * infidelity(rho, error_state(model, rho));
        CHECK(std::abs(direct - scaled) <= 1e-10);
      }
    }
  }
}

TEST_CASE("noise model names round-trip through the kind") {
  CHECK(NoiseModel::local_depolarizing().name() == "local_depolarizing");
  CHECK(NoiseModel::leakage().name() == "leakage");
}

}  // namespace
}  // namespace qaem
