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

#pragma once

#include <doctest.h>

#include "qaem/errors.hpp"
#include "qaem/numkit.hpp"
#include "qaem/qstate.hpp"
#include "qaem/rng.hpp"

namespace qaem::test {

/// Frobenius distance between two dense matrices.
inline double fnorm(const Matrix& a, const Matrix& b) {
  return (a - b).norm();
}

/// Seeded random complex matrix with i.i.d. standard complex Gaussian
/// entries; the workhorse for property tests.
inline Matrix random_matrix(Index rows, Index cols, uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = rng.cgaussian();
  return m;
}

inline Matrix random_hermitian(Index n, uint64_t seed) {
  const Matrix a = random_matrix(n, n, seed);
  return 0.5 * (a + a.adjoint());
}

/// Random full-rank density matrix G G^dag / tr(G G^dag).
inline DensityMatrix random_density(const HilbertSpace& space, uint64_t seed) {
  const Matrix g = random_matrix(space.dim(), space.dim(), seed);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(space, std::move(rho));
}

/// Random normalized pure state.
inline PureState random_pure(const HilbertSpace& space, uint64_t seed) {
  Rng rng(seed);
  Vector v(space.dim());
  for (Index i = 0; i < v.size(); ++i) v(i) = rng.cgaussian();
  v.normalize();
  return PureState(space, std::move(v));
}

/// Asserts that `body` throws a qaem::Error with the given code.
#define CHECK_RAISES(code_expected, body)                       \
  do {                                                          \
    bool caught_ = false;                                       \
    try {                                                       \
      body;                                                     \
    } catch (const qaem::Error& e_) {                           \
      caught_ = true;                                           \
      CHECK(e_.code() == (code_expected));                      \
    }                                                           \
    CHECK_MESSAGE(caught_, "expected an Error from: " #body);   \
  } while (0)

}  // namespace qaem::test
