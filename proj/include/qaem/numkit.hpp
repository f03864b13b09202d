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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qaem/errors.hpp"
#include "qaem/tolerances.hpp"

namespace qaem {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Kronecker product of two dense expressions. Factor order follows the
/// subsystem convention used everywhere in this library: the first factor
/// is the leftmost (most significant) one.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<std::complex<typename Eigen::NumTraits<
                  typename DerivedA::Scalar>::Real>,
              Eigen::Dynamic, Eigen::Dynamic>
kron(const Eigen::MatrixBase<DerivedA>& a,
     const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          std::complex<Real>(a(i, j)) * b;
  return out;
}

Matrix kron_all(const std::vector<Matrix>& factors);

bool is_hermitian(const Eigen::Ref<const Matrix>& a, double rel_tol);
bool is_unitary(const Eigen::Ref<const Matrix>& u, double tol);
bool all_finite(const Eigen::Ref<const Matrix>& a);

/// Eigendecomposition of a Hermitian matrix: eigenvalues ascending,
/// eigenvector columns orthonormal, V diag(w) V^dag rebuilding the input.
struct HermitianEigen {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
};

/// Throws Errc::non_hermitian when the input fails the relative Hermiticity
/// bound and Errc::no_convergence if the solver gives up.
HermitianEigen hermitian_eig(const Eigen::Ref<const Matrix>& a);

/// exp(-i H t) for Hermitian H, computed through hermitian_eig.
Matrix unitary_from_hermitian(const Eigen::Ref<const Matrix>& h, double t);

/// Principal square root of a PSD matrix. Eigenvalues in [-psd_clamp, 0]
/// are clamped to zero; anything below that throws Errc::not_psd.
Matrix psd_sqrt(const Eigen::Ref<const Matrix>& a);

enum class Pauli { x, y, z };

Matrix pauli_matrix(Pauli p);

/// sigma_i^mu on an n-qubit register, site 0 being the leftmost factor.
Matrix pauli_on(int n_qubits, int site, Pauli p);

}  // namespace qaem
