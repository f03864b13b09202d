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

namespace qaem {

Matrix kron_all(const std::vector<Matrix>& factors) {
  require(!factors.empty(), Errc::dimension_mismatch,
          "kron_all needs at least one factor");
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

bool is_hermitian(const Eigen::Ref<const Matrix>& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = a.norm();
  return (a - a.adjoint()).norm() <= rel_tol * (scale > 0.0 ? scale : 1.0);
}

bool is_unitary(const Eigen::Ref<const Matrix>& u, double tol_abs) {
  if (u.rows() != u.cols()) return false;
  const Matrix gram = u.adjoint() * u;
  return (gram - Matrix::Identity(u.rows(), u.cols())).norm() <= tol_abs;
}

bool all_finite(const Eigen::Ref<const Matrix>& a) {
  return a.allFinite();
}

Matrix HermitianEigen::reconstruct() const {
  return eigenvectors *
         eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

HermitianEigen hermitian_eig(const Eigen::Ref<const Matrix>& a) {
  require(a.rows() == a.cols(), Errc::dimension_mismatch,
          "eigendecomposition needs a square matrix");
  require(all_finite(a), Errc::non_hermitian, "non-finite entries");
  require(is_hermitian(a, tol().hermitian), Errc::non_hermitian,
          "matrix fails the Hermiticity bound");
  // Symmetrize so round-off in the anti-Hermitian part cannot bias the
  // solver; the input is already Hermitian within tolerance.
  const Matrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  require(solver.info() == Eigen::Success, Errc::no_convergence,
          "eigensolver did not converge");
  HermitianEigen out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

Matrix unitary_from_hermitian(const Eigen::Ref<const Matrix>& h, double t) {
  const HermitianEigen eig = hermitian_eig(h);
  Vector phases(eig.eigenvalues.size());
  for (Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -eig.eigenvalues(i) * t));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix psd_sqrt(const Eigen::Ref<const Matrix>& a) {
  const HermitianEigen eig = hermitian_eig(a);
  RealVector roots(eig.eigenvalues.size());
  for (Index i = 0; i < roots.size(); ++i) {
    double w = eig.eigenvalues(i);
    require(w >= -tol().psd_clamp, Errc::not_psd,
            "eigenvalue below the PSD clamp window");
    if (w < 0.0) w = 0.0;
    roots(i) = std::sqrt(w);
  }
  return eig.eigenvectors * roots.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

Matrix pauli_matrix(Pauli p) {
  Matrix m(2, 2);
  switch (p) {
    case Pauli::x:
      m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
      break;
    case Pauli::y:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case Pauli::z:
      m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
      break;
  }
  return m;
}

Matrix pauli_on(int n_qubits, int site, Pauli p) {
  require(n_qubits >= 1, Errc::bad_subsystem, "need at least one qubit");
  require(site >= 0 && site < n_qubits, Errc::bad_index,
          "site outside the register");
  const Index left = Index{1} << site;
  const Index right = Index{1} << (n_qubits - site - 1);
  return kron(kron(Matrix::Identity(left, left), pauli_matrix(p)),
              Matrix::Identity(right, right));
}

}  // namespace qaem
