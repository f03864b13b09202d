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

#include "qaem/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace qaem {

HilbertSpace::HilbertSpace(std::vector<Index> dims)
    : factor_dims(std::move(dims)) {
  for (const Index d : factor_dims) {
    require(d >= 2, Errc::bad_subsystem, "factor dimension below 2");
  }
}

HilbertSpace HilbertSpace::qubits(int n) {
  require(n >= 0, Errc::bad_subsystem, "negative qubit count");
  return HilbertSpace(std::vector<Index>(static_cast<std::size_t>(n), 2));
}

HilbertSpace HilbertSpace::qudit(Index d) {
  return HilbertSpace({d});
}

Index HilbertSpace::dim() const {
  Index n = 1;
  for (const Index d : factor_dims) n *= d;
  return n;
}

PureState::PureState(HilbertSpace space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  require(amplitudes_.size() == space_.dim(), Errc::dimension_mismatch,
          "amplitude count does not match the space dimension");
  require(amplitudes_.allFinite(), Errc::dimension_mismatch,
          "non-finite amplitudes");
  require(std::abs(amplitudes_.squaredNorm() - 1.0) <= tol().state_norm,
          Errc::dimension_mismatch, "state is not normalized");
}

PureState PureState::basis(const HilbertSpace& space, Index index) {
  require(index >= 0 && index < space.dim(), Errc::bad_index,
          "basis index outside the space");
  Vector v = Vector::Zero(space.dim());
  v(index) = Complex(1.0, 0.0);
  return PureState(space, std::move(v));
}

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  require(matrix_.rows() == space_.dim() && matrix_.cols() == space_.dim(),
          Errc::dimension_mismatch,
          "matrix size does not match the space dimension");
  require(all_finite(matrix_), Errc::non_hermitian, "non-finite entries");
  require(is_hermitian(matrix_, tol().hermitian), Errc::non_hermitian,
          "density matrix is not Hermitian");
  require(std::abs(matrix_.trace().real() - 1.0) <= tol().trace_one &&
              std::abs(matrix_.trace().imag()) <= tol().trace_one,
          Errc::dimension_mismatch, "density matrix trace is not 1");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.space(),
                       psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(const HilbertSpace& space) {
  const Index n = space.dim();
  return DensityMatrix(space,
                       Matrix::Identity(n, n) / static_cast<double>(n));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      0.5 * (matrix_ + matrix_.adjoint()), Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, Errc::no_convergence,
          "eigensolver did not converge");
  return solver.eigenvalues()(0);
}

Projector::Projector(HilbertSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  require(matrix_.rows() == space_.dim() && matrix_.cols() == space_.dim(),
          Errc::dimension_mismatch,
          "matrix size does not match the space dimension");
  const double scale = std::max(1.0, matrix_.norm());
  require((matrix_ - matrix_.adjoint()).norm() <= tol().projector * scale,
          Errc::non_hermitian, "projector is not Hermitian");
  require((matrix_ * matrix_ - matrix_).norm() <= tol().projector * scale,
          Errc::not_psd, "matrix is not idempotent");
}

Projector Projector::identity(const HilbertSpace& space) {
  const Index n = space.dim();
  return Projector(space, Matrix::Identity(n, n));
}

Index Projector::rank() const {
  return static_cast<Index>(std::llround(matrix_.trace().real()));
}

Projector Projector::complement() const {
  return Projector(space_,
                   Matrix::Identity(space_.dim(), space_.dim()) - matrix_);
}

Matrix tensor_product(const std::vector<Matrix>& parts) {
  return kron_all(parts);
}

DensityMatrix tensor_product(const std::vector<DensityMatrix>& parts) {
  require(!parts.empty(), Errc::dimension_mismatch,
          "tensor product of an empty sequence");
  std::vector<Index> dims;
  std::vector<Matrix> blocks;
  blocks.reserve(parts.size());
  for (const DensityMatrix& part : parts) {
    dims.insert(dims.end(), part.space().factor_dims.begin(),
                part.space().factor_dims.end());
    blocks.push_back(part.matrix());
  }
  return DensityMatrix(HilbertSpace(std::move(dims)), kron_all(blocks));
}

namespace {

// Decomposes flat index `x` into digits over `dims`, most significant first.
void decode(Index x, const std::vector<Index>& dims, std::vector<Index>& out) {
  for (std::size_t i = dims.size(); i-- > 0;) {
    out[i] = x % dims[i];
    x /= dims[i];
  }
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  const std::vector<Index>& dims = rho.space().factor_dims;
  const int f = rho.space().factors();
  require(!keep.empty(), Errc::bad_subsystem, "must keep at least one factor");
  require(std::is_sorted(keep.begin(), keep.end()) &&
              std::adjacent_find(keep.begin(), keep.end()) == keep.end(),
          Errc::bad_subsystem, "keep list must be strictly ascending");
  for (const int q : keep) {
    require(q >= 0 && q < f, Errc::bad_subsystem,
            "kept factor outside the register");
  }

  std::vector<int> traced;
  {
    std::size_t k = 0;
    for (int q = 0; q < f; ++q) {
      if (k < keep.size() && keep[k] == q) {
        ++k;
      } else {
        traced.push_back(q);
      }
    }
  }

  // Strides of each factor in the flat index (factor 0 most significant).
  std::vector<Index> stride(static_cast<std::size_t>(f), 1);
  for (int q = f - 2; q >= 0; --q) stride[q] = stride[q + 1] * dims[q + 1];

  std::vector<Index> kept_dims, traced_dims;
  for (const int q : keep) kept_dims.push_back(dims[q]);
  for (const int q : traced) traced_dims.push_back(dims[q]);

  Index kept_total = 1, traced_total = 1;
  for (const Index d : kept_dims) kept_total *= d;
  for (const Index d : traced_dims) traced_total *= d;

  std::vector<Index> kd(kept_dims.size()), kc(kept_dims.size()),
      td(traced_dims.size());
  Matrix out = Matrix::Zero(kept_total, kept_total);
  for (Index r = 0; r < kept_total; ++r) {
    decode(r, kept_dims, kd);
    for (Index c = 0; c < kept_total; ++c) {
      decode(c, kept_dims, kc);
      Complex sum(0.0, 0.0);
      for (Index t = 0; t < traced_total; ++t) {
        decode(t, traced_dims, td);
        Index row = 0, col = 0;
        for (std::size_t i = 0; i < keep.size(); ++i) {
          row += kd[i] * stride[keep[i]];
          col += kc[i] * stride[keep[i]];
        }
        for (std::size_t i = 0; i < traced.size(); ++i) {
          const Index off = td[i] * stride[traced[i]];
          row += off;
          col += off;
        }
        sum += rho.matrix()(row, col);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(HilbertSpace(std::move(kept_dims)), std::move(out));
}

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require(rho1.space() == rho2.space(), Errc::dimension_mismatch,
          "fidelity of states on different spaces");
  const double threshold = 1.0 - tol().pure_shortcut;
  if (purity(rho1) > threshold || purity(rho2) > threshold) {
    // For a pure argument the Uhlmann fidelity collapses to the overlap
    // tr(rho1 rho2); evaluating it directly avoids two matrix square roots.
    return clamp01((rho1.matrix() * rho2.matrix()).trace().real());
  }
  const Matrix root = psd_sqrt(rho1.matrix());
  const Matrix inner = root * rho2.matrix() * root;
  const double trace_root = psd_sqrt(inner).trace().real();
  return clamp01(trace_root * trace_root);
}

double infidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return 1.0 - fidelity(rho1, rho2);
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

std::pair<Matrix, double> project_unnormalized(const DensityMatrix& rho,
                                               const Projector& p) {
  require(rho.space() == p.space(), Errc::dimension_mismatch,
          "projector space does not match the state");
  Matrix kept = p.matrix() * rho.matrix() * p.matrix();
  const double weight = kept.trace().real();
  return {std::move(kept), weight};
}

std::pair<DensityMatrix, double> project(const DensityMatrix& rho,
                                         const Projector& p) {
  auto [kept, weight] = project_unnormalized(rho, p);
  require(weight > tol().zero_weight, Errc::zero_weight,
          "post-selection weight is numerically zero");
  return {DensityMatrix(rho.space(), kept / weight), weight};
}

}  // namespace qaem
