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

#include "qaem/encoder.hpp"

#include <cmath>

#include "qaem/rng.hpp"

namespace qaem {

namespace {

// Twice-iterated Gram-Schmidt step: returns the residual of `v` against the
// columns accumulated in `basis` (size `count`). Deterministic.
Vector orthogonal_residual(const Matrix& basis, Index count, Vector v) {
  for (int round = 0; round < 2; ++round) {
    for (Index i = 0; i < count; ++i) {
      v -= basis.col(i).dot(v) * basis.col(i);
    }
  }
  return v;
}

}  // namespace

Projector SupportBasis::projector() const {
  const Index n = space.dim();
  Matrix p = Matrix::Zero(n, n);
  for (const PureState& v : vectors) {
    p += v.amplitudes() * v.amplitudes().adjoint();
  }
  return Projector(space, std::move(p));
}

EncoderPipeline::EncoderPipeline(Matrix u, Projector latent)
    : encode_unitary(std::move(u)),
      latent_projector(std::move(latent)),
      junk_projector(latent_projector.complement()) {
  require(encode_unitary.rows() == latent_projector.space().dim() &&
              encode_unitary.cols() == encode_unitary.rows(),
          Errc::dimension_mismatch,
          "encoder size does not match the measurement space");
  require(is_unitary(encode_unitary, tol().unitary), Errc::non_unitary,
          "encoder matrix is not unitary");
}

SupportBasis orthonormal_support_basis(const std::vector<PureState>& states,
                                       double rank_tol) {
  require(!states.empty(), Errc::empty_support, "no input states");
  const HilbertSpace& space = states.front().space();
  for (const PureState& s : states) {
    require(s.space() == space, Errc::dimension_mismatch,
            "support states live on different spaces");
  }
  const Index n = space.dim();
  Matrix basis(n, states.size());
  Index count = 0;
  for (const PureState& s : states) {
    Vector residual = orthogonal_residual(basis, count, s.amplitudes());
    const double norm = residual.norm();
    if (norm <= rank_tol) continue;  // linearly dependent, drop
    basis.col(count++) = residual / norm;
  }
  require(count > 0, Errc::empty_support,
          "all inputs are numerically dependent on nothing");
  SupportBasis out;
  out.space = space;
  for (Index i = 0; i < count; ++i) {
    out.vectors.emplace_back(space, Vector(basis.col(i)));
  }
  return out;
}

SupportBasis orthonormal_support_basis(const std::vector<PureState>& states) {
  return orthonormal_support_basis(states, tol().support_rank);
}

namespace {

// Completes `count` orthonormal columns already stored in `basis` to a full
// orthonormal basis by scanning the canonical basis in index order.
void complete_basis(Matrix& basis, Index count) {
  const Index n = basis.rows();
  for (Index j = 0; j < n && count < n; ++j) {
    Vector candidate = Vector::Zero(n);
    candidate(j) = Complex(1.0, 0.0);
    Vector residual = orthogonal_residual(basis, count, std::move(candidate));
    const double norm = residual.norm();
    if (norm <= tol().completion_residual) continue;
    basis.col(count++) = residual / norm;
  }
  require(count == n, Errc::rank_deficient,
          "canonical completion did not span the space");
}

void check_orthonormal(const std::vector<PureState>& vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const Complex overlap =
          vectors[i].amplitudes().dot(vectors[j].amplitudes());
      const double want = i == j ? 1.0 : 0.0;
      require(std::abs(overlap - Complex(want, 0.0)) <=
                  tol().basis_orthonormal,
              Errc::bad_config, "vector set is not orthonormal");
    }
  }
}

}  // namespace

EncoderPipeline build_encoder(const SupportBasis& support,
                              const std::vector<PureState>& latent) {
  require(static_cast<std::size_t>(support.size()) == latent.size(),
          Errc::bad_split,
          "latent vector count must match the support dimension");
  const HilbertSpace& space = support.space;
  for (const PureState& v : latent) {
    require(v.space() == space, Errc::dimension_mismatch,
            "latent vectors live on a different space");
  }
  check_orthonormal(support.vectors);
  check_orthonormal(latent);

  const Index n = space.dim();
  const Index k = support.size();
  Matrix from(n, n), to(n, n);
  for (Index i = 0; i < k; ++i) {
    from.col(i) = support.vectors[i].amplitudes();
    to.col(i) = latent[i].amplitudes();
  }
  complete_basis(from, k);
  complete_basis(to, k);
  Matrix u = to * from.adjoint();

  Matrix p = Matrix::Zero(n, n);
  for (const PureState& v : latent) {
    p += v.amplitudes() * v.amplitudes().adjoint();
  }
  return EncoderPipeline(std::move(u), Projector(space, std::move(p)));
}

std::pair<Projector, Projector> latent_projector(const HilbertSpace& space,
                                                 int ancilla) {
  require(ancilla >= 0 && ancilla <= space.factors(), Errc::bad_split,
          "ancilla count outside the register");
  Index head = 1;
  for (int q = 0; q < ancilla; ++q) head *= space.factor_dims[q];
  const Index n = space.dim();
  const Index rest = n / head;
  // Leading factors pinned to |0>: the kept block is the first `rest`
  // indices because factor 0 is the most significant digit.
  Matrix m = Matrix::Zero(n, n);
  m.topLeftCorner(rest, rest) = Matrix::Identity(rest, rest);
  Projector keep(space, std::move(m));
  Projector junk = keep.complement();
  return {std::move(keep), std::move(junk)};
}

Projector random_subspace_projector(const HilbertSpace& space, Index k,
                                    uint64_t seed) {
  const Index n = space.dim();
  require(k >= 1 && k <= n, Errc::bad_split,
          "subspace rank outside [1, dim]");
  Rng rng(seed);
  Matrix basis(n, k);
  Index count = 0;
  while (count < k) {
    Vector draw(n);
    for (Index i = 0; i < n; ++i) draw(i) = rng.cgaussian();
    Vector residual = orthogonal_residual(basis, count, std::move(draw));
    const double norm = residual.norm();
    if (norm <= tol().support_rank) continue;  // essentially impossible
    basis.col(count++) = residual / norm;
  }
  Matrix p = Matrix::Zero(n, n);
  for (Index i = 0; i < k; ++i) p += basis.col(i) * basis.col(i).adjoint();
  return Projector(space, std::move(p));
}

}  // namespace qaem
