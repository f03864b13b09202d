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

#include <vector>

#include "qaem/qstate.hpp"

namespace qaem {

/// Orthonormal basis of the support subspace of a data set.
struct SupportBasis {
  HilbertSpace space;
  std::vector<PureState> vectors;

  Index size() const { return static_cast<Index>(vectors.size()); }

  /// Projector onto the spanned subspace.
  Projector projector() const;
};

/// An encoding unitary together with the latent/junk measurement pair.
/// The junk projector is I - M_L by construction.
struct EncoderPipeline {
  Matrix encode_unitary;
  Projector latent_projector;
  Projector junk_projector;

  EncoderPipeline(Matrix u, Projector latent);

  const HilbertSpace& space() const { return latent_projector.space(); }
};

/// Gram-Schmidt in input order; vectors whose residual norm is at or below
/// `rank_tol` are dropped as linearly dependent. Throws Errc::empty_support
/// if nothing survives.
SupportBasis orthonormal_support_basis(const std::vector<PureState>& states,
                                       double rank_tol);
SupportBasis orthonormal_support_basis(const std::vector<PureState>& states);

/// Unitary mapping support vector i onto latent vector i, completed over
/// the canonical basis in index order (candidates with projection residual
/// below the completion tolerance are skipped). Deterministic: identical
/// inputs give bit-identical unitaries. The pipeline's latent projector is
/// the span of the given latent vectors.
EncoderPipeline build_encoder(const SupportBasis& support,
                              const std::vector<PureState>& latent);

/// (M_L, M_J) for a qubit register, M_L projecting the leading `ancilla`
/// qubits onto |0>.
std::pair<Projector, Projector> latent_projector(const HilbertSpace& space,
                                                 int ancilla);

/// Rank-k projector spanned by k seeded Gaussian vectors after
/// orthonormalization; deterministic per seed.
Projector random_subspace_projector(const HilbertSpace& space, Index k,
                                    uint64_t seed);

}  // namespace qaem
