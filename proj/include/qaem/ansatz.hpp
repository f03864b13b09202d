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

#include <string>
#include <utility>
#include <vector>

#include "qaem/numkit.hpp"

namespace qaem {

/// Flat parameter vector plus the fingerprint of the layout it was built
/// for. Saved parameter files round-trip bit-identically.
struct ParamVector {
  std::string fingerprint;
  RealVector values;
};

/// Layered circuit: per layer, one arbitrary single-qubit rotation on each
/// qubit (ZYZ Euler triple) followed by a global entangling unitary
/// exp(-i H), with
///   H = sum_i (h_i^x X_i + h_i^z Z_i)
///     + sum_{i<j} (J_ij^x X_i X_j + J_ij^y Y_i Y_j + J_ij^z Z_i Z_j).
/// Layers are grouped into stage groups trained one at a time.
///
/// Per-layer parameter block, in index order:
///   [0, 3n)       ZYZ angles, qubit-major: (z1, y, z2) for qubit 0, ...
///   [3n, 4n)      h_i^x
///   [4n, 5n)      h_i^z
///   [5n, end)     couplings for pairs (i, j), i < j, lexicographic,
///                 three values (J^x, J^y, J^z) per pair
/// Block size: 5n + 3n(n-1)/2. Total: groups * layers_per_group * block.
class LayeredAnsatz {
 public:
  LayeredAnsatz(int n_qubits, int layers_per_group, int groups);

  int qubits() const { return n_; }
  int layers_per_group() const { return layers_per_group_; }
  int groups() const { return groups_; }

  Index params_per_layer() const;
  Index params_per_group() const;
  Index param_count() const;

  /// Human-readable binding of a flat index to (group, layer, role).
  std::string describe_index(Index k) const;

  std::string fingerprint() const;

  ParamVector zero_params() const;
  ParamVector random_params(double half_range, uint64_t seed) const;

  /// Unitary of the first `groups_active` groups. Throws
  /// Errc::layout_mismatch if theta does not match the layout.
  Matrix unitary(const ParamVector& theta, int groups_active) const;
  Matrix unitary(const ParamVector& theta) const;

  /// Unitary of a single group evaluated on that group's parameter slice.
  Matrix group_unitary(const RealVector& group_theta, int group) const;

  /// Entangling Hamiltonian of one layer, from the (h, J) tail of the
  /// layer's parameter block. Hermitian by construction.
  Matrix layer_hamiltonian(const Eigen::Ref<const RealVector>& block) const;

 private:
  int n_;
  int layers_per_group_;
  int groups_;
  std::vector<Matrix> pauli_terms_;  // H basis terms, fixed order
};

/// Product of generator exponentials on a d-level system, one factor per
/// (i, j) index pair in the fixed lexicographic order.
///
/// Factor conventions, selected by `mode`:
///   literal:        exp(i a |i><j|) taken literally; for i != j the
///                   generator is nilpotent and the factor I + i a |i><j|
///                   is not unitary.
///   hermitian_pair: exp(i a (|i><j| + |j><i|)) for i != j, a unitary
///                   Givens-style rotation on the (i, j) plane.
/// Diagonal factors (i == j) are the phase diag(..., e^{i a}, ...) in both
/// modes. Experiments use hermitian_pair; the literal reading exists so the
/// non-unitarity of the printed product can be measured.
struct QuditGeneratorAnsatz {
  enum class Mode { literal, hermitian_pair };

  Index d = 0;
  std::vector<std::pair<int, int>> pairs;
  Mode mode = Mode::hermitian_pair;

  /// All (i, j) with i, j in [lo, hi], lexicographic.
  static QuditGeneratorAnsatz full(Index d, int lo, int hi, Mode mode);

  Index param_count() const { return static_cast<Index>(pairs.size()); }
  std::string fingerprint() const;
  ParamVector zero_params() const;
};

Matrix qudit_generator_unitary(const QuditGeneratorAnsatz& ansatz,
                               const RealVector& angles);

/// theta_i -> theta_i + delta_i with delta_i ~ N(0, eps_circuit^2),
/// deterministic per seed.
ParamVector perturb_params(const ParamVector& theta, double eps_circuit,
                           uint64_t seed);

}  // namespace qaem
