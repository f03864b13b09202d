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

#include <utility>
#include <vector>

#include "qaem/numkit.hpp"

namespace qaem {

/// Tensor-factor structure of a Hilbert space. Factor 0 is the leftmost
/// factor and the most significant digit of a basis index; every module
/// shares this convention.
struct HilbertSpace {
  std::vector<Index> factor_dims;

  HilbertSpace() = default;
  explicit HilbertSpace(std::vector<Index> dims);

  static HilbertSpace qubits(int n);
  static HilbertSpace qudit(Index d);

  Index dim() const;
  int factors() const { return static_cast<int>(factor_dims.size()); }

  bool operator==(const HilbertSpace& other) const {
    return factor_dims == other.factor_dims;
  }
};

class PureState {
 public:
  PureState(HilbertSpace space, Vector amplitudes);

  /// Computational basis state |index> in the given space.
  static PureState basis(const HilbertSpace& space, Index index);

  const HilbertSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  HilbertSpace space_;
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity and unit trace; positivity is guaranteed by the
  /// operations producing density matrices and is checked separately via
  /// min_eigenvalue() where a module contract calls for it.
  DensityMatrix(HilbertSpace space, Matrix matrix);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(const HilbertSpace& space);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

  double min_eigenvalue() const;

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

class Projector {
 public:
  /// Validates P = P^dag and P^2 = P.
  Projector(HilbertSpace space, Matrix matrix);

  static Projector identity(const HilbertSpace& space);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

  /// Trace of a projector is its rank (rounded).
  Index rank() const;

  Projector complement() const;

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

Matrix tensor_product(const std::vector<Matrix>& parts);
DensityMatrix tensor_product(const std::vector<DensityMatrix>& parts);

/// Reduced state over the kept factors (ascending order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

/// Uhlmann fidelity (tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2. When either
/// argument is pure within tolerance this reduces to tr(rho1 rho2), which
/// is evaluated directly.
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);
double infidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

double purity(const DensityMatrix& rho);

/// P rho P with weight tr(P rho P); renormalized variant throws
/// Errc::zero_weight when the weight is at or below the zero threshold.
std::pair<DensityMatrix, double> project(const DensityMatrix& rho,
                                         const Projector& p);
std::pair<Matrix, double> project_unnormalized(const DensityMatrix& rho,
                                               const Projector& p);

}  // namespace qaem
