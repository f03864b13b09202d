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

#include <optional>
#include <string>
#include <vector>

#include "qaem/qstate.hpp"

namespace qaem {

/// Tagged description of an error channel rho -> rho_err. The mixing weight
/// epsilon is supplied per application, so one model serves a whole sweep.
class NoiseModel {
 public:
  enum class Kind {
    global_depolarizing,
    local_depolarizing,
    leakage,
    custom_kraus,
  };

  static NoiseModel global_depolarizing();
  /// Uniform single-site Pauli conjugation, normalized by 1/(3n) so the
  /// error term has unit trace. The normalization choice is surfaced in
  /// experiment metadata (see harness notes).
  static NoiseModel local_depolarizing();
  /// Decay toward a fixed pure state; default target is level |0> of the
  /// space the model is applied to.
  static NoiseModel leakage();
  static NoiseModel leakage(PureState target);
  /// Validates completeness: sum A_i^dag A_i = I within tolerance.
  static NoiseModel custom_kraus(std::vector<Matrix> operators);

  Kind kind() const { return kind_; }
  const std::optional<PureState>& leak_target() const { return leak_target_; }
  const std::vector<Matrix>& kraus_operators() const { return kraus_; }

  std::string name() const;

 private:
  explicit NoiseModel(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<PureState> leak_target_;
  std::vector<Matrix> kraus_;
};

/// The pure error term rho_err of the mixing law; always a valid density
/// matrix. Global depolarizing and leakage terms are rho-independent.
DensityMatrix error_state(const NoiseModel& model, const DensityMatrix& rho);

/// (1 - eps) rho + eps * error_state(model, rho).
DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseModel& model,
                          double eps);

}  // namespace qaem
