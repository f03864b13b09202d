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

#include "qaem/encoder.hpp"
#include "qaem/noise.hpp"
#include "qaem/qstate.hpp"

namespace qaem {

/// One pass of detection-based mitigation.
struct MitigationOutcome {
  DensityMatrix corrected;    // post-selected state, decoded frame
  double keep_probability;    // Tr[M_L U rho_noisy U^dagger]
  double junk_weight;         // 1 - keep_probability
};

/// Encode, measure the latent projector, keep the pass branch, decode:
///   sigma   = U rho U^dagger
///   p       = Tr[M_L sigma]
///   out     = U^dagger (M_L sigma M_L / p) U.
/// Throws Errc::all_discarded when p underflows.
MitigationOutcome mitigate(const DensityMatrix& noisy,
                           const EncoderPipeline& pipeline);

/// Split of the error state by the back-rotated latent measurement
/// M_S = U^dagger M_L U:
///   survivor   = M_S rho_err M_S           (passes detection)
///   cross      = M_S rho_err (I - M_S) + h.c.
///   rejected   = (I - M_S) rho_err (I - M_S).
struct ErrorDecomposition {
  Matrix survivor;
  Matrix cross;
  Matrix rejected;
  double survivor_trace;  // Tr[M_S rho_err], the error weight that leaks through
};

ErrorDecomposition error_decomposition(const DensityMatrix& error_state,
                                       const EncoderPipeline& pipeline);

/// Exact closed forms for mixing-law noise rho_noisy = (1-eps) rho + eps rho_err
/// when the ideal state is supported inside the detected subspace:
///   keep probability  p = (1 - eps) + eps Tr[Lambda_s]
///   corrected state   ((1 - eps) rho + eps Lambda_s) / p
/// with Lambda_s the survivor block of rho_err.
double predicted_keep_probability(const DensityMatrix& ideal,
                                  const NoiseModel& model, double eps,
                                  const EncoderPipeline& pipeline);

/// First-order prediction for the corrected infidelity of a pure ideal
/// state: eps * (Tr[Lambda_s] - <psi| Lambda_s |psi>).
double predicted_corrected_infidelity(const DensityMatrix& ideal,
                                      const NoiseModel& model, double eps,
                                      const EncoderPipeline& pipeline);

/// Exact corrected infidelity for the same setting, all orders in eps.
double exact_corrected_infidelity(const DensityMatrix& ideal,
                                  const NoiseModel& model, double eps,
                                  const EncoderPipeline& pipeline);

}  // namespace qaem
