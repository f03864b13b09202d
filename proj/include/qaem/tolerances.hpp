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

namespace qaem {

/// Central table of numerical tolerances. All library defaults live here;
/// a process may override them once at startup (before any worker threads
/// run) via set_tolerances().
struct Tolerances {
  double hermitian = 1e-10;        // relative ||A - A^dag||_F bound
  double reconstruction = 1e-10;   // eigendecomposition rebuild residual
  double orthonormal = 1e-10;      // ||V^dag V - I||_F bound
  double psd_clamp = 1e-10;        // eigenvalues in [-psd_clamp, 0] -> 0
  double psd_sqrt = 1e-9;          // ||B*B - A||_F bound for sqrt results
  double unitary = 1e-9;           // ||U^dag U - I||_F bound
  double projector = 1e-10;        // ||P*P - P||_F and ||P - P^dag||_F
  double trace_one = 1e-10;        // |tr(rho) - 1| bound
  double state_norm = 1e-10;       // |<psi|psi> - 1| bound
  double kraus_complete = 1e-9;    // ||sum A_i^dag A_i - I||_F bound
  double zero_weight = 1e-12;      // post-selection weight treated as zero
  double support_rank = 1e-8;      // Gram-Schmidt residual dropping vectors
  double completion_residual = 1e-8;  // basis-completion candidate rejection
  double basis_orthonormal = 1e-9;    // |<v_i|v_j> - delta_ij| for inputs
  double pure_shortcut = 1e-9;     // purity above 1 - this uses overlap path
  double not_in_support = 1e-6;    // junk weight disqualifying a pure input
};

const Tolerances& tol();
void set_tolerances(const Tolerances& overrides);

}  // namespace qaem
