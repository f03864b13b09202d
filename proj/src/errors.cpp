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

#include "qaem/errors.hpp"

namespace qaem {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_hermitian: return "NonHermitian";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::not_psd: return "NotPSD";
    case Errc::non_unitary: return "NonUnitary";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::bad_subsystem: return "BadSubsystem";
    case Errc::zero_weight: return "ZeroWeight";
    case Errc::bad_epsilon: return "BadEpsilon";
    case Errc::empty_support: return "EmptySupport";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::bad_split: return "BadSplit";
    case Errc::layout_mismatch: return "LayoutMismatch";
    case Errc::bad_index: return "BadIndex";
    case Errc::non_finite_cost: return "NonFiniteCost";
    case Errc::all_discarded: return "AllDiscarded";
    case Errc::not_in_support: return "NotInSupport";
    case Errc::bad_kind: return "BadKind";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace qaem
