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

#include "qaem/mitigation.hpp"

namespace qaem {

MitigationOutcome mitigate(const DensityMatrix& noisy,
                           const EncoderPipeline& pipeline) {
  require(noisy.space() == pipeline.space(), Errc::dimension_mismatch,
          "state and pipeline live on different spaces");
  const Matrix& u = pipeline.encode_unitary;
  const Matrix& latent = pipeline.latent_projector.matrix();
  const Matrix sigma = u * noisy.matrix() * u.adjoint();
  Matrix kept = latent * sigma * latent;
  const double p = kept.trace().real();
  require(p > tol().zero_weight, Errc::all_discarded,
          "every measurement outcome was post-selected away");
  kept /= p;
  Matrix decoded = u.adjoint() * kept * u;
  return {DensityMatrix(noisy.space(), std::move(decoded)), p, 1.0 - p};
}

ErrorDecomposition error_decomposition(const DensityMatrix& error_state,
                                       const EncoderPipeline& pipeline) {
  require(error_state.space() == pipeline.space(), Errc::dimension_mismatch,
          "error state and pipeline live on different spaces");
  const Matrix& u = pipeline.encode_unitary;
  const Matrix back_rotated =
      u.adjoint() * pipeline.latent_projector.matrix() * u;
  const Matrix& err = error_state.matrix();
  ErrorDecomposition out;
  out.survivor = back_rotated * err * back_rotated;
  const Matrix complement =
      Matrix::Identity(err.rows(), err.cols()) - back_rotated;
  out.rejected = complement * err * complement;
  out.cross = err - out.survivor - out.rejected;
  out.survivor_trace = out.survivor.trace().real();
  return out;
}

namespace {

// Survivor block of the error term plus the checks shared by the closed
// forms: the ideal state must be pure and supported inside the detected
// subspace.
ErrorDecomposition checked_decomposition(const DensityMatrix& ideal,
                                         const NoiseModel& model,
                                         const EncoderPipeline& pipeline,
                                         bool need_pure) {
  require(ideal.space() == pipeline.space(), Errc::dimension_mismatch,
          "state and pipeline live on different spaces");
  if (need_pure) {
    require(purity(ideal) > 1.0 - tol().pure_shortcut, Errc::bad_config,
            "closed-form infidelity needs a pure ideal state");
  }
  const Matrix& u = pipeline.encode_unitary;
  const Matrix encoded = u * ideal.matrix() * u.adjoint();
  const double junk_weight =
      (pipeline.junk_projector.matrix() * encoded).trace().real();
  require(junk_weight <= tol().not_in_support, Errc::not_in_support,
          "ideal state is not inside the detected subspace");
  return error_decomposition(error_state(model, ideal), pipeline);
}

}  // namespace

double predicted_keep_probability(const DensityMatrix& ideal,
                                  const NoiseModel& model, double eps,
                                  const EncoderPipeline& pipeline) {
  require(eps >= 0.0 && eps <= 1.0, Errc::bad_epsilon,
          "mixing weight outside [0, 1]");
  const ErrorDecomposition dec =
      checked_decomposition(ideal, model, pipeline, /*need_pure=*/false);
  return (1.0 - eps) + eps * dec.survivor_trace;
}

double predicted_corrected_infidelity(const DensityMatrix& ideal,
                                      const NoiseModel& model, double eps,
                                      const EncoderPipeline& pipeline) {
  require(eps >= 0.0 && eps <= 1.0, Errc::bad_epsilon,
          "mixing weight outside [0, 1]");
  const ErrorDecomposition dec =
      checked_decomposition(ideal, model, pipeline, /*need_pure=*/true);
  const double overlap = (ideal.matrix() * dec.survivor).trace().real();
  return eps * (dec.survivor_trace - overlap);
}

double exact_corrected_infidelity(const DensityMatrix& ideal,
                                  const NoiseModel& model, double eps,
                                  const EncoderPipeline& pipeline) {
  require(eps >= 0.0 && eps <= 1.0, Errc::bad_epsilon,
          "mixing weight outside [0, 1]");
  const ErrorDecomposition dec =
      checked_decomposition(ideal, model, pipeline, /*need_pure=*/true);
  const double overlap = (ideal.matrix() * dec.survivor).trace().real();
  const double keep = (1.0 - eps) + eps * dec.survivor_trace;
  require(keep > tol().zero_weight, Errc::all_discarded,
          "keep probability is numerically zero");
  return eps * (dec.survivor_trace - overlap) / keep;
}

}  // namespace qaem
