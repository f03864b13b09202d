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

#include <functional>
#include <optional>
#include <vector>

#include "qaem/ansatz.hpp"
#include "qaem/encoder.hpp"
#include "qaem/noise.hpp"
#include "qaem/qstate.hpp"

namespace qaem {

/// What a training stage minimizes over its parameter group.
///
/// junk_weight: mean_k w_k Tr[M_J U rho_k U^dagger], the average weight the
/// encoded training states leave outside the latent subspace.
///
/// subsystem_purity: one minus the average purity of the trash factors,
///   1 - (1/|T|) sum_{q in T} mean_k w_k Tr[(Tr_{all but q} sigma_k)^2],
/// where T = `purity_trash` lists the factors being compressed away and
/// sigma_k = U rho_k U^dagger. Zero cost means every trash factor is pure
/// and disentangled, i.e. a local rotation away from |0>.
struct CostSpec {
  enum class Kind { junk_weight, subsystem_purity };
  Kind kind = Kind::junk_weight;
  std::optional<Projector> junk;  // junk_weight only
  std::vector<int> purity_trash;  // subsystem_purity only

  static CostSpec junk_weight(Projector junk_projector);
  static CostSpec subsystem_purity(std::vector<int> trash);
};

/// Gradient-descent settings for one stage. Defaults match the reference
/// experiments.
///
/// Restart policy: attempt 0 starts from the caller's theta (the harness
/// draws it uniform in +-init_half_range); attempt k > 0 re-draws uniform
/// in a widening range min(pi, k*pi/2). The widening matters: diagonal
/// training data makes the identity a local minimum of the restricted
/// landscape, so every small-angle start converges to the same plateau and
/// only a wide restart can leave it. The best final cost across attempts is
/// kept, and the loop stops early once `accept_cost` is reached. Stage
/// drivers that know an analytic floor derive a default accept_cost from it
/// when none is set.
struct StageConfig {
  double learning_rate = 0.05;
  int max_iters = 20000;
  int convergence_window = 100;
  double min_improvement = 1e-9;
  double fd_step = 1e-5;
  double init_half_range = 0.1;
  int restarts = 3;                       // attempts with fresh init
  std::optional<double> accept_cost;      // stop restarting at or below this
  uint64_t seed = 1;
};

/// Per-stage training trace.
struct TrainRecord {
  int stage = 0;
  int restarts_used = 0;
  int iterations = 0;
  bool converged = false;
  double initial_cost = 0.0;
  double final_cost = 0.0;
  std::vector<double> cost_history;  // one entry per iteration, best restart
};

/// Weighted training set: noisy inputs the encoder must compress.
struct TrainingSet {
  std::vector<DensityMatrix> states;
  std::vector<double> weights;  // normalized at use; uniform if empty

  static TrainingSet noisy(const std::vector<DensityMatrix>& ideal,
                           const NoiseModel& model, double eps);
};

double cost_projection(const Matrix& encoder, const Projector& junk,
                       const DensityMatrix& mean_state);

double cost_purity(const Matrix& encoder, const std::vector<int>& trash,
                   const std::vector<DensityMatrix>& states,
                   const std::vector<double>& weights);

/// Central finite-difference gradient of `cost` at `theta`.
RealVector finite_diff_grad(const std::function<double(const RealVector&)>& cost,
                            const RealVector& theta, double step);

/// Plain gradient descent on one parameter group; other groups frozen.
TrainRecord train_stage(const std::function<double(const RealVector&)>& cost,
                        RealVector& theta, const StageConfig& config);

/// Result of training every group of a layered ansatz in sequence.
struct MultiStageResult {
  EncoderPipeline pipeline;
  ParamVector theta;
  std::vector<TrainRecord> stages;
};

/// Stage-wise compression: stage g trains group g against the stage's cost
/// with groups 1..g-1 frozen. `stage_costs[g]` defines stage g's objective;
/// latent projector of the returned pipeline is `final_latent`.
MultiStageResult train_multistage(const LayeredAnsatz& ansatz,
                                  const TrainingSet& data,
                                  const std::vector<CostSpec>& stage_costs,
                                  const Projector& final_latent,
                                  const StageConfig& config);

/// Single-stage convenience wrapper: one group, junk-weight cost.
MultiStageResult train_encoder(const LayeredAnsatz& ansatz,
                               const TrainingSet& data,
                               const Projector& latent,
                               const StageConfig& config);

/// Qudit-generator variant of train_encoder (junk-weight cost over the
/// generator angles).
struct QuditTrainResult {
  EncoderPipeline pipeline;
  ParamVector theta;
  TrainRecord record;
};

QuditTrainResult train_qudit_encoder(const QuditGeneratorAnsatz& ansatz,
                                     const TrainingSet& data,
                                     const Projector& latent,
                                     const StageConfig& config);

}  // namespace qaem
