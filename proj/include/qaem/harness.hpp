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
#include <map>
#include <string>
#include <vector>

#include "qaem/encoder.hpp"
#include "qaem/noise.hpp"
#include "qaem/qstate.hpp"

namespace qaem {

/// Figure-level experiment families.
enum class ExperimentKind {
  known_encoder_sweep,  // analytic encoder, eps sweep, both depolarizing kinds
  trained_sweep,        // train on basis states, test on fresh draws
  large_noise,          // trained pipeline pushed to eps -> 1
  mixed_states,         // pure-trained pipeline applied to mixed inputs
  noisy_circuit,        // Gaussian parameter noise on the trained encoder
  measurement_study,    // latent projector rank mismatch + random projectors
  leakage,              // qudit decay channel, identity and trained encoders
  h2,                   // molecular ground-state family on 4 qubits
  purity_comparison,    // junk-projection vs subsystem-purity training costs
  depol_scaling,        // corrected/uncorrected ratio vs qubit count
  layer_sweep,          // performance vs circuit depth
  stage_comparison,     // single-stage vs two-stage training curves
};

std::string kind_name(ExperimentKind kind);
ExperimentKind kind_from_name(const std::string& name);

/// Declarative description of one sweep.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::known_encoder_sweep;
  std::string id;                     // output basename, e.g. figure id
  std::vector<int> n_grid = {4};      // qubit counts (qudit dim for leakage)
  std::vector<double> eps_grid = {0.05};
  std::vector<NoiseModel::Kind> noise_kinds = {
      NoiseModel::Kind::global_depolarizing};
  int trials = 1000;
  int layers = 1;                     // ansatz layers per group
  int stages = 2;                     // training stage count (1 or 2)
  std::vector<double> circuit_grid = {0.0};  // parameter-noise std devs
  std::vector<int> layer_grid = {1};  // depth grid, layer_sweep only
  uint64_t seed = 1;

  void validate() const;  // throws Errc::bad_config
};

/// One aggregated grid point. Corrected statistics cover kept trials only;
/// `discarded` counts trials whose every outcome was post-selected away.
struct ResultRecord {
  std::string kind;
  int n = 0;
  double eps = 0.0;
  int trials = 0;
  int discarded = 0;
  double uncorrected_mean = 0.0;
  double uncorrected_stderr = 0.0;
  double corrected_mean = 0.0;
  double corrected_stderr = 0.0;
  double keep_mean = 0.0;
  uint64_t seed = 0;
  std::string notes;  // semicolon-separated key=value pairs, no commas
};

/// Input-state families.
enum class StateKind { w, h2, leakage_basis, mixed_w };

/// Random states, deterministic per seed. `w`/`h2`: pure draws with real
/// Gaussian coefficients on the family's basis; `leakage_basis`: the fixed
/// levels |1>..|d-1> of a d-level system, cycled; `mixed_w`: p |w1><w1| +
/// (1-p) |w2><w2| with p uniform. `complex_coeffs` switches the W draws to
/// complex Gaussian coefficients; experiments leave it off.
std::vector<DensityMatrix> gen_states(StateKind kind, int n_or_d, int count,
                                      uint64_t seed,
                                      bool complex_coeffs = false);

/// W-class state from explicit coefficients (normalized copy); coefficient
/// alpha_i multiplies the basis state with qubit i excited.
PureState w_state(const RealVector& alpha);

/// The n single-excitation basis states used as the W training set.
std::vector<DensityMatrix> w_training_states(int n);

/// The four computational basis states spanning the molecular family.
std::vector<DensityMatrix> h2_training_states();

/// Analytic encoder for the single-excitation family on n qubits: support
/// vector i maps onto canonical vector i, and the latent projector pins the
/// leading n - ceil(log2 n) qubits to |0>.
EncoderPipeline known_w_pipeline(int n);

/// Same construction for the molecular family (4 qubits, 4 support states,
/// 2 ancilla qubits).
EncoderPipeline known_h2_pipeline();

/// Identity encoder on a d-level system whose latent subspace spans the
/// levels |1>..|d-1>; detects decay to |0> completely.
EncoderPipeline leakage_identity_pipeline(Index d);

/// Everything a run produces: aggregated records plus named artifact files
/// (training curves, trained parameters, ...). Artifact keys are file
/// basenames; values are full file bodies.
struct RunOutput {
  std::vector<ResultRecord> records;
  std::map<std::string, std::string> artifacts;
};

RunOutput run_experiment(const ExperimentConfig& config);

/// Records -> CSV body with the fixed header
///   kind,n,epsilon,trials,discarded,uncorrected_mean,uncorrected_stderr,
///   corrected_mean,corrected_stderr,keep_mean,seed,notes
/// Floats at 12 significant digits.
std::string emit_report(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> parse_report(const std::string& csv_body);

/// JSON config ingestion/echo. Schema documented in README; unknown keys
/// are rejected.
ExperimentConfig config_from_json(const std::string& json_body);
std::string config_to_json(const ExperimentConfig& config);

/// Frozen figure registry.
std::vector<std::string> figure_ids();
ExperimentConfig figure_config(const std::string& figure_id);

/// Run manifest: config echo, library version, seed, wall time.
std::string manifest_json(const ExperimentConfig& config, double wall_seconds);

/// Worker count used for per-trial parallelism; 1 disables threading.
/// Aggregation is indexed, so results never depend on this value.
int thread_count();
void set_thread_count(int threads);

/// Indexed parallel loop over [0, count) with the current thread count.
void parallel_for_index(int count, const std::function<void(int)>& body);

}  // namespace qaem
