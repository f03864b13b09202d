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

#include "qaem/harness.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qaem/ansatz.hpp"
#include "qaem/baseline.hpp"
#include "qaem/encoder.hpp"
#include "qaem/io.hpp"
#include "qaem/mitigation.hpp"
#include "qaem/rng.hpp"
#include "qaem/training.hpp"
#include "qaem/version.hpp"

namespace qaem {

namespace {

struct KindEntry {
  ExperimentKind kind;
  const char* name;
};

constexpr KindEntry kKindTable[] = {
    {ExperimentKind::known_encoder_sweep, "known_encoder_sweep"},
    {ExperimentKind::trained_sweep, "trained_sweep"},
    {ExperimentKind::large_noise, "large_noise"},
    {ExperimentKind::mixed_states, "mixed_states"},
    {ExperimentKind::noisy_circuit, "noisy_circuit"},
    {ExperimentKind::measurement_study, "measurement_study"},
    {ExperimentKind::leakage, "leakage"},
    {ExperimentKind::h2, "h2"},
    {ExperimentKind::purity_comparison, "purity_comparison"},
    {ExperimentKind::depol_scaling, "depol_scaling"},
    {ExperimentKind::layer_sweep, "layer_sweep"},
    {ExperimentKind::stage_comparison, "stage_comparison"},
};

}  // namespace

std::string kind_name(ExperimentKind kind) {
  for (const KindEntry& entry : kKindTable) {
    if (entry.kind == kind) return entry.name;
  }
  raise(Errc::bad_kind, "unknown experiment kind");
}

ExperimentKind kind_from_name(const std::string& name) {
  for (const KindEntry& entry : kKindTable) {
    if (entry.name == name) return entry.kind;
  }
  raise(Errc::bad_kind, "unknown experiment kind: " + name);
}

void ExperimentConfig::validate() const {
  require(trials >= 1, Errc::bad_config, "trial count must be at least 1");
  require(!eps_grid.empty(), Errc::bad_config, "empty error-rate grid");
  for (const double eps : eps_grid) {
    require(eps >= 0.0 && eps <= 1.0, Errc::bad_config,
            "error rate outside [0, 1]");
  }
  require(!n_grid.empty(), Errc::bad_config, "empty system-size grid");
  for (const int n : n_grid) {
    require(n >= 1, Errc::bad_config, "system size must be at least 1");
  }
  require(!noise_kinds.empty(), Errc::bad_config, "no noise model selected");
  require(layers >= 1, Errc::bad_config, "layer count must be at least 1");
  require(stages == 1 || stages == 2, Errc::bad_config,
          "stage count must be 1 or 2");
  require(!circuit_grid.empty(), Errc::bad_config,
          "empty circuit-noise grid");
  for (const double s : circuit_grid) {
    require(s >= 0.0, Errc::bad_config, "circuit-noise level must be >= 0");
  }
  require(!layer_grid.empty(), Errc::bad_config, "empty layer grid");
  for (const int l : layer_grid) {
    require(l >= 1, Errc::bad_config, "layer grid entries must be >= 1");
  }
}

// ---------------------------------------------------------------------------
// Input-state families

PureState w_state(const RealVector& alpha) {
  const int n = static_cast<int>(alpha.size());
  require(n >= 1, Errc::bad_config, "empty coefficient vector");
  const HilbertSpace space = HilbertSpace::qubits(n);
  Vector amps = Vector::Zero(space.dim());
  for (int i = 0; i < n; ++i) {
    // Coefficient i excites qubit i; qubit 0 is the most significant digit.
    amps(Index{1} << (n - 1 - i)) = Complex(alpha(i), 0.0);
  }
  const double norm = amps.norm();
  require(norm > 1e-12, Errc::bad_config, "coefficients have zero norm");
  return PureState(space, amps / norm);
}

namespace {

// Basis indices of the 4-qubit molecular family, in the conventional order
// of its configuration basis |0101>, |1010>, |1001>, |0110>.
constexpr Index kMolecularBasis[] = {5, 10, 9, 6};

RealVector gaussian_coefficients(Rng& rng, int count) {
  RealVector alpha(count);
  while (true) {
    for (int i = 0; i < count; ++i) alpha(i) = rng.gaussian();
    if (alpha.norm() > 1e-6) return alpha;
  }
}

PureState random_w_state(Rng& rng, int n, bool complex_coeffs) {
  if (!complex_coeffs) return w_state(gaussian_coefficients(rng, n));
  const HilbertSpace space = HilbertSpace::qubits(n);
  Vector amps = Vector::Zero(space.dim());
  while (true) {
    for (int i = 0; i < n; ++i) {
      amps(Index{1} << (n - 1 - i)) = rng.cgaussian();
    }
    const double norm = amps.norm();
    if (norm > 1e-6) return PureState(space, amps / norm);
  }
}

PureState random_h2_state(Rng& rng) {
  const HilbertSpace space = HilbertSpace::qubits(4);
  const RealVector alpha = gaussian_coefficients(rng, 4);
  Vector amps = Vector::Zero(space.dim());
  for (int i = 0; i < 4; ++i) {
    amps(kMolecularBasis[i]) = Complex(alpha(i), 0.0);
  }
  return PureState(space, amps / amps.norm());
}

}  // namespace

std::vector<DensityMatrix> gen_states(StateKind kind, int n_or_d, int count,
                                      uint64_t seed, bool complex_coeffs) {
  require(count >= 1, Errc::bad_config, "state count must be at least 1");
  std::vector<DensityMatrix> out;
  out.reserve(count);
  for (int t = 0; t < count; ++t) {
    Rng rng(Rng::derive_seed(seed, static_cast<uint64_t>(t)));
    switch (kind) {
      case StateKind::w: {
        require(n_or_d >= 2, Errc::bad_config, "W family needs n >= 2");
        out.push_back(DensityMatrix::from_pure(
            random_w_state(rng, n_or_d, complex_coeffs)));
        break;
      }
      case StateKind::h2: {
        require(n_or_d == 4, Errc::bad_config,
                "molecular family is defined on 4 qubits");
        out.push_back(DensityMatrix::from_pure(random_h2_state(rng)));
        break;
      }
      case StateKind::leakage_basis: {
        require(n_or_d >= 3, Errc::bad_config,
                "leakage family needs dimension >= 3");
        const HilbertSpace space = HilbertSpace::qudit(n_or_d);
        const Index level = 1 + (t % (n_or_d - 1));
        out.push_back(
            DensityMatrix::from_pure(PureState::basis(space, level)));
        break;
      }
      case StateKind::mixed_w: {
        require(n_or_d >= 2, Errc::bad_config, "W family needs n >= 2");
        const PureState psi1 = random_w_state(rng, n_or_d, complex_coeffs);
        const PureState psi2 = random_w_state(rng, n_or_d, complex_coeffs);
        const double p1 = rng.uniform();
        const Matrix mix =
            p1 * (psi1.amplitudes() * psi1.amplitudes().adjoint()) +
            (1.0 - p1) * (psi2.amplitudes() * psi2.amplitudes().adjoint());
        out.emplace_back(psi1.space(), mix);
        break;
      }
      default:
        raise(Errc::bad_kind, "unknown state family");
    }
  }
  return out;
}

std::vector<DensityMatrix> w_training_states(int n) {
  require(n >= 2, Errc::bad_config, "W family needs n >= 2");
  const HilbertSpace space = HilbertSpace::qubits(n);
  std::vector<DensityMatrix> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(DensityMatrix::from_pure(
        PureState::basis(space, Index{1} << (n - 1 - i))));
  }
  return out;
}

std::vector<DensityMatrix> h2_training_states() {
  const HilbertSpace space = HilbertSpace::qubits(4);
  std::vector<DensityMatrix> out;
  out.reserve(4);
  for (const Index idx : kMolecularBasis) {
    out.push_back(DensityMatrix::from_pure(PureState::basis(space, idx)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Analytic pipelines

namespace {

int ceil_log2(int n) {
  int m = 0;
  while ((1 << m) < n) ++m;
  return m;
}

EncoderPipeline known_pipeline_from_support(
    const std::vector<PureState>& support_states, int ancilla) {
  const SupportBasis support = orthonormal_support_basis(support_states);
  const HilbertSpace& space = support.space;
  std::vector<PureState> latent;
  latent.reserve(support.vectors.size());
  for (Index i = 0; i < support.size(); ++i) {
    latent.push_back(PureState::basis(space, i));
  }
  EncoderPipeline mapped = build_encoder(support, latent);
  auto [keep, junk] = latent_projector(space, ancilla);
  return EncoderPipeline(mapped.encode_unitary, std::move(keep));
}

}  // namespace

EncoderPipeline known_w_pipeline(int n) {
  require(n >= 2, Errc::bad_config, "W family needs n >= 2");
  const HilbertSpace space = HilbertSpace::qubits(n);
  std::vector<PureState> support;
  support.reserve(n);
  for (int i = 0; i < n; ++i) {
    support.push_back(PureState::basis(space, Index{1} << (n - 1 - i)));
  }
  return known_pipeline_from_support(support, n - ceil_log2(n));
}

EncoderPipeline known_h2_pipeline() {
  const HilbertSpace space = HilbertSpace::qubits(4);
  std::vector<PureState> support;
  support.reserve(4);
  for (const Index idx : kMolecularBasis) {
    support.push_back(PureState::basis(space, idx));
  }
  return known_pipeline_from_support(support, 2);
}

EncoderPipeline leakage_identity_pipeline(Index d) {
  require(d >= 3, Errc::bad_config, "leakage pipeline needs dimension >= 3");
  const HilbertSpace space = HilbertSpace::qudit(d);
  Matrix keep = Matrix::Identity(d, d);
  keep(0, 0) = Complex(0.0, 0.0);
  return EncoderPipeline(Matrix::Identity(d, d),
                         Projector(space, std::move(keep)));
}

// ---------------------------------------------------------------------------
// Parallelism

namespace {
std::atomic<int> g_thread_count{1};
}  // namespace

int thread_count() { return g_thread_count.load(); }

void set_thread_count(int threads) {
  require(threads >= 1, Errc::bad_config, "thread count must be at least 1");
  g_thread_count.store(threads);
}

void parallel_for_index(int count, const std::function<void(int)>& body) {
  const int workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex error_mutex;
  std::exception_ptr first_error;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const int lo = static_cast<int>(
          static_cast<long long>(count) * w / workers);
      const int hi = static_cast<int>(
          static_cast<long long>(count) * (w + 1) / workers);
      try {
        for (int i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> guard(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// Trial plumbing

namespace {

struct TrialOutcome {
  double uncorrected = 0.0;
  double corrected = 0.0;
  double keep = 0.0;
  bool discarded = false;
};

NoiseModel model_from_kind(NoiseModel::Kind kind) {
  switch (kind) {
    case NoiseModel::Kind::global_depolarizing:
      return NoiseModel::global_depolarizing();
    case NoiseModel::Kind::local_depolarizing:
      return NoiseModel::local_depolarizing();
    case NoiseModel::Kind::leakage:
      return NoiseModel::leakage();
    case NoiseModel::Kind::custom_kraus:
      break;
  }
  raise(Errc::bad_kind, "custom Kraus noise cannot be selected by name");
}

std::string noise_note(NoiseModel::Kind kind) {
  switch (kind) {
    case NoiseModel::Kind::local_depolarizing:
      return "noise=local_depolarizing;local_norm=1/(3n)";
    case NoiseModel::Kind::global_depolarizing:
      return "noise=global_depolarizing";
    case NoiseModel::Kind::leakage:
      return "noise=leakage";
    case NoiseModel::Kind::custom_kraus:
      return "noise=custom_kraus";
  }
  return "noise=unknown";
}

uint64_t eps_key(double eps) {
  return static_cast<uint64_t>(std::llround(eps * 1e9));
}

uint64_t grid_seed(const ExperimentConfig& config, int noise_index, int n,
                   double eps) {
  const uint64_t a = Rng::derive_seed(
      config.seed, 0x6D1D + static_cast<uint64_t>(noise_index),
      static_cast<uint64_t>(n));
  return Rng::derive_seed(a, eps_key(eps));
}

// Mitigates one noisy state and scores it against the ideal one. A trial
// whose every outcome is post-selected away is marked discarded instead of
// failing the run.
TrialOutcome mitigate_metrics(const DensityMatrix& ideal,
                              const DensityMatrix& noisy,
                              const EncoderPipeline& pipeline) {
  TrialOutcome out;
  out.uncorrected = infidelity(ideal, noisy);
  try {
    const MitigationOutcome result = mitigate(noisy, pipeline);
    out.corrected = infidelity(ideal, result.corrected);
    out.keep = result.keep_probability;
  } catch (const Error& e) {
    if (e.code() != Errc::all_discarded) throw;
    out.discarded = true;
  }
  return out;
}

std::vector<TrialOutcome> run_trials(
    int count, uint64_t seed,
    const std::function<TrialOutcome(int, uint64_t)>& trial) {
  std::vector<TrialOutcome> slots(count);
  parallel_for_index(count, [&](int t) {
    const uint64_t trial_seed =
        Rng::derive_seed(seed, static_cast<uint64_t>(t));
    try {
      slots[static_cast<std::size_t>(t)] = trial(t, trial_seed);
    } catch (const Error& e) {
      raise(e.code(), std::string(e.what()) + " [trial " + std::to_string(t) +
                          ", seed " + std::to_string(trial_seed) + "]");
    }
  });
  return slots;
}

struct Moments {
  double mean = 0.0;
  double stderr_ = 0.0;
};

template <typename Select>
Moments moments(const std::vector<TrialOutcome>& trials, Select value,
                bool skip_discarded) {
  double sum = 0.0;
  long count = 0;
  for (const TrialOutcome& t : trials) {
    if (skip_discarded && t.discarded) continue;
    sum += value(t);
    ++count;
  }
  Moments out;
  if (count == 0) return out;
  out.mean = sum / static_cast<double>(count);
  if (count >= 2) {
    double ss = 0.0;
    for (const TrialOutcome& t : trials) {
      if (skip_discarded && t.discarded) continue;
      const double d = value(t) - out.mean;
      ss += d * d;
    }
    out.stderr_ = std::sqrt(ss / static_cast<double>(count - 1)) /
                  std::sqrt(static_cast<double>(count));
  }
  return out;
}

ResultRecord make_record(const ExperimentConfig& config, int n, double eps,
                         const std::vector<TrialOutcome>& trials,
                         std::string notes) {
  ResultRecord record;
  record.kind = kind_name(config.kind);
  record.n = n;
  record.eps = eps;
  record.trials = static_cast<int>(trials.size());
  for (const TrialOutcome& t : trials) {
    if (t.discarded) ++record.discarded;
  }
  const Moments unc = moments(
      trials, [](const TrialOutcome& t) { return t.uncorrected; }, false);
  const Moments cor = moments(
      trials, [](const TrialOutcome& t) { return t.corrected; }, true);
  const Moments keep = moments(
      trials, [](const TrialOutcome& t) { return t.keep; }, false);
  record.uncorrected_mean = unc.mean;
  record.uncorrected_stderr = unc.stderr_;
  record.corrected_mean = cor.mean;
  record.corrected_stderr = cor.stderr_;
  record.keep_mean = keep.mean;
  record.seed = config.seed;
  record.notes = std::move(notes);
  return record;
}

std::string join_notes(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& part : parts) {
    if (part.empty()) continue;
    if (!out.empty()) out += ";";
    out += part;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Training helpers shared by the trained-figure runners

struct TrainedPipeline {
  LayeredAnsatz ansatz;
  MultiStageResult result;
  Projector latent;
};

std::vector<CostSpec> staged_junk_costs(const HilbertSpace& space,
                                        int stages, int ancilla_final) {
  std::vector<CostSpec> costs;
  for (int s = 1; s <= stages; ++s) {
    const int ancilla = ancilla_final - stages + s;
    costs.push_back(
        CostSpec::junk_weight(latent_projector(space, ancilla).second));
  }
  return costs;
}

TrainedPipeline train_family_pipeline(const std::vector<DensityMatrix>& basis,
                                      int n, const NoiseModel& model,
                                      double eps, int layers, int stages,
                                      uint64_t seed) {
  const HilbertSpace space = HilbertSpace::qubits(n);
  const int ancilla_final =
      n - ceil_log2(static_cast<int>(basis.size()));
  require(ancilla_final >= stages, Errc::bad_config,
          "not enough compressible qubits for the requested stage count");
  const TrainingSet data = TrainingSet::noisy(basis, model, eps);
  LayeredAnsatz ansatz(n, layers, stages);
  StageConfig stage_config;
  stage_config.seed = seed;
  auto [keep, junk] = latent_projector(space, ancilla_final);
  MultiStageResult result =
      train_multistage(ansatz, data, staged_junk_costs(space, stages, ancilla_final),
                       keep, stage_config);
  return TrainedPipeline{std::move(ansatz), std::move(result),
                         std::move(keep)};
}

// Accumulates the per-figure training-record CSV artifact.
class TrainingLog {
 public:
  TrainingLog()
      : csv_({"noise", "epsilon", "variant", "stage", "restarts",
              "iterations", "converged", "initial_cost", "final_cost"}) {}

  void add(const std::string& noise, double eps, const std::string& variant,
           const std::vector<TrainRecord>& records) {
    for (const TrainRecord& r : records) {
      csv_.add_row({noise, fmt_cell(eps), variant, std::to_string(r.stage),
                    std::to_string(r.restarts_used),
                    std::to_string(r.iterations),
                    r.converged ? "1" : "0", fmt_cell(r.initial_cost),
                    fmt_cell(r.final_cost)});
    }
  }

  bool empty() const { return csv_.rows() == 0; }
  std::string body() const { return csv_.to_string(); }

 private:
  CsvWriter csv_;
};

std::string curve_csv(const std::vector<double>& history) {
  CsvWriter csv({"iteration", "cost"});
  for (std::size_t i = 0; i < history.size(); ++i) {
    csv.add_row({std::to_string(i), fmt_cell(history[i])});
  }
  return csv.to_string();
}

// ---------------------------------------------------------------------------
// Individual experiment runners

void run_known_family(const ExperimentConfig& config, bool ratio_note,
                      RunOutput& out) {
  for (std::size_t k = 0; k < config.noise_kinds.size(); ++k) {
    const NoiseModel model = model_from_kind(config.noise_kinds[k]);
    for (const int n : config.n_grid) {
      const EncoderPipeline pipeline = known_w_pipeline(n);
      for (const double eps : config.eps_grid) {
        const uint64_t gseed = grid_seed(config, static_cast<int>(k), n, eps);
        const std::vector<DensityMatrix> states =
            gen_states(StateKind::w, n, config.trials, gseed);
        const std::vector<TrialOutcome> trials = run_trials(
            config.trials, gseed, [&](int t, uint64_t) {
              const DensityMatrix& ideal = states[t];
              return mitigate_metrics(ideal,
                                      apply_noise(ideal, model, eps),
                                      pipeline);
            });
        std::vector<std::string> notes{noise_note(config.noise_kinds[k])};
        ResultRecord record =
            make_record(config, n, eps, trials, join_notes(notes));
        if (ratio_note && record.uncorrected_mean > 0.0) {
          record.notes = join_notes(
              {record.notes,
               "ratio=" +
                   fmt_cell(record.corrected_mean / record.uncorrected_mean)});
        }
        out.records.push_back(std::move(record));
      }
    }
  }
}

void run_trained_family(const ExperimentConfig& config, StateKind family,
                        RunOutput& out) {
  TrainingLog log;
  for (std::size_t k = 0; k < config.noise_kinds.size(); ++k) {
    const NoiseModel model = model_from_kind(config.noise_kinds[k]);
    for (const int n : config.n_grid) {
      const std::vector<DensityMatrix> basis =
          family == StateKind::h2 ? h2_training_states()
                                  : w_training_states(n);
      for (const double eps : config.eps_grid) {
        const uint64_t gseed = grid_seed(config, static_cast<int>(k), n, eps);
        const uint64_t train_seed = Rng::derive_seed(gseed, 0x7E0);
        const TrainedPipeline trained =
            train_family_pipeline(basis, n, model, eps, config.layers,
                                  config.stages, train_seed);
        log.add(model.name(), eps, "", trained.result.stages);
        out.artifacts[config.id + "-params-" + model.name() + "-eps" +
                      fmt_cell(eps) + ".txt"] =
            params_to_text(trained.result.theta);

        const StateKind test_family =
            family == StateKind::mixed_w ? StateKind::mixed_w : family;
        const std::vector<DensityMatrix> states =
            gen_states(test_family, n, config.trials, gseed);
        const EncoderPipeline& pipeline = trained.result.pipeline;
        const std::vector<TrialOutcome> trials = run_trials(
            config.trials, gseed, [&](int t, uint64_t) {
              const DensityMatrix& ideal = states[t];
              return mitigate_metrics(ideal,
                                      apply_noise(ideal, model, eps),
                                      pipeline);
            });
        std::vector<std::string> notes{
            noise_note(config.noise_kinds[k]),
            "layers=" + std::to_string(config.layers),
            "stages=" + std::to_string(config.stages)};
        if (config.kind == ExperimentKind::large_noise) {
          const double limit =
              config.noise_kinds[k] == NoiseModel::Kind::local_depolarizing
                  ? 0.8
                  : 0.6;
          notes.push_back(std::string("expected_improvement=") +
                          (eps <= limit ? "yes" : "no"));
        }
        out.records.push_back(
            make_record(config, n, eps, trials, join_notes(notes)));
      }
    }
  }
  if (!log.empty()) out.artifacts[config.id + "-training.csv"] = log.body();
}

void run_noisy_circuit(const ExperimentConfig& config, RunOutput& out) {
  TrainingLog log;
  for (std::size_t k = 0; k < config.noise_kinds.size(); ++k) {
    const NoiseModel model = model_from_kind(config.noise_kinds[k]);
    for (const int n : config.n_grid) {
      const std::vector<DensityMatrix> basis = w_training_states(n);
      for (const double eps : config.eps_grid) {
        const uint64_t gseed = grid_seed(config, static_cast<int>(k), n, eps);
        const TrainedPipeline trained = train_family_pipeline(
            basis, n, model, eps, config.layers, config.stages,
            Rng::derive_seed(gseed, 0x7E0));
        log.add(model.name(), eps, "", trained.result.stages);
        const std::vector<DensityMatrix> states =
            gen_states(StateKind::w, n, config.trials, gseed);
        for (const double sigma : config.circuit_grid) {
          const uint64_t sseed = Rng::derive_seed(gseed, eps_key(sigma), 1);
          const std::vector<TrialOutcome> trials = run_trials(
              config.trials, sseed, [&](int t, uint64_t trial_seed) {
                const ParamVector noisy_theta = perturb_params(
                    trained.result.theta, sigma, trial_seed);
                const EncoderPipeline pipeline(
                    trained.ansatz.unitary(noisy_theta), trained.latent);
                const DensityMatrix& ideal = states[t];
                return mitigate_metrics(
                    ideal, apply_noise(ideal, model, eps), pipeline);
              });
          out.records.push_back(make_record(
              config, n, eps, trials,
              join_notes({noise_note(config.noise_kinds[k]),
                          "eps_circuit=" + fmt_cell(sigma),
                          "layers=" + std::to_string(config.layers),
                          "stages=" + std::to_string(config.stages)})));
        }
      }
    }
  }
  if (!log.empty()) out.artifacts[config.id + "-training.csv"] = log.body();
}

void run_measurement_study(const ExperimentConfig& config, RunOutput& out) {
  struct Variant {
    std::string name;
    Projector keep;
  };
  for (std::size_t k = 0; k < config.noise_kinds.size(); ++k) {
    const NoiseModel model = model_from_kind(config.noise_kinds[k]);
    for (const int n : config.n_grid) {
      const EncoderPipeline matched = known_w_pipeline(n);
      const HilbertSpace space = HilbertSpace::qubits(n);
      std::vector<Variant> variants;
      const int m = ceil_log2(n);
      // Fixed computational-subspace ranks around the matched one.
      for (const int ancilla : {n - m + 1, n - m, n - m - 1}) {
        if (ancilla < 0 || ancilla > n) continue;
        const Index rank = space.dim() >> ancilla;
        variants.push_back(Variant{
            "rank" + std::to_string(rank),
            latent_projector(space, ancilla).first});
      }
      const Index random_rank = space.dim() / 2;
      for (int r = 0; r < 10; ++r) {
        variants.push_back(Variant{
            "random" + std::to_string(random_rank) + "-" + std::to_string(r),
            random_subspace_projector(
                space, random_rank,
                Rng::derive_seed(config.seed, 0xF00D, r))});
      }
      for (const double eps : config.eps_grid) {
        const uint64_t gseed = grid_seed(config, static_cast<int>(k), n, eps);
        const std::vector<DensityMatrix> states =
            gen_states(StateKind::w, n, config.trials, gseed);
        for (const Variant& variant : variants) {
          const EncoderPipeline pipeline(matched.encode_unitary,
                                         variant.keep);
          const std::vector<TrialOutcome> trials = run_trials(
              config.trials, gseed, [&](int t, uint64_t) {
                const DensityMatrix& ideal = states[t];
                return mitigate_metrics(
                    ideal, apply_noise(ideal, model, eps), pipeline);
              });
          out.records.push_back(make_record(
              config, n, eps, trials,
              join_notes({noise_note(config.noise_kinds[k]),
                          "projector=" + variant.name,
                          "rank=" + std::to_string(variant.keep.rank())})));
        }
      }
    }
  }
}

void run_leakage(const ExperimentConfig& config, RunOutput& out) {
  const Index d = config.n_grid.front();
  require(d >= 3, Errc::bad_config, "leakage experiment needs dimension >= 3");
  const HilbertSpace space = HilbertSpace::qudit(d);
  const int data_count = static_cast<int>(d - 1);
  std::vector<DensityMatrix> data;
  for (int i = 0; i < data_count; ++i) {
    data.push_back(DensityMatrix::from_pure(PureState::basis(space, i + 1)));
  }
  const NoiseModel model = NoiseModel::leakage();

  // Latent choices: keep0 spans |1>..|d-1| (identity-compatible), keep_top
  // spans |0>..|d-2> and forces a nontrivial encoder.
  const Projector latent_keep0 = leakage_identity_pipeline(d).latent_projector;
  Matrix top = Matrix::Identity(d, d);
  top(d - 1, d - 1) = Complex(0.0, 0.0);
  const Projector latent_keep_top(space, std::move(top));

  struct Variant {
    std::string name;
    EncoderPipeline pipeline;
  };
  std::vector<Variant> variants;
  variants.push_back(Variant{"identity", leakage_identity_pipeline(d)});

  TrainingLog log;
  const double train_eps = 0.1;  // training curves cover eps in {0, 0.1}
  struct TrainedSpec {
    std::string name;
    QuditGeneratorAnsatz ansatz;
    Projector latent;
  };
  const std::vector<TrainedSpec> specs = {
      {"trained_keep0",
       QuditGeneratorAnsatz::full(d, 0, static_cast<int>(d - 1),
                                  QuditGeneratorAnsatz::Mode::hermitian_pair),
       latent_keep0},
      {"trained_keeptop",
       QuditGeneratorAnsatz::full(d, 0, static_cast<int>(d - 1),
                                  QuditGeneratorAnsatz::Mode::hermitian_pair),
       latent_keep_top},
      {"mismatch",
       QuditGeneratorAnsatz::full(d, 1, static_cast<int>(d - 1),
                                  QuditGeneratorAnsatz::Mode::hermitian_pair),
       latent_keep_top},
  };
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const TrainedSpec& spec = specs[s];
    for (const double eps : {0.0, train_eps}) {
      StageConfig stage_config;
      stage_config.seed =
          Rng::derive_seed(config.seed, 0x1EAC + s, eps_key(eps));
      const TrainingSet set = TrainingSet::noisy(data, model, eps);
      const QuditTrainResult trained =
          train_qudit_encoder(spec.ansatz, set, spec.latent, stage_config);
      log.add(model.name(), eps, spec.name, {trained.record});
      out.artifacts[config.id + "-curve-" + spec.name + "-eps" +
                    fmt_cell(eps) + ".csv"] =
          curve_csv(trained.record.cost_history);
      if (eps == train_eps) {
        variants.push_back(Variant{spec.name, trained.pipeline});
      }
    }
  }
  out.artifacts[config.id + "-training.csv"] = log.body();

  for (const double eps : config.eps_grid) {
    const uint64_t gseed = grid_seed(config, 0, static_cast<int>(d), eps);
    // Deterministic data-set averages for the detection pipelines.
    for (const Variant& variant : variants) {
      const std::vector<TrialOutcome> trials = run_trials(
          data_count, gseed, [&](int t, uint64_t) {
            const DensityMatrix& ideal = data[t];
            return mitigate_metrics(ideal, apply_noise(ideal, model, eps),
                                    variant.pipeline);
          });
      out.records.push_back(make_record(
          config, static_cast<int>(d), eps, trials,
          join_notes({noise_note(NoiseModel::Kind::leakage),
                      "variant=" + variant.name})));
    }
    // Network baseline: one Haar draw per trial, scored by its average
    // infidelity over the data set.
    const NnLayout layout{space, HilbertSpace{}, space};
    const std::vector<TrialOutcome> nn_trials = run_trials(
        config.trials, Rng::derive_seed(gseed, 0x44), [&](int, uint64_t ts) {
          const Matrix network = haar_random_unitary(d * d, ts);
          TrialOutcome outn;
          for (const DensityMatrix& ideal : data) {
            const DensityMatrix noisy = apply_noise(ideal, model, eps);
            outn.uncorrected += infidelity(ideal, noisy) / data_count;
            outn.corrected +=
                infidelity(ideal, nn_output(layout, network, noisy)) /
                data_count;
          }
          outn.keep = 1.0;
          return outn;
        });
    out.records.push_back(make_record(
        config, static_cast<int>(d), eps, nn_trials,
        join_notes({noise_note(NoiseModel::Kind::leakage),
                    "variant=nn_baseline"})));
  }
}

// Gradient descent that additionally tracks the purity cost along the
// optimization path, for the cost-function comparison figure.
struct ComparisonCurve {
  std::vector<double> tracked;  // purity cost per iteration
  double initial_cost = 0.0;
  double final_cost = 0.0;
  int iterations = 0;
};

ComparisonCurve descend_tracking(
    const std::function<double(const RealVector&)>& cost,
    const std::function<double(const RealVector&)>& tracked,
    RealVector theta, const StageConfig& config) {
  ComparisonCurve out;
  std::vector<double> history;  // trained cost, drives convergence
  double current = cost(theta);
  out.initial_cost = current;
  history.push_back(current);
  out.tracked.push_back(tracked(theta));
  const std::size_t window =
      static_cast<std::size_t>(config.convergence_window);
  for (int iter = 0; iter < config.max_iters; ++iter) {
    const RealVector grad = finite_diff_grad(cost, theta, config.fd_step);
    theta -= config.learning_rate * grad;
    current = cost(theta);
    history.push_back(current);
    out.tracked.push_back(tracked(theta));
    out.iterations = iter + 1;
    if (history.size() > window &&
        history[history.size() - 1 - window] - current <
            config.min_improvement) {
      break;
    }
  }
  out.final_cost = current;
  return out;
}

void run_purity_comparison(const ExperimentConfig& config, RunOutput& out) {
  const int n = config.n_grid.front();
  require(n == 4, Errc::bad_config,
          "cost-function comparison is defined on 4 qubits");
  const HilbertSpace space = HilbertSpace::qubits(n);
  const NoiseModel model = model_from_kind(config.noise_kinds.front());
  const double eps = config.eps_grid.front();
  const TrainingSet data =
      TrainingSet::noisy(w_training_states(n), model, eps);
  const std::vector<double> weights(data.states.size(),
                                    1.0 / data.states.size());
  Matrix acc = Matrix::Zero(space.dim(), space.dim());
  for (std::size_t i = 0; i < data.states.size(); ++i) {
    acc += weights[i] * data.states[i].matrix();
  }
  const DensityMatrix mean(space, std::move(acc));

  struct Mode {
    std::string name;
    Projector junk;              // junk-weight objective
    std::vector<int> trash;      // purity objective
  };
  const std::vector<Mode> modes = {
      {"two_stage_first", latent_projector(space, 1).second, {0}},
      {"single_stage", latent_projector(space, 2).second, {0, 1}},
  };

  LayeredAnsatz ansatz(n, config.layers, 1);
  StageConfig stage_config;
  stage_config.max_iters = 3000;  // curve figure needs the early behavior

  for (const Mode& mode : modes) {
    auto junk_cost = [&](const RealVector& theta) {
      return cost_projection(ansatz.group_unitary(theta, 0), mode.junk,
                             mean);
    };
    auto purity_cost_fn = [&](const RealVector& theta) {
      return cost_purity(ansatz.group_unitary(theta, 0), mode.trash,
                         data.states, weights);
    };
    for (int init = 0; init < 3; ++init) {
      RealVector theta(ansatz.params_per_group());
      Rng rng(Rng::derive_seed(config.seed, 0x1717, init));
      for (Index i = 0; i < theta.size(); ++i) {
        theta(i) = (2.0 * rng.uniform() - 1.0) * stage_config.init_half_range;
      }
      struct Method {
        std::string name;
        const std::function<double(const RealVector&)> cost;
      };
      const std::vector<Method> methods = {
          {"junk", junk_cost}, {"purity", purity_cost_fn}};
      for (const Method& method : methods) {
        const ComparisonCurve curve = descend_tracking(
            method.cost, purity_cost_fn, theta, stage_config);
        out.artifacts[config.id + "-curve-" + mode.name + "-" + method.name +
                      "-init" + std::to_string(init) + ".csv"] =
            curve_csv(curve.tracked);
        std::vector<TrialOutcome> pseudo(1);
        pseudo[0].uncorrected = curve.tracked.front();
        pseudo[0].corrected = curve.tracked.back();
        pseudo[0].keep = 0.0;
        out.records.push_back(make_record(
            config, n, eps, pseudo,
            join_notes({noise_note(config.noise_kinds.front()),
                        "mode=" + mode.name, "method=" + method.name,
                        "init=" + std::to_string(init),
                        "columns=purity_cost_initial_final"})));
      }
    }
  }
}

void run_stage_comparison(const ExperimentConfig& config, RunOutput& out) {
  const int n = config.n_grid.front();
  require(n == 4, Errc::bad_config,
          "stage comparison is defined on 4 qubits");
  const HilbertSpace space = HilbertSpace::qubits(n);
  TrainingLog log;
  for (std::size_t k = 0; k < config.noise_kinds.size(); ++k) {
    const NoiseModel model = model_from_kind(config.noise_kinds[k]);
    const double eps = config.eps_grid.front();
    const TrainingSet data =
        TrainingSet::noisy(w_training_states(n), model, eps);
    for (const int stages : {1, 2}) {
      LayeredAnsatz ansatz(n, config.layers, stages);
      StageConfig stage_config;
      stage_config.max_iters = 3000;
      stage_config.restarts = 1;
      stage_config.seed =
          Rng::derive_seed(config.seed, 0x57A9, stages);
      auto [keep, junk] = latent_projector(space, 2);
      const MultiStageResult result = train_multistage(
          ansatz, data, staged_junk_costs(space, stages, 2), keep,
          stage_config);
      const std::string mode =
          stages == 1 ? "single_stage" : "two_stage";
      log.add(model.name(), eps, mode, result.stages);
      for (const TrainRecord& r : result.stages) {
        out.artifacts[config.id + "-curve-" + model.name() + "-" + mode +
                      "-stage" + std::to_string(r.stage) + ".csv"] =
            curve_csv(r.cost_history);
        std::vector<TrialOutcome> pseudo(1);
        pseudo[0].uncorrected = r.initial_cost;
        pseudo[0].corrected = r.final_cost;
        pseudo[0].keep = 0.0;
        out.records.push_back(make_record(
            config, n, eps, pseudo,
            join_notes({noise_note(config.noise_kinds[k]), "mode=" + mode,
                        "stage=" + std::to_string(r.stage),
                        "columns=cost_initial_final"})));
      }
    }
  }
  out.artifacts[config.id + "-training.csv"] = log.body();
}

void run_layer_sweep(const ExperimentConfig& config, RunOutput& out) {
  TrainingLog log;
  for (std::size_t k = 0; k < config.noise_kinds.size(); ++k) {
    const NoiseModel model = model_from_kind(config.noise_kinds[k]);
    for (const int n : config.n_grid) {
      const std::vector<DensityMatrix> basis = w_training_states(n);
      for (const double eps : config.eps_grid) {
        for (const int layers : config.layer_grid) {
          const uint64_t gseed = Rng::derive_seed(
              grid_seed(config, static_cast<int>(k), n, eps),
              static_cast<uint64_t>(layers));
          const TrainedPipeline trained = train_family_pipeline(
              basis, n, model, eps, layers, config.stages,
              Rng::derive_seed(gseed, 0x7E0));
          log.add(model.name(), eps, "layers=" + std::to_string(layers),
                  trained.result.stages);
          const std::vector<DensityMatrix> states =
              gen_states(StateKind::w, n, config.trials, gseed);
          const EncoderPipeline& pipeline = trained.result.pipeline;
          const std::vector<TrialOutcome> trials = run_trials(
              config.trials, gseed, [&](int t, uint64_t) {
                const DensityMatrix& ideal = states[t];
                return mitigate_metrics(
                    ideal, apply_noise(ideal, model, eps), pipeline);
              });
          out.records.push_back(make_record(
              config, n, eps, trials,
              join_notes({noise_note(config.noise_kinds[k]),
                          "layers=" + std::to_string(layers),
                          "stages=" + std::to_string(config.stages)})));
        }
      }
    }
  }
  if (!log.empty()) out.artifacts[config.id + "-training.csv"] = log.body();
}

}  // namespace

RunOutput run_experiment(const ExperimentConfig& raw) {
  ExperimentConfig config = raw;
  if (config.id.empty()) config.id = kind_name(config.kind);
  config.validate();
  RunOutput out;
  switch (config.kind) {
    case ExperimentKind::known_encoder_sweep:
      run_known_family(config, /*ratio_note=*/false, out);
      break;
    case ExperimentKind::depol_scaling:
      run_known_family(config, /*ratio_note=*/true, out);
      break;
    case ExperimentKind::trained_sweep:
    case ExperimentKind::large_noise:
      run_trained_family(config, StateKind::w, out);
      break;
    case ExperimentKind::mixed_states:
      run_trained_family(config, StateKind::mixed_w, out);
      break;
    case ExperimentKind::h2:
      run_trained_family(config, StateKind::h2, out);
      break;
    case ExperimentKind::noisy_circuit:
      run_noisy_circuit(config, out);
      break;
    case ExperimentKind::measurement_study:
      run_measurement_study(config, out);
      break;
    case ExperimentKind::leakage:
      run_leakage(config, out);
      break;
    case ExperimentKind::purity_comparison:
      run_purity_comparison(config, out);
      break;
    case ExperimentKind::stage_comparison:
      run_stage_comparison(config, out);
      break;
    case ExperimentKind::layer_sweep:
      run_layer_sweep(config, out);
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

const std::vector<std::string>& report_header() {
  static const std::vector<std::string> header = {
      "kind",           "n",
      "epsilon",        "trials",
      "discarded",      "uncorrected_mean",
      "uncorrected_stderr", "corrected_mean",
      "corrected_stderr",   "keep_mean",
      "seed",           "notes"};
  return header;
}

}  // namespace

std::string emit_report(const std::vector<ResultRecord>& records) {
  CsvWriter csv(report_header());
  for (const ResultRecord& r : records) {
    csv.add_row({r.kind, std::to_string(r.n), fmt_cell(r.eps),
                 std::to_string(r.trials), std::to_string(r.discarded),
                 fmt_cell(r.uncorrected_mean), fmt_cell(r.uncorrected_stderr),
                 fmt_cell(r.corrected_mean), fmt_cell(r.corrected_stderr),
                 fmt_cell(r.keep_mean), std::to_string(r.seed), r.notes});
  }
  return csv.to_string();
}

std::vector<ResultRecord> parse_report(const std::string& csv_body) {
  std::istringstream in(csv_body);
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), Errc::io_error,
          "empty report");
  {
    std::string expected;
    for (std::size_t i = 0; i < report_header().size(); ++i) {
      if (i > 0) expected += ",";
      expected += report_header()[i];
    }
    require(line == expected, Errc::io_error, "unexpected report header");
  }
  std::vector<ResultRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (int i = 0; i < 11; ++i) {
      const std::size_t comma = line.find(',', start);
      require(comma != std::string::npos, Errc::io_error,
              "report row with too few cells");
      cells.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    cells.push_back(line.substr(start));
    try {
      ResultRecord r;
      r.kind = cells[0];
      r.n = std::stoi(cells[1]);
      r.eps = std::stod(cells[2]);
      r.trials = std::stoi(cells[3]);
      r.discarded = std::stoi(cells[4]);
      r.uncorrected_mean = std::stod(cells[5]);
      r.uncorrected_stderr = std::stod(cells[6]);
      r.corrected_mean = std::stod(cells[7]);
      r.corrected_stderr = std::stod(cells[8]);
      r.keep_mean = std::stod(cells[9]);
      r.seed = std::stoull(cells[10]);
      r.notes = cells[11];
      out.push_back(std::move(r));
    } catch (const std::exception&) {
      raise(Errc::io_error, "malformed report row: " + line);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON configuration

namespace {

using Json = nlohmann::ordered_json;

NoiseModel::Kind noise_kind_from_name(const std::string& name) {
  if (name == "global_depolarizing") {
    return NoiseModel::Kind::global_depolarizing;
  }
  if (name == "local_depolarizing") {
    return NoiseModel::Kind::local_depolarizing;
  }
  if (name == "leakage") return NoiseModel::Kind::leakage;
  raise(Errc::bad_config, "unknown noise model: " + name);
}

std::string noise_kind_name(NoiseModel::Kind kind) {
  switch (kind) {
    case NoiseModel::Kind::global_depolarizing:
      return "global_depolarizing";
    case NoiseModel::Kind::local_depolarizing:
      return "local_depolarizing";
    case NoiseModel::Kind::leakage:
      return "leakage";
    case NoiseModel::Kind::custom_kraus:
      return "custom_kraus";
  }
  return "unknown";
}

Json config_to_json_object(const ExperimentConfig& config) {
  Json j;
  j["kind"] = kind_name(config.kind);
  j["id"] = config.id;
  j["n_grid"] = config.n_grid;
  j["eps_grid"] = config.eps_grid;
  Json noises = Json::array();
  for (const NoiseModel::Kind kind : config.noise_kinds) {
    noises.push_back(noise_kind_name(kind));
  }
  j["noise"] = noises;
  j["trials"] = config.trials;
  j["layers"] = config.layers;
  j["stages"] = config.stages;
  j["circuit_grid"] = config.circuit_grid;
  j["layer_grid"] = config.layer_grid;
  j["seed"] = config.seed;
  return j;
}

}  // namespace

ExperimentConfig config_from_json(const std::string& json_body) {
  Json j;
  try {
    j = Json::parse(json_body);
  } catch (const std::exception& e) {
    raise(Errc::bad_config, std::string("configuration is not valid JSON: ") +
                                e.what());
  }
  require(j.is_object(), Errc::bad_config,
          "configuration must be a JSON object");
  ExperimentConfig config;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "kind") {
        config.kind = kind_from_name(value.get<std::string>());
      } else if (key == "id") {
        config.id = value.get<std::string>();
      } else if (key == "n_grid") {
        if (value.is_number_integer()) {
          config.n_grid = {value.get<int>()};
        } else {
          config.n_grid = value.get<std::vector<int>>();
        }
      } else if (key == "eps_grid") {
        if (value.is_number()) {
          config.eps_grid = {value.get<double>()};
        } else {
          config.eps_grid = value.get<std::vector<double>>();
        }
      } else if (key == "noise") {
        config.noise_kinds.clear();
        if (value.is_string()) {
          config.noise_kinds.push_back(
              noise_kind_from_name(value.get<std::string>()));
        } else {
          for (const auto& entry : value) {
            config.noise_kinds.push_back(
                noise_kind_from_name(entry.get<std::string>()));
          }
        }
      } else if (key == "trials") {
        config.trials = value.get<int>();
      } else if (key == "layers") {
        config.layers = value.get<int>();
      } else if (key == "stages") {
        config.stages = value.get<int>();
      } else if (key == "circuit_grid") {
        config.circuit_grid = value.get<std::vector<double>>();
      } else if (key == "layer_grid") {
        config.layer_grid = value.get<std::vector<int>>();
      } else if (key == "seed") {
        config.seed = value.get<uint64_t>();
      } else {
        raise(Errc::bad_config, "unknown configuration key: " + key);
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::bad_config, std::string("bad configuration value: ") +
                                e.what());
  }
  if (config.id.empty()) config.id = kind_name(config.kind);
  config.validate();
  return config;
}

std::string config_to_json(const ExperimentConfig& config) {
  return config_to_json_object(config).dump(2) + "\n";
}

std::string manifest_json(const ExperimentConfig& config,
                          double wall_seconds) {
  Json j;
  j["id"] = config.id.empty() ? kind_name(config.kind) : config.id;
  j["version"] = kVersion;
  j["seed"] = config.seed;
  j["wall_seconds"] = wall_seconds;
  j["config"] = config_to_json_object(config);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Figure registry

std::vector<std::string> figure_ids() {
  return {"fig2",        "fig4",          "figS-large",
          "figS-mixed",  "figS-noisycircuit", "figS-mismatch",
          "figS-leak",   "figS-h2",       "figS-purity",
          "figS-layers", "figS-stages",   "appB-scaling"};
}

ExperimentConfig figure_config(const std::string& figure_id) {
  ExperimentConfig config;
  config.id = figure_id;
  const std::vector<double> fine_grid = {0.01, 0.02, 0.03, 0.04, 0.05,
                                         0.06, 0.07, 0.08, 0.09, 0.10};
  const std::vector<double> train_grid = {0.02, 0.04, 0.06, 0.08, 0.10};
  const std::vector<NoiseModel::Kind> both = {
      NoiseModel::Kind::global_depolarizing,
      NoiseModel::Kind::local_depolarizing};
  if (figure_id == "fig2") {
    config.kind = ExperimentKind::known_encoder_sweep;
    config.n_grid = {2, 3, 4};
    config.eps_grid = fine_grid;
    config.noise_kinds = both;
  } else if (figure_id == "fig4") {
    config.kind = ExperimentKind::trained_sweep;
    config.eps_grid = train_grid;
    config.noise_kinds = both;
  } else if (figure_id == "figS-large") {
    config.kind = ExperimentKind::large_noise;
    config.eps_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    config.noise_kinds = both;
  } else if (figure_id == "figS-mixed") {
    config.kind = ExperimentKind::mixed_states;
    config.eps_grid = train_grid;
    config.noise_kinds = both;
  } else if (figure_id == "figS-noisycircuit") {
    config.kind = ExperimentKind::noisy_circuit;
    config.eps_grid = {0.1};
    config.circuit_grid = {0.0, 0.01, 0.02, 0.05, 0.1};
    config.noise_kinds = both;
  } else if (figure_id == "figS-mismatch") {
    config.kind = ExperimentKind::measurement_study;
    config.eps_grid = {0.02, 0.04, 0.06, 0.08, 0.10};
  } else if (figure_id == "figS-leak") {
    config.kind = ExperimentKind::leakage;
    config.n_grid = {5};
    config.eps_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    config.noise_kinds = {NoiseModel::Kind::leakage};
  } else if (figure_id == "figS-h2") {
    config.kind = ExperimentKind::h2;
    config.eps_grid = train_grid;
    config.noise_kinds = both;
  } else if (figure_id == "figS-purity") {
    config.kind = ExperimentKind::purity_comparison;
    config.eps_grid = {0.1};
    config.trials = 1;
  } else if (figure_id == "figS-layers") {
    config.kind = ExperimentKind::layer_sweep;
    config.eps_grid = {0.1};
    config.layer_grid = {1, 2, 3};
    config.noise_kinds = both;
  } else if (figure_id == "figS-stages") {
    config.kind = ExperimentKind::stage_comparison;
    config.eps_grid = {0.1};
    config.trials = 1;
  } else if (figure_id == "appB-scaling") {
    config.kind = ExperimentKind::depol_scaling;
    config.n_grid = {2, 3, 4};
    config.eps_grid = {0.05};
  } else {
    raise(Errc::bad_kind, "unknown figure id: " + figure_id);
  }
  return config;
}

}  // namespace qaem
