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

#include "qaem/training.hpp"

#include <cmath>
#include <numbers>

#include "qaem/rng.hpp"

namespace qaem {

CostSpec CostSpec::junk_weight(Projector junk_projector) {
  CostSpec spec;
  spec.kind = Kind::junk_weight;
  spec.junk = std::move(junk_projector);
  return spec;
}

CostSpec CostSpec::subsystem_purity(std::vector<int> trash) {
  CostSpec spec;
  spec.kind = Kind::subsystem_purity;
  spec.purity_trash = std::move(trash);
  return spec;
}

TrainingSet TrainingSet::noisy(const std::vector<DensityMatrix>& ideal,
                               const NoiseModel& model, double eps) {
  TrainingSet out;
  out.states.reserve(ideal.size());
  for (const DensityMatrix& rho : ideal) {
    out.states.push_back(apply_noise(rho, model, eps));
  }
  return out;
}

namespace {

std::vector<double> normalized_weights(std::size_t count,
                                       const std::vector<double>& weights) {
  require(count > 0, Errc::bad_config, "empty training set");
  std::vector<double> out;
  if (weights.empty()) {
    out.assign(count, 1.0 / static_cast<double>(count));
    return out;
  }
  require(weights.size() == count, Errc::bad_config,
          "weight count does not match the state count");
  double total = 0.0;
  for (const double w : weights) {
    require(w >= 0.0, Errc::bad_config, "negative training weight");
    total += w;
  }
  require(total > 0.0, Errc::bad_config, "training weights sum to zero");
  out.reserve(count);
  for (const double w : weights) out.push_back(w / total);
  return out;
}

DensityMatrix weighted_mean(const std::vector<DensityMatrix>& states,
                            const std::vector<double>& weights) {
  const HilbertSpace& space = states.front().space();
  Matrix mean = Matrix::Zero(space.dim(), space.dim());
  for (std::size_t k = 0; k < states.size(); ++k) {
    require(states[k].space() == space, Errc::dimension_mismatch,
            "training states live on different spaces");
    mean += weights[k] * states[k].matrix();
  }
  return DensityMatrix(space, std::move(mean));
}

}  // namespace

double cost_projection(const Matrix& encoder, const Projector& junk,
                       const DensityMatrix& mean_state) {
  require(encoder.rows() == mean_state.space().dim() &&
              encoder.cols() == encoder.rows(),
          Errc::dimension_mismatch, "encoder does not match the state");
  require(junk.space() == mean_state.space(), Errc::dimension_mismatch,
          "junk projector does not match the state");
  const Matrix sigma = encoder * mean_state.matrix() * encoder.adjoint();
  return (junk.matrix() * sigma).trace().real();
}

double cost_purity(const Matrix& encoder, const std::vector<int>& trash,
                   const std::vector<DensityMatrix>& states,
                   const std::vector<double>& weights) {
  require(!trash.empty(), Errc::bad_subsystem, "empty trash factor list");
  const std::vector<double> w = normalized_weights(states.size(), weights);
  const HilbertSpace& space = states.front().space();
  double mean_purity = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const Matrix sigma =
        encoder * states[k].matrix() * encoder.adjoint();
    const DensityMatrix encoded(space, sigma);
    for (const int q : trash) {
      mean_purity +=
          w[k] * purity(partial_trace(encoded, {q})) / trash.size();
    }
  }
  return 1.0 - mean_purity;
}

RealVector finite_diff_grad(
    const std::function<double(const RealVector&)>& cost,
    const RealVector& theta, double step) {
  require(step > 0.0, Errc::bad_config, "finite-difference step must be > 0");
  RealVector grad(theta.size());
  RealVector probe = theta;
  for (Index i = 0; i < theta.size(); ++i) {
    probe(i) = theta(i) + step;
    const double up = cost(probe);
    probe(i) = theta(i) - step;
    const double down = cost(probe);
    probe(i) = theta(i);
    grad(i) = (up - down) / (2.0 * step);
    require(std::isfinite(grad(i)), Errc::non_finite_cost,
            "finite-difference gradient is not finite");
  }
  return grad;
}

namespace {

struct Attempt {
  RealVector theta;
  std::vector<double> history;
  int iterations = 0;
  bool converged = false;
};

Attempt run_descent(const std::function<double(const RealVector&)>& cost,
                    RealVector theta, const StageConfig& config) {
  Attempt out;
  double current = cost(theta);
  require(std::isfinite(current), Errc::non_finite_cost,
          "cost is not finite at the initial point");
  out.history.push_back(current);
  for (int iter = 0; iter < config.max_iters; ++iter) {
    const RealVector grad = finite_diff_grad(cost, theta, config.fd_step);
    theta -= config.learning_rate * grad;
    current = cost(theta);
    require(std::isfinite(current), Errc::non_finite_cost,
            "cost became non-finite during descent");
    out.history.push_back(current);
    out.iterations = iter + 1;
    const std::size_t window = static_cast<std::size_t>(config.convergence_window);
    if (out.history.size() > window) {
      const double before = out.history[out.history.size() - 1 - window];
      if (before - current < config.min_improvement) {
        out.converged = true;
        break;
      }
    }
  }
  out.theta = std::move(theta);
  return out;
}

}  // namespace

TrainRecord train_stage(const std::function<double(const RealVector&)>& cost,
                        RealVector& theta, const StageConfig& config) {
  require(config.learning_rate > 0.0, Errc::bad_config,
          "learning rate must be positive");
  require(config.max_iters >= 1, Errc::bad_config,
          "iteration budget must be at least 1");
  require(config.convergence_window >= 1, Errc::bad_config,
          "convergence window must be at least 1");
  require(config.restarts >= 1, Errc::bad_config,
          "restart budget must be at least 1");

  TrainRecord record;
  bool have_best = false;
  Attempt best;
  for (int attempt = 0; attempt < config.restarts; ++attempt) {
    RealVector init = theta;
    if (attempt > 0) {
      // Fresh seeded initialization for every retry, over a widening range
      // so that retries can leave the small-angle basin (see StageConfig).
      const double half_range =
          std::min(std::numbers::pi,
                   std::max(config.init_half_range,
                            0.5 * std::numbers::pi * attempt));
      Rng rng(Rng::derive_seed(config.seed, 0xA11, attempt));
      for (Index i = 0; i < init.size(); ++i) {
        init(i) = (2.0 * rng.uniform() - 1.0) * half_range;
      }
    }
    Attempt result = run_descent(cost, std::move(init), config);
    record.restarts_used = attempt;
    if (!have_best || result.history.back() < best.history.back()) {
      best = std::move(result);
      have_best = true;
    }
    if (config.accept_cost && best.history.back() <= *config.accept_cost) {
      break;
    }
  }
  theta = best.theta;
  record.iterations = best.iterations;
  record.converged = best.converged;
  record.initial_cost = best.history.front();
  record.final_cost = best.history.back();
  record.cost_history = std::move(best.history);
  return record;
}

namespace {

// Restarts stop once a junk-weight stage is within 10% of the spectral
// lower bound of its cost (the junk-rank smallest eigenvalues of the mean
// training state). The absolute term covers noise-free stages, whose bound
// is zero.
constexpr double kAcceptSlack = 1.10;
constexpr double kAcceptAbsolute = 5e-4;

double junk_spectral_floor(const Projector& junk,
                           const DensityMatrix& mean_state) {
  const HermitianEigen eig = hermitian_eig(mean_state.matrix());
  double sum = 0.0;  // eigenvalues ascend
  for (Index i = 0; i < junk.rank() && i < eig.eigenvalues.size(); ++i) {
    sum += std::max(0.0, eig.eigenvalues(i));
  }
  return sum;
}

std::function<double(const RealVector&)> stage_cost_fn(
    const LayeredAnsatz& ansatz, int group, const CostSpec& spec,
    const Matrix& frozen, const DensityMatrix& mean_state,
    const std::vector<DensityMatrix>& states,
    const std::vector<double>& weights) {
  if (spec.kind == CostSpec::Kind::junk_weight) {
    require(spec.junk.has_value(), Errc::bad_config,
            "junk-weight stage without a junk projector");
    // The cost is linear in the input state, so the whole training set
    // collapses to its weighted mean, conjugated once by the frozen
    // earlier groups.
    const DensityMatrix staged(
        mean_state.space(),
        frozen * mean_state.matrix() * frozen.adjoint());
    const Projector junk = *spec.junk;
    return [&ansatz, group, junk, staged](const RealVector& slice) {
      return cost_projection(ansatz.group_unitary(slice, group), junk,
                             staged);
    };
  }
  require(!spec.purity_trash.empty(), Errc::bad_config,
          "purity stage without trash factors");
  std::vector<DensityMatrix> staged;
  staged.reserve(states.size());
  for (const DensityMatrix& rho : states) {
    staged.emplace_back(rho.space(),
                        frozen * rho.matrix() * frozen.adjoint());
  }
  const std::vector<int> trash = spec.purity_trash;
  const std::vector<double> w = weights;
  return [&ansatz, group, trash, staged, w](const RealVector& slice) {
    return cost_purity(ansatz.group_unitary(slice, group), trash, staged, w);
  };
}

}  // namespace

MultiStageResult train_multistage(const LayeredAnsatz& ansatz,
                                  const TrainingSet& data,
                                  const std::vector<CostSpec>& stage_costs,
                                  const Projector& final_latent,
                                  const StageConfig& config) {
  require(static_cast<int>(stage_costs.size()) == ansatz.groups(),
          Errc::bad_config, "one cost per ansatz group is required");
  const std::vector<double> weights =
      normalized_weights(data.states.size(), data.weights);
  const DensityMatrix mean_state = weighted_mean(data.states, weights);
  require(final_latent.space() == mean_state.space(),
          Errc::dimension_mismatch,
          "latent projector does not match the training data");
  require(mean_state.space().dim() == (Index{1} << ansatz.qubits()),
          Errc::dimension_mismatch,
          "ansatz register does not match the training data");

  ParamVector theta = ansatz.zero_params();
  Matrix frozen = Matrix::Identity(mean_state.space().dim(),
                                   mean_state.space().dim());
  std::vector<TrainRecord> records;
  for (int g = 0; g < ansatz.groups(); ++g) {
    StageConfig stage_config = config;
    stage_config.seed = Rng::derive_seed(config.seed, 0x57A6E, g);
    if (!stage_config.accept_cost &&
        stage_costs[g].kind == CostSpec::Kind::junk_weight &&
        stage_costs[g].junk.has_value()) {
      stage_config.accept_cost =
          std::max(kAcceptSlack * junk_spectral_floor(*stage_costs[g].junk,
                                                      mean_state),
                   kAcceptAbsolute);
    }
    auto cost = stage_cost_fn(ansatz, g, stage_costs[g], frozen, mean_state,
                              data.states, weights);
    // Attempt 0 starts from a seeded random point; retries reseed inside
    // train_stage.
    RealVector slice(ansatz.params_per_group());
    {
      Rng rng(Rng::derive_seed(stage_config.seed, 0xA11, 0));
      for (Index i = 0; i < slice.size(); ++i) {
        slice(i) = (2.0 * rng.uniform() - 1.0) * config.init_half_range;
      }
    }
    TrainRecord record = train_stage(cost, slice, stage_config);
    record.stage = g;
    records.push_back(std::move(record));
    theta.values.segment(g * ansatz.params_per_group(),
                         ansatz.params_per_group()) = slice;
    frozen = ansatz.group_unitary(slice, g) * frozen;
  }

  MultiStageResult out{
      EncoderPipeline(ansatz.unitary(theta), final_latent),
      std::move(theta), std::move(records)};
  return out;
}

MultiStageResult train_encoder(const LayeredAnsatz& ansatz,
                               const TrainingSet& data,
                               const Projector& latent,
                               const StageConfig& config) {
  std::vector<CostSpec> costs;
  for (int g = 0; g < ansatz.groups(); ++g) {
    costs.push_back(CostSpec::junk_weight(latent.complement()));
  }
  return train_multistage(ansatz, data, costs, latent, config);
}

QuditTrainResult train_qudit_encoder(const QuditGeneratorAnsatz& ansatz,
                                     const TrainingSet& data,
                                     const Projector& latent,
                                     const StageConfig& config) {
  require(ansatz.mode == QuditGeneratorAnsatz::Mode::hermitian_pair,
          Errc::bad_config,
          "training requires the unitary generator reading");
  const std::vector<double> weights =
      normalized_weights(data.states.size(), data.weights);
  const DensityMatrix mean_state = weighted_mean(data.states, weights);
  require(latent.space() == mean_state.space(), Errc::dimension_mismatch,
          "latent projector does not match the training data");
  require(mean_state.space().dim() == ansatz.d, Errc::dimension_mismatch,
          "ansatz dimension does not match the training data");

  const Projector junk = latent.complement();
  auto cost = [&ansatz, &junk, &mean_state](const RealVector& angles) {
    return cost_projection(qudit_generator_unitary(ansatz, angles), junk,
                           mean_state);
  };

  StageConfig stage_config = config;
  if (!stage_config.accept_cost) {
    stage_config.accept_cost =
        std::max(kAcceptSlack * junk_spectral_floor(junk, mean_state),
                 kAcceptAbsolute);
  }

  RealVector angles(ansatz.param_count());
  {
    Rng rng(Rng::derive_seed(config.seed, 0xA11, 0));
    for (Index i = 0; i < angles.size(); ++i) {
      angles(i) = (2.0 * rng.uniform() - 1.0) * config.init_half_range;
    }
  }
  TrainRecord record = train_stage(cost, angles, stage_config);

  ParamVector theta{ansatz.fingerprint(), angles};
  QuditTrainResult out{
      EncoderPipeline(qudit_generator_unitary(ansatz, angles), latent),
      std::move(theta), std::move(record)};
  return out;
}

}  // namespace qaem
