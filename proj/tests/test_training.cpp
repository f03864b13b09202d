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
#include <vector>

#include "qaem/harness.hpp"
#include "test_support.hpp"

namespace qaem {
namespace {

using test::fnorm;

TEST_CASE("finite_diff_grad is exact on quadratics") {
  auto cost = [](const RealVector& x) {
    return 3.0 * x(0) * x(0) + 0.5 * x(1) * x(1) + x(0) * x(1);
  };
  RealVector x(2);
  x << 1.0, -2.0;
  const RealVector grad = finite_diff_grad(cost, x, 1e-5);
  CHECK(grad(0) == doctest::Approx(6.0 * 1.0 + (-2.0)).epsilon(1e-8));
  CHECK(grad(1) == doctest::Approx(1.0 * (-2.0) + 1.0).epsilon(1e-8));
  auto constant = [](const RealVector&) { return 42.0; };
  CHECK(finite_diff_grad(constant, x, 1e-5).norm() == 0.0);
  CHECK_RAISES(Errc::bad_config, finite_diff_grad(cost, x, 0.0));
}

TEST_CASE("finite_diff_grad agrees across step sizes on a smooth cost") {
  const LayeredAnsatz ansatz(2, 1, 1);
  const HilbertSpace space = HilbertSpace::qubits(2);
  const Projector junk = latent_projector(space, 1).second;
  const DensityMatrix mean = DensityMatrix::maximally_mixed(space);
  const std::vector<DensityMatrix> data = w_training_states(2);
  Matrix m = 0.5 * (data[0].matrix() + data[1].matrix());
  const DensityMatrix rho(space, std::move(m));
  auto cost = [&](const RealVector& th) {
    return cost_projection(ansatz.group_unitary(th, 0), junk, rho);
  };
  const ParamVector theta = ansatz.random_params(0.7, 99);
  const RealVector g1 = finite_diff_grad(cost, theta.values, 1e-5);
  const RealVector g2 = finite_diff_grad(cost, theta.values, 1e-6);
  CHECK((g1 - g2).norm() <= 1e-3 * std::max(1.0, g1.norm()));
}

TEST_CASE("cost_projection matches a hand-evaluated junk weight") {
  const HilbertSpace space = HilbertSpace::qubits(2);
  const Projector junk = latent_projector(space, 1).second;
  // |10> sits entirely in the junk half, |01> entirely in the latent half.
  const std::vector<DensityMatrix> basis = w_training_states(2);
  Matrix mean = 0.5 * (basis[0].matrix() + basis[1].matrix());
  const DensityMatrix rho(space, std::move(mean));
  CHECK(cost_projection(Matrix::Identity(4, 4), junk, rho) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // Maximally mixed input: junk weight = rank(M_J)/N.
  CHECK(cost_projection(Matrix::Identity(4, 4), junk,
                        DensityMatrix::maximally_mixed(space)) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cost_purity is zero iff the trash factors are pure") {
  const HilbertSpace space = HilbertSpace::qubits(2);
  // Product state: qubit 0 pure |0>, so trash {0} has purity 1.
  const DensityMatrix product = DensityMatrix::from_pure(
      PureState::basis(space, 1));  // |01>
  CHECK(cost_purity(Matrix::Identity(4, 4), {0}, {product}, {}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // Bell-type state: the reduced qubit is maximally mixed, cost 1/2.
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const DensityMatrix entangled =
      DensityMatrix::from_pure(PureState(space, bell));
  CHECK(cost_purity(Matrix::Identity(4, 4), {0}, {entangled}, {}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_RAISES(Errc::bad_subsystem,
               cost_purity(Matrix::Identity(4, 4), {}, {product}, {}));
}

TEST_CASE("TrainingSet::noisy applies the mixing law per state") {
  const std::vector<DensityMatrix> ideal = w_training_states(2);
  const NoiseModel model = NoiseModel::global_depolarizing();
  const TrainingSet data = TrainingSet::noisy(ideal, model, 0.25);
  REQUIRE(data.states.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(fnorm(data.states[k].matrix(),
                apply_noise(ideal[k], model, 0.25).matrix()) == 0.0);
  }
}

TEST_CASE("train_stage minimizes a convex bowl") {
  auto cost = [](const RealVector& x) { return (x.array() - 1.5).square().sum(); };
  RealVector theta = RealVector::Zero(3);
  StageConfig config;
  config.learning_rate = 0.1;
  config.max_iters = 2000;
  const TrainRecord record = train_stage(cost, theta, config);
  CHECK(record.final_cost < 1e-8);
  CHECK(record.converged);
  CHECK((theta.array() - 1.5).abs().maxCoeff() < 1e-4);
  CHECK(record.cost_history.size() ==
        static_cast<std::size_t>(record.iterations) + 1);
  CHECK(record.final_cost == record.cost_history.back());
  CHECK(record.initial_cost == record.cost_history.front());
  // Already optimal: the window closes immediately.
  RealVector opt = RealVector::Constant(3, 1.5);
  const TrainRecord trivial = train_stage(cost, opt, config);
  CHECK(trivial.final_cost < 1e-12);
  CHECK(trivial.iterations <= config.convergence_window + 1);
}

TEST_CASE("train_stage escapes a bad start through widening restarts") {
  // One-dimensional double well with the right-hand basin strictly worse:
  // f(x) = (x^2 - 1)^2 + 0.3 x. Starting at the right minimum (~ +0.96),
  // attempt 0 stays there; a wide restart can find the left basin (~ -1.04).
  auto cost = [](const RealVector& x) {
    const double v = x(0) * x(0) - 1.0;
    return v * v + 0.3 * x(0);
  };
  RealVector theta(1);
  theta << 0.95;
  StageConfig config;
  config.learning_rate = 0.05;
  config.max_iters = 3000;
  config.restarts = 4;
  config.seed = 3;
  const TrainRecord record = train_stage(cost, theta, config);
  CHECK(theta(0) < 0.0);
  CHECK(record.restarts_used >= 1);
  CHECK(record.final_cost < -0.25);
}

TEST_CASE("train_stage accept_cost stops the restart loop early") {
  auto cost = [](const RealVector& x) { return x.squaredNorm(); };
  RealVector theta = RealVector::Constant(2, 0.05);
  StageConfig config;
  config.learning_rate = 0.2;
  config.max_iters = 500;
  config.restarts = 4;
  config.accept_cost = 1e-6;
  const TrainRecord record = train_stage(cost, theta, config);
  CHECK(record.final_cost <= 1e-6);
  CHECK(record.restarts_used == 0);  // attempt 0 already qualifies
}

TEST_CASE("train_stage is deterministic per seed") {
  const LayeredAnsatz ansatz(2, 1, 1);
  const HilbertSpace space = HilbertSpace::qubits(2);
  const Projector junk = latent_projector(space, 1).second;
  const TrainingSet data = TrainingSet::noisy(
      w_training_states(2), NoiseModel::global_depolarizing(), 0.1);
  Matrix mean = 0.5 * (data.states[0].matrix() + data.states[1].matrix());
  const DensityMatrix rho(space, std::move(mean));
  auto cost = [&](const RealVector& th) {
    return cost_projection(ansatz.group_unitary(th, 0), junk, rho);
  };
  StageConfig config;
  config.max_iters = 60;
  config.restarts = 2;
  config.seed = 1234;
  RealVector a = RealVector::Zero(ansatz.params_per_group());
  RealVector b = RealVector::Zero(ansatz.params_per_group());
  const TrainRecord ra = train_stage(cost, a, config);
  const TrainRecord rb = train_stage(cost, b, config);
  CHECK((a - b).norm() == 0.0);
  CHECK(ra.final_cost == rb.final_cost);
  CHECK(ra.cost_history == rb.cost_history);
}

TEST_CASE("train_encoder compresses an off-diagonal two-qubit family") {
  // Support span{|00>, |10>}: the mean has off-diagonal weight, so the
  // gradient at the identity is nonzero and a single stage compresses it
  // into the latent half (first qubit |0>).
  const HilbertSpace space = HilbertSpace::qubits(2);
  Vector plus = Vector::Zero(4);
  plus(0) = plus(2) = 1.0 / std::sqrt(2.0);
  Vector minus = Vector::Zero(4);
  minus(0) = 0.6;
  minus(2) = -0.8;
  const TrainingSet data{
      {DensityMatrix::from_pure(PureState(space, plus)),
       DensityMatrix::from_pure(PureState(space, minus))},
      {}};
  const LayeredAnsatz ansatz(2, 1, 1);
  StageConfig config;
  config.max_iters = 4000;
  config.seed = 7;
  const MultiStageResult result = train_encoder(
      ansatz, data, latent_projector(space, 1).first, config);
  REQUIRE(result.stages.size() == 1);
  CHECK(result.stages[0].final_cost < 5e-4);
  // The trained encoder maps both inputs into the latent half.
  const Projector junk = latent_projector(space, 1).second;
  for (const DensityMatrix& rho : data.states) {
    const Matrix sigma = result.pipeline.encode_unitary * rho.matrix() *
                         result.pipeline.encode_unitary.adjoint();
    CHECK((junk.matrix() * sigma).trace().real() < 2e-3);
  }
}

TEST_CASE("train_qudit_encoder rotates a level into the latent span") {
  // Data on levels 1..2 of a qutrit, latent span{|0>, |1>}: the trainer
  // has to move level 2 onto level 0.
  const HilbertSpace space = HilbertSpace::qudit(3);
  const TrainingSet data{
      {DensityMatrix::from_pure(PureState::basis(space, 1)),
       DensityMatrix::from_pure(PureState::basis(space, 2))},
      {}};
  Matrix latent_m = Matrix::Zero(3, 3);
  latent_m(0, 0) = latent_m(1, 1) = 1.0;
  const Projector latent(space, latent_m);
  const auto ansatz = QuditGeneratorAnsatz::full(
      3, 0, 2, QuditGeneratorAnsatz::Mode::hermitian_pair);
  StageConfig config;
  config.max_iters = 3000;
  config.seed = 5;
  const QuditTrainResult result =
      train_qudit_encoder(ansatz, data, latent, config);
  CHECK(result.record.final_cost <= 5e-4);
  CHECK(is_unitary(result.pipeline.encode_unitary, 1e-9));
  // Literal-mode ansätze are rejected for training.
  const auto literal = QuditGeneratorAnsatz::full(
      3, 0, 2, QuditGeneratorAnsatz::Mode::literal);
  CHECK_RAISES(Errc::bad_config,
               train_qudit_encoder(literal, data, latent, config));
}

TEST_CASE("train_multistage validates its stage list") {
  const HilbertSpace space = HilbertSpace::qubits(2);
  const TrainingSet data{w_training_states(2), {}};
  const LayeredAnsatz ansatz(2, 1, 2);
  StageConfig config;
  config.max_iters = 5;
  CHECK_RAISES(
      Errc::bad_config,
      train_multistage(ansatz, data,
                       {CostSpec::junk_weight(latent_projector(space, 1).second)},
                       latent_projector(space, 1).first, config));
}

TEST_CASE("weight validation rejects bad weight vectors") {
  const HilbertSpace space = HilbertSpace::qubits(2);
  TrainingSet data{w_training_states(2), {0.5, -0.5}};
  const LayeredAnsatz ansatz(2, 1, 1);
  StageConfig config;
  config.max_iters = 5;
  CHECK_RAISES(Errc::bad_config,
               train_encoder(ansatz, data, latent_projector(space, 1).first,
                             config));
}

}  // namespace
}  // namespace qaem
