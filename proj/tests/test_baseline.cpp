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

#include "qaem/baseline.hpp"

#include <cmath>

#include "qaem/harness.hpp"
#include "qaem/mitigation.hpp"
#include "qaem/noise.hpp"
#include "test_support.hpp"

namespace qaem {
namespace {

using test::fnorm;
using test::random_density;

TEST_CASE("NnLayout splits factor indices by register") {
  const NnLayout layout{HilbertSpace::qubits(2), HilbertSpace::qubits(1),
                        HilbertSpace::qubits(2)};
  CHECK(layout.total().dim() == 32);
  CHECK(layout.input_factors() == std::vector<int>{0, 1});
  CHECK(layout.hidden_factors() == std::vector<int>{2});
  CHECK(layout.output_factors() == std::vector<int>{3, 4});
  const NnLayout no_hidden{HilbertSpace::qudit(3), HilbertSpace{},
                           HilbertSpace::qudit(3)};
  CHECK(no_hidden.dim() == 9);
  CHECK(no_hidden.hidden_factors().empty());
}

TEST_CASE("swap_registers exchanges register contents") {
  const Matrix s = swap_registers(2, 2);
  // |i>|j> -> |j>|i>: basis index i*2+j maps to j*2+i.
  CHECK(s(0, 0) == Complex(1, 0));
  CHECK(s(2, 1) == Complex(1, 0));
  CHECK(s(1, 2) == Complex(1, 0));
  CHECK(s(3, 3) == Complex(1, 0));
  CHECK(is_unitary(s, 1e-14));
  // Unequal dimensions still give a permutation.
  const Matrix s23 = swap_registers(2, 3);
  CHECK(is_unitary(s23, 1e-14));
  const Matrix a = test::random_matrix(2, 2, 5);
  const Matrix b = test::random_matrix(3, 3, 6);
  CHECK(fnorm(s23 * kron(a, b) * swap_registers(3, 2), kron(b, a)) < 1e-12);
}

TEST_CASE("nn_output grows ancillas, evolves, and traces down") {
  // Identity network: the output register stays in |0><0|.
  const HilbertSpace in = HilbertSpace::qubits(1);
  const NnLayout layout{in, HilbertSpace{}, in};
  const DensityMatrix rho = random_density(in, 31);
  const DensityMatrix out =
      nn_output(layout, Matrix::Identity(4, 4), rho);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK(fnorm(out.matrix(), expected) < 1e-13);

  // SWAP network: the output register receives the input state.
  const DensityMatrix swapped =
      nn_output(layout, swap_registers(2, 2), rho);
  CHECK(fnorm(swapped.matrix(), rho.matrix()) < 1e-12);

  CHECK_RAISES(Errc::non_unitary,
               nn_output(layout, 2.0 * Matrix::Identity(4, 4), rho));
}

TEST_CASE("nn_postselected_output renormalizes the kept branch") {
  const HilbertSpace in = HilbertSpace::qubits(1);
  const NnLayout layout{in, HilbertSpace{}, in};
  const DensityMatrix rho = random_density(in, 32);
  // Keep only the input-register |0> branch after a SWAP: probability is
  // the output-register |0> weight, i.e. rho(0,0) pre-swap... post-swap the
  // input register holds |0><0| ancilla, so keep probability is 1.
  const Projector keep(layout.total(), [] {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = 1.0;  // input qubit |0>
    return m;
  }());
  const NnPostselected out =
      nn_postselected_output(layout, swap_registers(2, 2), keep, rho);
  CHECK(out.keep_probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fnorm(out.output.matrix(), rho.matrix()) < 1e-12);
}

TEST_CASE("haar_random_unitary is deterministic and unitary") {
  const Matrix u = haar_random_unitary(8, 123);
  CHECK(is_unitary(u, 1e-10));
  CHECK(fnorm(u, haar_random_unitary(8, 123)) == 0.0);
  CHECK(fnorm(u, haar_random_unitary(8, 124)) > 1e-3);
  // Column magnitudes spread over the space: mean |entry|^2 = 1/dim.
  double mean = 0.0;
  for (Index i = 0; i < 8; ++i)
    for (Index j = 0; j < 8; ++j) mean += std::norm(u(i, j));
  mean /= 64.0;
  CHECK(mean == doctest::Approx(1.0 / 8.0).epsilon(1e-10));
}

TEST_CASE("detection_to_nn reproduces mitigate exactly") {
  const EncoderPipeline pipeline = known_w_pipeline(2);
  const NnEmbedding embedding = detection_to_nn(pipeline);
  CHECK(embedding.layout.dim() == 16);
  CHECK(is_unitary(embedding.network, 1e-10));
  CHECK(is_unitary(embedding.decoder, 1e-10));

  const std::vector<DensityMatrix> states = gen_states(StateKind::w, 2, 3, 55);
  for (const DensityMatrix& ideal : states) {
    const DensityMatrix noisy =
        apply_noise(ideal, NoiseModel::global_depolarizing(), 0.2);
    const MitigationOutcome direct = mitigate(noisy, pipeline);
    const NnPostselected embedded = nn_embedded_mitigate(embedding, noisy);
    CHECK(fnorm(embedded.output.matrix(), direct.corrected.matrix()) <
          1e-12);
    CHECK(std::abs(embedded.keep_probability - direct.keep_probability) <
          1e-12);
  }
}

TEST_CASE("nn_embedded_mitigate rejects empty branches") {
  const HilbertSpace space = HilbertSpace::qubits(1);
  const Matrix u = Matrix::Identity(2, 2);
  Matrix latent_m = Matrix::Zero(2, 2);
  latent_m(0, 0) = 1.0;
  const EncoderPipeline pipe(u, Projector(space, latent_m));
  const NnEmbedding embedding = detection_to_nn(pipe);
  const DensityMatrix one =
      DensityMatrix::from_pure(PureState::basis(space, 1));
  CHECK_RAISES(Errc::all_discarded, nn_embedded_mitigate(embedding, one));
}

}  // namespace
}  // namespace qaem
