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

#include <numeric>

#include "qaem/rng.hpp"

namespace qaem {

HilbertSpace NnLayout::total() const {
  std::vector<Index> dims = input.factor_dims;
  dims.insert(dims.end(), hidden.factor_dims.begin(),
              hidden.factor_dims.end());
  dims.insert(dims.end(), output.factor_dims.begin(),
              output.factor_dims.end());
  return HilbertSpace(std::move(dims));
}

std::vector<int> NnLayout::input_factors() const {
  std::vector<int> out(input.factor_dims.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<int> NnLayout::hidden_factors() const {
  std::vector<int> out(hidden.factor_dims.size());
  std::iota(out.begin(), out.end(), input.factors());
  return out;
}

std::vector<int> NnLayout::output_factors() const {
  std::vector<int> out(output.factor_dims.size());
  std::iota(out.begin(), out.end(), input.factors() + hidden.factors());
  return out;
}

namespace {

// rho_in (x) |0...0><0...0| over the hidden and output registers.
DensityMatrix grown_input(const NnLayout& layout, const DensityMatrix& input) {
  require(input.space() == layout.input, Errc::dimension_mismatch,
          "input state does not match the network layout");
  const Index anc_dim = layout.hidden.dim() * layout.output.dim();
  require(anc_dim >= 2, Errc::bad_subsystem,
          "network needs a nontrivial output register");
  Matrix anc = Matrix::Zero(anc_dim, anc_dim);
  anc(0, 0) = Complex(1.0, 0.0);
  return DensityMatrix(layout.total(), kron(input.matrix(), anc));
}

Matrix conjugated(const NnLayout& layout, const Matrix& network,
                  const DensityMatrix& full) {
  require(network.rows() == layout.dim() && network.cols() == layout.dim(),
          Errc::dimension_mismatch,
          "network unitary does not match the layout");
  require(is_unitary(network, tol().unitary), Errc::non_unitary,
          "network matrix is not unitary");
  return network * full.matrix() * network.adjoint();
}

}  // namespace

DensityMatrix nn_output(const NnLayout& layout, const Matrix& network,
                        const DensityMatrix& input) {
  const DensityMatrix full = grown_input(layout, input);
  const DensityMatrix evolved(layout.total(),
                              conjugated(layout, network, full));
  return partial_trace(evolved, layout.output_factors());
}

NnPostselected nn_postselected_output(const NnLayout& layout,
                                      const Matrix& network,
                                      const Projector& keep,
                                      const DensityMatrix& input) {
  const DensityMatrix full = grown_input(layout, input);
  require(keep.space() == full.space(), Errc::dimension_mismatch,
          "post-selection projector does not match the layout");
  Matrix sigma = conjugated(layout, network, full);
  Matrix kept = keep.matrix() * sigma * keep.matrix();
  const double p = kept.trace().real();
  require(p > tol().zero_weight, Errc::all_discarded,
          "every network outcome was post-selected away");
  kept /= p;
  const DensityMatrix selected(full.space(), std::move(kept));
  return {partial_trace(selected, layout.output_factors()), p};
}

Matrix swap_registers(Index dim_a, Index dim_b) {
  require(dim_a >= 1 && dim_b >= 1, Errc::bad_subsystem,
          "register dimensions must be positive");
  const Index d = dim_a * dim_b;
  Matrix s = Matrix::Zero(d, d);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index j = 0; j < dim_b; ++j) {
      s(j * dim_a + i, i * dim_b + j) = Complex(1.0, 0.0);
    }
  }
  return s;
}

NnEmbedding detection_to_nn(const EncoderPipeline& pipeline) {
  const HilbertSpace& space = pipeline.space();
  const Index n = space.dim();
  const Matrix eye = Matrix::Identity(n, n);
  NnEmbedding out{
      NnLayout{space, HilbertSpace{}, space},
      kron(pipeline.encode_unitary, eye),
      Projector(NnLayout{space, HilbertSpace{}, space}.total(),
                kron(pipeline.latent_projector.matrix(), eye)),
      kron(eye, pipeline.encode_unitary.adjoint()) * swap_registers(n, n)};
  return out;
}

NnPostselected nn_embedded_mitigate(const NnEmbedding& embedding,
                                    const DensityMatrix& input) {
  const DensityMatrix full = grown_input(embedding.layout, input);
  require(embedding.keep.space() == full.space(), Errc::dimension_mismatch,
          "embedding projector does not match the layout");
  Matrix sigma = conjugated(embedding.layout, embedding.network, full);
  Matrix kept = embedding.keep.matrix() * sigma * embedding.keep.matrix();
  const double p = kept.trace().real();
  require(p > tol().zero_weight, Errc::all_discarded,
          "every network outcome was post-selected away");
  kept /= p;
  const Matrix decoded =
      embedding.decoder * kept * embedding.decoder.adjoint();
  const DensityMatrix selected(full.space(), decoded);
  return {partial_trace(selected, embedding.layout.output_factors()), p};
}

Matrix haar_random_unitary(Index dim, uint64_t seed) {
  require(dim >= 1, Errc::bad_subsystem, "dimension must be positive");
  Rng rng(seed);
  Matrix z(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) z(r, c) = rng.cgaussian();
  }
  const Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases of the R diagonal makes the draw distribution exact
  // and the result deterministic for a given seed.
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace qaem
