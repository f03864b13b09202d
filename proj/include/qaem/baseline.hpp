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

#include "qaem/encoder.hpp"
#include "qaem/qstate.hpp"

namespace qaem {

/// Feed-forward network register layout: input (x) hidden (x) output, in
/// that tensor order. Hidden may be absent (dim-1 space).
struct NnLayout {
  HilbertSpace input;
  HilbertSpace hidden;
  HilbertSpace output;

  HilbertSpace total() const;
  Index dim() const { return total().dim(); }

  /// Factor index lists of each register inside the total space.
  std::vector<int> input_factors() const;
  std::vector<int> hidden_factors() const;
  std::vector<int> output_factors() const;
};

/// Network action on an input state: grow with fresh |0> ancillas, apply
/// the network unitary, trace down to the output register.
DensityMatrix nn_output(const NnLayout& layout, const Matrix& network,
                        const DensityMatrix& input);

/// Same, but first post-select a projector on the full register before the
/// trace-down. Returns the renormalized output and the keep probability.
struct NnPostselected {
  DensityMatrix output;
  double keep_probability;
};

NnPostselected nn_postselected_output(const NnLayout& layout,
                                      const Matrix& network,
                                      const Projector& keep,
                                      const DensityMatrix& input);

/// Embed a detection pipeline into network form over input (x) output with
/// no hidden register:
///   network      = U_e  on input, identity on output
///   keep         = M_L  on input, identity on output
///   decoder      = (identity (x) U_e^dagger) . SWAP(input, output)
/// Post-selecting `keep` after `network`, then applying `decoder` and
/// tracing out the input register reproduces mitigate() exactly.
struct NnEmbedding {
  NnLayout layout;
  Matrix network;
  Projector keep;
  Matrix decoder;
};

NnEmbedding detection_to_nn(const EncoderPipeline& pipeline);

/// Output of the embedded pipeline: post-select, decode, trace out input.
NnPostselected nn_embedded_mitigate(const NnEmbedding& embedding,
                                    const DensityMatrix& input);

/// SWAP of two same-dimension registers in a bipartite space.
Matrix swap_registers(Index dim_a, Index dim_b);

/// Haar-distributed unitary: QR of a seeded complex Gaussian matrix with
/// the R diagonal phase fixed, so the draw is deterministic per seed.
Matrix haar_random_unitary(Index dim, uint64_t seed);

}  // namespace qaem
