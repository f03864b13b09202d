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

// Writes the small serialized fixtures the CLI shell tests consume:
//   w4-ideal.txt     balanced 4-qubit W state
//   w4-noisy.txt     the same state after global depolarizing, eps = 0.05
//   w4-pipeline.txt  the analytic W-family pipeline on 4 qubits

#include <cstdio>
#include <filesystem>

#include "qaem/harness.hpp"
#include "qaem/io.hpp"
#include "qaem/noise.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: qaem_fixtures <output-dir>\n");
    return 2;
  }
  namespace fs = std::filesystem;
  using namespace qaem;
  try {
    const fs::path dir(argv[1]);
    fs::create_directories(dir);
    RealVector alpha = RealVector::Ones(4);
    const DensityMatrix ideal = DensityMatrix::from_pure(w_state(alpha));
    const DensityMatrix noisy =
        apply_noise(ideal, NoiseModel::global_depolarizing(), 0.05);
    atomic_write(dir / "w4-ideal.txt", state_to_text(ideal));
    atomic_write(dir / "w4-noisy.txt", state_to_text(noisy));
    atomic_write(dir / "w4-pipeline.txt",
                 pipeline_to_text(known_w_pipeline(4)));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fixture generation failed: %s\n", e.what());
    return 1;
  }
  return 0;
}
