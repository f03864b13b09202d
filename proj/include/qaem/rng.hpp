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

#include <complex>
#include <cstdint>

namespace qaem {

/// SplitMix64 finalizer; also the backbone of the stream-split function.
uint64_t splitmix64(uint64_t& state);

/// Self-contained xoshiro256++ generator with Box-Muller Gaussians.
/// The entire byte stream is specified here (no standard-library
/// distributions), so identical seeds give identical results on every
/// platform and under any degree of parallelism.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  /// Uniform double in [0, 1), 53 mantissa bits.
  double uniform();

  /// Standard normal via Box-Muller; pairs are generated and the spare is
  /// cached, so the output sequence is a pure function of the seed.
  double gaussian();

  /// (gaussian() + i*gaussian()) / sqrt(2); unit variance per complex entry.
  std::complex<double> cgaussian();

  /// Documented split function: children of a master seed are derived by
  /// chaining SplitMix64 over the master and the stream coordinates, i.e.
  ///   h = mix(master); h = mix(h ^ mix(a)); h = mix(h ^ mix(b));
  /// Streams for distinct (a, b) are independent of evaluation order, which
  /// is what makes per-trial parallelism reproducible.
  static uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0);

 private:
  uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qaem
