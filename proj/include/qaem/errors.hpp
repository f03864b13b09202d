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

#include <stdexcept>
#include <string>

namespace qaem {

/// Failure categories used across the library. Every throwing path raises
/// an Error carrying one of these codes, so callers can match on the code
/// instead of parsing messages.
enum class Errc {
  non_hermitian,
  no_convergence,
  not_psd,
  non_unitary,
  dimension_mismatch,
  bad_subsystem,
  zero_weight,
  bad_epsilon,
  empty_support,
  rank_deficient,
  bad_split,
  layout_mismatch,
  bad_index,
  non_finite_cost,
  all_discarded,
  not_in_support,
  bad_kind,
  bad_config,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) raise(code, message);
}

}  // namespace qaem
