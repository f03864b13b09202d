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

#include <filesystem>
#include <string>
#include <vector>

#include "qaem/ansatz.hpp"
#include "qaem/encoder.hpp"
#include "qaem/qstate.hpp"

namespace qaem {

/// Round-trip-exact float formatting: %.17g for stored artifacts, %.12g for
/// report CSV cells.
std::string fmt_full(double x);
std::string fmt_cell(double x);

/// Write-then-rename so partially written files never appear at `path`.
void atomic_write(const std::filesystem::path& path, const std::string& body);

std::string read_file(const std::filesystem::path& path);

/// Text matrix format: a "qaem-matrix <rows> <cols>" header line followed
/// by one line per row holding row-major "re im" pairs separated by single
/// spaces (two numbers per entry, %.17g).
std::string matrix_to_text(const Matrix& m);
Matrix matrix_from_text(const std::string& body);

/// Density matrix with its factor dimensions:
///   qaem-state <factor dims...>
///   <matrix body>
std::string state_to_text(const DensityMatrix& rho);
DensityMatrix state_from_text(const std::string& body);

/// Encoder pipeline: factor dims, then encode unitary, then latent
/// projector, each as a matrix block.
std::string pipeline_to_text(const EncoderPipeline& pipeline);
EncoderPipeline pipeline_from_text(const std::string& body);

/// Parameters: fingerprint line then one %.17g value per line.
std::string params_to_text(const ParamVector& theta);
ParamVector params_from_text(const std::string& body);

/// Minimal CSV writer: fixed header, rows of preformatted cells, "\n" line
/// endings, no quoting (cells never contain commas).
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  std::string to_string() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace qaem
