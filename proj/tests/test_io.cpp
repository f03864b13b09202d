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

#include "qaem/io.hpp"

#include <cstdlib>
#include <filesystem>

#include "qaem/harness.hpp"
#include "test_support.hpp"

namespace qaem {
namespace {

namespace fs = std::filesystem;

using test::fnorm;

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "qaem-io-test";
  fs::create_directories(dir);
  return dir;
}

TEST_CASE("fmt_full round-trips doubles exactly") {
  for (const double x : {0.1, 1.0 / 3.0, -2.5e-308, 1.7976931348623157e308,
                         0.0, -0.0, 3.141592653589793, 5e-324}) {
    const std::string s = fmt_full(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("fmt_cell produces stable 12-digit cells") {
  CHECK(fmt_cell(0.0625) == "0.0625");
  CHECK(fmt_cell(1.0) == "1");
  CHECK(fmt_cell(1.0 / 3.0) == "0.333333333333");
  // Same value, same text, regardless of how it was computed.
  CHECK(fmt_cell(0.1 + 0.2) == fmt_cell(0.30000000000000004));
}

TEST_CASE("atomic_write creates files with the exact body") {
  const fs::path p = temp_dir() / "atomic.txt";
  atomic_write(p, "hello\nworld\n");
  CHECK(read_file(p) == "hello\nworld\n");
  atomic_write(p, "replaced");  // overwrite works too
  CHECK(read_file(p) == "replaced");
  fs::remove(p);
  CHECK_RAISES(Errc::io_error, read_file(p));
}

TEST_CASE("matrix text round-trip is bit-identical") {
  const Matrix m = test::random_matrix(3, 5, 17);
  const std::string body = matrix_to_text(m);
  const Matrix back = matrix_from_text(body);
  CHECK(back.rows() == 3);
  CHECK(back.cols() == 5);
  CHECK(fnorm(m, back) == 0.0);
  // Serializing again yields the same bytes.
  CHECK(matrix_to_text(back) == body);
}

TEST_CASE("matrix text rejects malformed input") {
  CHECK_RAISES(Errc::io_error, matrix_from_text(""));
  CHECK_RAISES(Errc::io_error, matrix_from_text("not-a-header 2 2\n0 0 0 0"));
  CHECK_RAISES(Errc::io_error, matrix_from_text("qaem-matrix 2\n"));
  // Too few numbers in a row.
  CHECK_RAISES(Errc::io_error,
               matrix_from_text("qaem-matrix 1 2\n1 0 2\n"));
}

TEST_CASE("state text preserves factor structure") {
  const HilbertSpace space({2, 3});
  const DensityMatrix rho = test::random_density(space, 23);
  const std::string body = state_to_text(rho);
  const DensityMatrix back = state_from_text(body);
  CHECK(back.space() == space);
  CHECK(fnorm(back.matrix(), rho.matrix()) == 0.0);
  CHECK(state_to_text(back) == body);
  CHECK_RAISES(Errc::io_error, state_from_text("qaem-matrix 2 2\n"));
}

TEST_CASE("pipeline text round-trips exactly") {
  const EncoderPipeline pipeline = known_w_pipeline(3);
  const std::string body = pipeline_to_text(pipeline);
  const EncoderPipeline back = pipeline_from_text(body);
  CHECK(back.space() == pipeline.space());
  CHECK(fnorm(back.encode_unitary, pipeline.encode_unitary) == 0.0);
  CHECK(fnorm(back.latent_projector.matrix(),
              pipeline.latent_projector.matrix()) == 0.0);
  CHECK(pipeline_to_text(back) == body);
}

TEST_CASE("params text round-trips fingerprint and values") {
  ParamVector theta;
  theta.fingerprint = "layered-v1:n=2:nly=1:groups=1:block=13";
  theta.values = RealVector::LinSpaced(13, -1.3, 2.7);
  theta.values[4] = 0.1 + 0.2;  // not exactly representable in few digits
  const std::string body = params_to_text(theta);
  const ParamVector back = params_from_text(body);
  CHECK(back.fingerprint == theta.fingerprint);
  CHECK(back.values.size() == 13);
  CHECK((back.values - theta.values).cwiseAbs().maxCoeff() == 0.0);
  CHECK(params_to_text(back) == body);
  CHECK_RAISES(Errc::io_error, params_from_text(""));
}

TEST_CASE("CsvWriter emits header plus rows with newline endings") {
  CsvWriter csv({"a", "b"});
  CHECK(csv.rows() == 0);
  csv.add_row({"1", "2"});
  csv.add_row({fmt_cell(0.5), "x"});
  CHECK(csv.rows() == 2);
  CHECK(csv.to_string() == "a,b\n1,2\n0.5,x\n");
  CHECK_RAISES(Errc::bad_config, csv.add_row({"only-one-cell"}));
  CHECK_RAISES(Errc::bad_config, csv.add_row({"with,comma", "y"}));
}

}  // namespace
}  // namespace qaem
