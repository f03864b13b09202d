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

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qaem {

namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

}  // namespace

std::string fmt_full(double x) { return fmt("%.17g", x); }
std::string fmt_cell(double x) { return fmt("%.12g", x); }

void atomic_write(const std::filesystem::path& path, const std::string& body) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(out.good(), Errc::io_error,
            "cannot open " + tmp.string() + " for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    require(out.good(), Errc::io_error, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    raise(Errc::io_error, "cannot move results into " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::io_error, "cannot open " + path.string());
  std::ostringstream body;
  body << in.rdbuf();
  require(!in.bad(), Errc::io_error, "read failure on " + path.string());
  return body.str();
}

std::string matrix_to_text(const Matrix& m) {
  std::ostringstream out;
  out << "qaem-matrix " << m.rows() << " " << m.cols() << "\n";
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << " ";
      out << fmt_full(m(r, c).real()) << " " << fmt_full(m(r, c).imag());
    }
    out << "\n";
  }
  return out.str();
}

namespace {

// Shared tokenizer: reads a tagged header then structured payloads.
struct Reader {
  std::istringstream in;

  explicit Reader(const std::string& body) : in(body) {}

  std::string word(const char* what) {
    std::string token;
    require(static_cast<bool>(in >> token), Errc::io_error,
            std::string("missing ") + what);
    return token;
  }

  void expect(const char* tag) {
    require(word("header tag") == tag, Errc::io_error,
            std::string("expected ") + tag + " header");
  }

  Index index(const char* what) {
    long long v = 0;
    require(static_cast<bool>(in >> v) && v >= 0, Errc::io_error,
            std::string("bad ") + what);
    return static_cast<Index>(v);
  }

  double real(const char* what) {
    double v = 0.0;
    require(static_cast<bool>(in >> v), Errc::io_error,
            std::string("bad ") + what);
    return v;
  }

  Matrix matrix() {
    expect("qaem-matrix");
    const Index rows = index("row count");
    const Index cols = index("column count");
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      for (Index c = 0; c < cols; ++c) {
        const double re = real("matrix entry");
        const double im = real("matrix entry");
        m(r, c) = Complex(re, im);
      }
    }
    return m;
  }

  void done() {
    std::string extra;
    require(!(in >> extra), Errc::io_error, "trailing content after payload");
  }
};

}  // namespace

Matrix matrix_from_text(const std::string& body) {
  Reader reader(body);
  Matrix m = reader.matrix();
  reader.done();
  return m;
}

std::string state_to_text(const DensityMatrix& rho) {
  std::ostringstream out;
  out << "qaem-state";
  for (const Index d : rho.space().factor_dims) out << " " << d;
  out << "\n" << matrix_to_text(rho.matrix());
  return out.str();
}

namespace {

HilbertSpace space_from_reader(Reader& reader, const char* tag) {
  reader.expect(tag);
  std::vector<Index> dims;
  // Factor dimensions run to the end of the line; peek word by word until
  // the matrix header shows up.
  while (true) {
    std::streampos at = reader.in.tellg();
    std::string token;
    if (!(reader.in >> token)) raise(Errc::io_error, "missing matrix block");
    if (token == "qaem-matrix") {
      reader.in.seekg(at);
      break;
    }
    try {
      dims.push_back(static_cast<Index>(std::stoll(token)));
    } catch (const std::exception&) {
      raise(Errc::io_error, "bad factor dimension: " + token);
    }
  }
  return HilbertSpace(std::move(dims));
}

}  // namespace

DensityMatrix state_from_text(const std::string& body) {
  Reader reader(body);
  HilbertSpace space = space_from_reader(reader, "qaem-state");
  Matrix m = reader.matrix();
  reader.done();
  return DensityMatrix(std::move(space), std::move(m));
}

std::string pipeline_to_text(const EncoderPipeline& pipeline) {
  std::ostringstream out;
  out << "qaem-pipeline";
  for (const Index d : pipeline.space().factor_dims) out << " " << d;
  out << "\n"
      << matrix_to_text(pipeline.encode_unitary)
      << matrix_to_text(pipeline.latent_projector.matrix());
  return out.str();
}

EncoderPipeline pipeline_from_text(const std::string& body) {
  Reader reader(body);
  HilbertSpace space = space_from_reader(reader, "qaem-pipeline");
  Matrix u = reader.matrix();
  Matrix latent = reader.matrix();
  reader.done();
  return EncoderPipeline(std::move(u),
                         Projector(std::move(space), std::move(latent)));
}

std::string params_to_text(const ParamVector& theta) {
  std::ostringstream out;
  out << "qaem-params " << theta.fingerprint << " " << theta.values.size()
      << "\n";
  for (Index i = 0; i < theta.values.size(); ++i) {
    out << fmt_full(theta.values(i)) << "\n";
  }
  return out.str();
}

ParamVector params_from_text(const std::string& body) {
  Reader reader(body);
  reader.expect("qaem-params");
  ParamVector theta;
  theta.fingerprint = reader.word("fingerprint");
  const Index count = reader.index("value count");
  theta.values.resize(count);
  for (Index i = 0; i < count; ++i) {
    theta.values(i) = reader.real("parameter value");
  }
  reader.done();
  return theta;
}

CsvWriter::CsvWriter(std::vector<std::string> header)
    : header_(std::move(header)) {
  require(!header_.empty(), Errc::bad_config, "empty CSV header");
}

void CsvWriter::add_row(std::vector<std::string> cells) {
  require(cells.size() == header_.size(), Errc::bad_config,
          "CSV row width does not match the header");
  for (const std::string& cell : cells) {
    require(cell.find(',') == std::string::npos &&
                cell.find('\n') == std::string::npos,
            Errc::bad_config, "CSV cells must not contain separators");
  }
  rows_.push_back(std::move(cells));
}

std::string CsvWriter::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i > 0) out << ",";
    out << header_[i];
  }
  out << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ",";
      out << row[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qaem
