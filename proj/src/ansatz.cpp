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

#include "qaem/ansatz.hpp"

#include <cmath>
#include <sstream>

#include "qaem/rng.hpp"

namespace qaem {

namespace {

Matrix rot_z(double angle) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(Complex(0.0, -0.5 * angle));
  m(1, 1) = std::exp(Complex(0.0, 0.5 * angle));
  return m;
}

Matrix rot_y(double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  Matrix m(2, 2);
  m << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
  return m;
}

// ZYZ Euler rotation; covers all of SU(2) up to a global phase.
Matrix euler_zyz(double z1, double y, double z2) {
  return rot_z(z1) * rot_y(y) * rot_z(z2);
}

}  // namespace

LayeredAnsatz::LayeredAnsatz(int n_qubits, int layers_per_group, int groups)
    : n_(n_qubits), layers_per_group_(layers_per_group), groups_(groups) {
  require(n_ >= 1, Errc::bad_config, "need at least one qubit");
  require(layers_per_group_ >= 1, Errc::bad_config,
          "need at least one layer per group");
  require(groups_ >= 1, Errc::bad_config, "need at least one group");
  // Hamiltonian basis terms in parameter order: single-site X, single-site
  // Z, then (XX, YY, ZZ) per pair (i, j), i < j, lexicographic.
  for (int i = 0; i < n_; ++i) pauli_terms_.push_back(pauli_on(n_, i, Pauli::x));
  for (int i = 0; i < n_; ++i) pauli_terms_.push_back(pauli_on(n_, i, Pauli::z));
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (const Pauli p : {Pauli::x, Pauli::y, Pauli::z}) {
        pauli_terms_.push_back(pauli_on(n_, i, p) * pauli_on(n_, j, p));
      }
    }
  }
}

Index LayeredAnsatz::params_per_layer() const {
  const Index n = n_;
  return 5 * n + 3 * n * (n - 1) / 2;
}

Index LayeredAnsatz::params_per_group() const {
  return params_per_layer() * layers_per_group_;
}

Index LayeredAnsatz::param_count() const {
  return params_per_group() * groups_;
}

std::string LayeredAnsatz::describe_index(Index k) const {
  require(k >= 0 && k < param_count(), Errc::bad_index,
          "parameter index outside the layout");
  std::ostringstream out;
  const Index block = params_per_layer();
  const Index group = k / params_per_group();
  const Index in_group = k % params_per_group();
  const Index layer = in_group / block;
  Index r = in_group % block;
  out << "group " << group << " layer " << layer << " ";
  const Index n = n_;
  if (r < 3 * n) {
    static const char* euler[] = {"z1", "y", "z2"};
    out << "qubit " << r / 3 << " euler " << euler[r % 3];
  } else if (r < 4 * n) {
    out << "field x qubit " << r - 3 * n;
  } else if (r < 5 * n) {
    out << "field z qubit " << r - 4 * n;
  } else {
    r -= 5 * n;
    const Index pair = r / 3;
    static const char* comp[] = {"x", "y", "z"};
    Index count = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++count) {
        if (count == pair) {
          out << "coupling " << comp[r % 3] << " qubits (" << i << "," << j
              << ")";
          return out.str();
        }
      }
    }
  }
  return out.str();
}

std::string LayeredAnsatz::fingerprint() const {
  std::ostringstream out;
  out << "layered-v1:n=" << n_ << ":nly=" << layers_per_group_
      << ":groups=" << groups_ << ":block=" << params_per_layer();
  return out.str();
}

ParamVector LayeredAnsatz::zero_params() const {
  return {fingerprint(), RealVector::Zero(param_count())};
}

ParamVector LayeredAnsatz::random_params(double half_range,
                                         uint64_t seed) const {
  Rng rng(seed);
  RealVector values(param_count());
  for (Index i = 0; i < values.size(); ++i) {
    values(i) = (2.0 * rng.uniform() - 1.0) * half_range;
  }
  return {fingerprint(), std::move(values)};
}

Matrix LayeredAnsatz::layer_hamiltonian(
    const Eigen::Ref<const RealVector>& block) const {
  require(block.size() == params_per_layer(), Errc::layout_mismatch,
          "layer block has the wrong size");
  const Index dim = Index{1} << n_;
  Matrix h = Matrix::Zero(dim, dim);
  const Index offset = 3 * static_cast<Index>(n_);
  for (std::size_t t = 0; t < pauli_terms_.size(); ++t) {
    const double coeff = block(offset + static_cast<Index>(t));
    if (coeff != 0.0) h += coeff * pauli_terms_[t];
  }
  return h;
}

Matrix LayeredAnsatz::group_unitary(const RealVector& group_theta,
                                    int group) const {
  require(group >= 0 && group < groups_, Errc::bad_index,
          "group index outside the ansatz");
  require(group_theta.size() == params_per_group(), Errc::layout_mismatch,
          "group parameter slice has the wrong size");
  const Index dim = Index{1} << n_;
  const Index block = params_per_layer();
  Matrix u = Matrix::Identity(dim, dim);
  for (int layer = 0; layer < layers_per_group_; ++layer) {
    const auto slice = group_theta.segment(layer * block, block);
    std::vector<Matrix> rotations;
    rotations.reserve(n_);
    for (int q = 0; q < n_; ++q) {
      rotations.push_back(
          euler_zyz(slice(3 * q), slice(3 * q + 1), slice(3 * q + 2)));
    }
    const Matrix layer_u =
        unitary_from_hermitian(layer_hamiltonian(slice), 1.0) *
        kron_all(rotations);
    u = layer_u * u;  // earlier layers act first
  }
  return u;
}

Matrix LayeredAnsatz::unitary(const ParamVector& theta,
                              int groups_active) const {
  require(theta.fingerprint == fingerprint(), Errc::layout_mismatch,
          "parameter fingerprint does not match this ansatz");
  require(theta.values.size() == param_count(), Errc::layout_mismatch,
          "parameter count does not match this ansatz");
  require(groups_active >= 0 && groups_active <= groups_, Errc::bad_index,
          "active group count outside the ansatz");
  const Index dim = Index{1} << n_;
  Matrix u = Matrix::Identity(dim, dim);
  for (int g = 0; g < groups_active; ++g) {
    const RealVector slice =
        theta.values.segment(g * params_per_group(), params_per_group());
    u = group_unitary(slice, g) * u;  // earlier groups act first
  }
  return u;
}

Matrix LayeredAnsatz::unitary(const ParamVector& theta) const {
  return unitary(theta, groups_);
}

QuditGeneratorAnsatz QuditGeneratorAnsatz::full(Index d, int lo, int hi,
                                                Mode mode) {
  require(d >= 2, Errc::bad_config, "qudit dimension below 2");
  require(lo >= 0 && lo <= hi && hi < d, Errc::bad_index,
          "level range outside the qudit");
  QuditGeneratorAnsatz out;
  out.d = d;
  out.mode = mode;
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) out.pairs.emplace_back(i, j);
  }
  return out;
}

std::string QuditGeneratorAnsatz::fingerprint() const {
  std::ostringstream out;
  out << "qudit-v1:d=" << d << ":pairs=" << pairs.size() << ":mode="
      << (mode == Mode::literal ? "literal" : "hermitian_pair");
  return out.str();
}

ParamVector QuditGeneratorAnsatz::zero_params() const {
  return {fingerprint(), RealVector::Zero(param_count())};
}

Matrix qudit_generator_unitary(const QuditGeneratorAnsatz& ansatz,
                               const RealVector& angles) {
  require(angles.size() == ansatz.param_count(), Errc::layout_mismatch,
          "angle count does not match the pair list");
  const Index d = ansatz.d;
  Matrix u = Matrix::Identity(d, d);
  for (std::size_t k = 0; k < ansatz.pairs.size(); ++k) {
    const auto [i, j] = ansatz.pairs[k];
    require(i >= 0 && i < d && j >= 0 && j < d, Errc::bad_index,
            "generator level outside the qudit");
    const double a = angles(static_cast<Index>(k));
    Matrix factor = Matrix::Identity(d, d);
    if (i == j) {
      factor(i, i) = std::exp(Complex(0.0, a));
    } else if (ansatz.mode == QuditGeneratorAnsatz::Mode::literal) {
      // |i><j| is nilpotent, so the series truncates after one term and
      // the factor is not unitary.
      factor(i, j) += Complex(0.0, a);
    } else {
      factor(i, i) = Complex(std::cos(a), 0.0);
      factor(j, j) = Complex(std::cos(a), 0.0);
      factor(i, j) = Complex(0.0, std::sin(a));
      factor(j, i) = Complex(0.0, std::sin(a));
    }
    u = u * factor;  // factors compose in pair order, first pair leftmost
  }
  return u;
}

ParamVector perturb_params(const ParamVector& theta, double eps_circuit,
                           uint64_t seed) {
  require(eps_circuit >= 0.0, Errc::bad_epsilon,
          "perturbation scale must be nonnegative");
  Rng rng(seed);
  ParamVector out = theta;
  for (Index i = 0; i < out.values.size(); ++i) {
    out.values(i) += eps_circuit * rng.gaussian();
  }
  return out;
}

}  // namespace qaem
