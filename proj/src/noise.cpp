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

#include "qaem/noise.hpp"

namespace qaem {

NoiseModel NoiseModel::global_depolarizing() {
  return NoiseModel(Kind::global_depolarizing);
}

NoiseModel NoiseModel::local_depolarizing() {
  return NoiseModel(Kind::local_depolarizing);
}

NoiseModel NoiseModel::leakage() { return NoiseModel(Kind::leakage); }

NoiseModel NoiseModel::leakage(PureState target) {
  NoiseModel model(Kind::leakage);
  model.leak_target_ = std::move(target);
  return model;
}

NoiseModel NoiseModel::custom_kraus(std::vector<Matrix> operators) {
  require(!operators.empty(), Errc::bad_kind, "no Kraus operators given");
  const Index n = operators.front().rows();
  Matrix closure = Matrix::Zero(n, n);
  for (const Matrix& op : operators) {
    require(op.rows() == n && op.cols() == n, Errc::dimension_mismatch,
            "Kraus operators must be square and equally sized");
    require(all_finite(op), Errc::bad_kind, "non-finite Kraus entries");
    closure += op.adjoint() * op;
  }
  require((closure - Matrix::Identity(n, n)).norm() <= tol().kraus_complete,
          Errc::bad_kind, "Kraus set is not trace preserving");
  NoiseModel model(Kind::custom_kraus);
  model.kraus_ = std::move(operators);
  return model;
}

std::string NoiseModel::name() const {
  switch (kind_) {
    case Kind::global_depolarizing: return "global_depolarizing";
    case Kind::local_depolarizing: return "local_depolarizing";
    case Kind::leakage: return "leakage";
    case Kind::custom_kraus: return "custom_kraus";
  }
  return "unknown";
}

DensityMatrix error_state(const NoiseModel& model, const DensityMatrix& rho) {
  switch (model.kind()) {
    case NoiseModel::Kind::global_depolarizing:
      return DensityMatrix::maximally_mixed(rho.space());
    case NoiseModel::Kind::local_depolarizing: {
      const int n = rho.space().factors();
      require(n >= 1, Errc::bad_subsystem,
              "local depolarizing needs at least one factor");
      for (const Index d : rho.space().factor_dims) {
        require(d == 2, Errc::bad_subsystem,
                "local depolarizing is defined on qubit registers");
      }
      Matrix sum = Matrix::Zero(rho.space().dim(), rho.space().dim());
      for (int site = 0; site < n; ++site) {
        for (const Pauli p : {Pauli::x, Pauli::y, Pauli::z}) {
          const Matrix sigma = pauli_on(n, site, p);
          sum += sigma * rho.matrix() * sigma;
        }
      }
      // Normalized by 1/(3n) so the error term is a unit-trace state.
      return DensityMatrix(rho.space(), sum / (3.0 * n));
    }
    case NoiseModel::Kind::leakage: {
      const PureState target = model.leak_target()
                                   ? *model.leak_target()
                                   : PureState::basis(rho.space(), 0);
      require(target.space() == rho.space(), Errc::dimension_mismatch,
              "leakage target lives on a different space");
      return DensityMatrix::from_pure(target);
    }
    case NoiseModel::Kind::custom_kraus: {
      const std::vector<Matrix>& ops = model.kraus_operators();
      require(ops.front().rows() == rho.space().dim(),
              Errc::dimension_mismatch,
              "Kraus operators do not match the state dimension");
      Matrix out = Matrix::Zero(rho.space().dim(), rho.space().dim());
      for (const Matrix& op : ops) out += op * rho.matrix() * op.adjoint();
      return DensityMatrix(rho.space(), std::move(out));
    }
  }
  raise(Errc::bad_kind, "unhandled noise kind");
}

DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseModel& model,
                          double eps) {
  require(eps >= 0.0 && eps <= 1.0, Errc::bad_epsilon,
          "mixing weight outside [0, 1]");
  if (eps == 0.0) return rho;
  const DensityMatrix err = error_state(model, rho);
  return DensityMatrix(rho.space(),
                       (1.0 - eps) * rho.matrix() + eps * err.matrix());
}

}  // namespace qaem
