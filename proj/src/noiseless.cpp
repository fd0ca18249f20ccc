// Copyright 2026 The nsforge Authors
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

#include "nsforge/noiseless.hpp"

#include <sstream>

namespace nsforge {

NoiselessSubsystem::NoiselessSubsystem(const Block& block)
    : label_(block.label), n_(block.n), d_(block.d), kets_(block.basis_vectors) {}

Vector NoiselessSubsystem::encode(const Vector& logical, int mu0) const {
  if (logical.size() != n_) {
    throw InputError("encode: logical vector has the wrong dimension");
  }
  if (mu0 < 0 || mu0 >= d_) {
    throw InputError("encode: cofactor index out of range");
  }
  Vector out = Vector::Zero(kets_.rows());
  for (int lambda = 0; lambda < n_; ++lambda) {
    out += logical(lambda) * kets_.col(lambda * d_ + mu0);
  }
  return out;
}

Operator NoiselessSubsystem::decode(const Vector& physical) const {
  if (physical.size() != kets_.rows()) {
    throw InputError("decode: physical vector has the wrong dimension");
  }
  const Vector c = kets_.adjoint() * physical;
  // Column-major (d x n) view: element (mu, lambda) = c(lambda * d + mu).
  const Eigen::Map<const Eigen::MatrixXcd> coeffs(c.data(), d_, n_);
  return coeffs.transpose() * coeffs.conjugate();
}

Operator NoiselessSubsystem::decode(const Operator& physical_state) const {
  if (physical_state.rows() != kets_.rows() || physical_state.cols() != kets_.rows()) {
    throw InputError("decode: state has the wrong dimension");
  }
  const Operator t = kets_.adjoint() * physical_state * kets_;
  Operator out = Operator::Zero(n_, n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      for (int mu = 0; mu < d_; ++mu) {
        out(a, b) += t(a * d_ + mu, b * d_ + mu);
      }
    }
  }
  return out;
}

std::vector<NoiselessSubsystem> find_noiseless_subsystems(const BlockDecomposition& dec) {
  std::vector<NoiselessSubsystem> out;
  for (const auto& b : dec.blocks) {
    if (b.n >= 2) {
      out.emplace_back(b);
    }
  }
  return out;
}

std::vector<NoiselessSubsystem> find_dfs(const BlockDecomposition& dec) {
  std::vector<NoiselessSubsystem> out;
  for (const auto& b : dec.blocks) {
    if (b.n >= 2 && b.d == 1) {
      out.emplace_back(b);
    }
  }
  return out;
}

CodeFamily extract_codes(const BlockDecomposition& dec, int label) {
  const Block& b = dec.block(label);
  CodeFamily family;
  family.label = label;
  for (int mu = 0; mu < b.d; ++mu) {
    Eigen::MatrixXcd code(dec.dim, b.n);
    for (int lambda = 0; lambda < b.n; ++lambda) {
      code.col(lambda) = b.ket(lambda, mu);
    }
    family.codes_mu.push_back(std::move(code));
  }
  for (int lambda = 0; lambda < b.n; ++lambda) {
    family.codes_lambda.push_back(b.basis_vectors.middleCols(static_cast<Eigen::Index>(lambda) * b.d, b.d));
  }
  return family;
}

Operator logical_action(const OperatorAlgebra& alg, const BlockDecomposition& dec,
                        const Operator& x, int label, const Tolerances& tol) {
  if (x.rows() != dec.dim || x.cols() != dec.dim) {
    throw InputError("logical_action: operator dimension mismatch");
  }
  for (const auto& s : alg.generators) {
    const double defect = commutator(x, s).norm();
    if (defect > tol.residual_tol * std::max(1.0, s.norm() * x.norm())) {
      std::ostringstream msg;
      msg << "logical_action: operator is not in the commutant (commutator norm " << defect << ")";
      throw InputError(msg.str());
    }
  }
  const Block& b = dec.block(label);
  const Operator t = b.basis_vectors.adjoint() * x * b.basis_vectors;
  Operator out = Operator::Zero(b.n, b.n);
  for (int a = 0; a < b.n; ++a) {
    for (int c = 0; c < b.n; ++c) {
      for (int mu = 0; mu < b.d; ++mu) {
        out(a, c) += t(a * b.d + mu, c * b.d + mu);
      }
    }
  }
  return out / static_cast<double>(b.d);
}

double distance_from_scalar(const Operator& m) {
  if (m.rows() == 0) {
    return 0.0;
  }
  const Complex mean = m.trace() / static_cast<double>(m.rows());
  return (m - mean * Operator::Identity(m.rows(), m.cols())).norm();
}

double code_condition_residual(const Eigen::MatrixXcd& code, const Operator& error_product) {
  return distance_from_scalar(code.adjoint() * error_product * code);
}

}  // namespace nsforge
