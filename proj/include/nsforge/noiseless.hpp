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

#ifndef NSFORGE_NOISELESS_HPP
#define NSFORGE_NOISELESS_HPP

#include <vector>

#include "nsforge/algebra.hpp"

namespace nsforge {

/// The C^n factor of one sector. The algebra acts on the cofactor index mu
/// only, so anything written into lambda is invisible to the noise.
class NoiselessSubsystem {
 public:
  explicit NoiselessSubsystem(const Block& block);

  int label() const { return label_; }
  int noiseless_dim() const { return n_; }
  int cofactor_dim() const { return d_; }
  /// dim x (n d) kets |J, lambda, mu>, column lambda * d + mu.
  const Eigen::MatrixXcd& kets() const { return kets_; }

  /// sum_lambda v_lambda |J, lambda, mu0>.
  Vector encode(const Vector& logical, int mu0 = 0) const;
  /// Logical density matrix: the block coefficients c(lambda, mu) traced over mu.
  Operator decode(const Vector& physical) const;
  Operator decode(const Operator& physical_state) const;

 private:
  int label_;
  int n_;
  int d_;
  Eigen::MatrixXcd kets_;
};

/// Codes read off one sector. Each subspace is a matrix with orthonormal columns.
struct CodeFamily {
  int label = 0;
  /// H^J_mu = span{|J, lambda, mu> : lambda}, one per mu; correct errors whose
  /// pairwise products lie in the algebra.
  std::vector<Eigen::MatrixXcd> codes_mu;
  /// H^J_lambda = span{|J, lambda, mu> : mu}, one per lambda; the commutant analogue.
  std::vector<Eigen::MatrixXcd> codes_lambda;
};

/// One subsystem per block with n >= 2.
std::vector<NoiselessSubsystem> find_noiseless_subsystems(const BlockDecomposition& dec);

/// The subsystems with d = 1, i.e. decoherence-free subspaces.
std::vector<NoiselessSubsystem> find_dfs(const BlockDecomposition& dec);

CodeFamily extract_codes(const BlockDecomposition& dec, int label);

/// The n x n matrix by which a commutant element acts on the noiseless factor
/// of block `label`. Throws InputError (carrying the commutator norm) when X
/// does not commute with the algebra generators.
Operator logical_action(const OperatorAlgebra& alg, const BlockDecomposition& dec,
                        const Operator& x, int label, const Tolerances& tol);

/// Distance of a square matrix from the nearest multiple of the identity.
double distance_from_scalar(const Operator& m);

/// Distance of C^dagger E C from a scalar matrix, where the code C has
/// orthonormal columns and E = e_i^dagger e_j.
double code_condition_residual(const Eigen::MatrixXcd& code, const Operator& error_product);

}  // namespace nsforge

#endif  // NSFORGE_NOISELESS_HPP
