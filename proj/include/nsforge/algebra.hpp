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

#ifndef NSFORGE_ALGEBRA_HPP
#define NSFORGE_ALGEBRA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsforge/operator_core.hpp"

namespace nsforge {

inline constexpr std::uint64_t kDefaultSeed = 0;

/// A unital, adjoint-closed matrix algebra given by an HS-orthonormal basis
/// together with the operators that generate it.
struct OperatorAlgebra {
  Eigen::Index dim = 0;
  std::vector<Operator> generators;
  std::vector<Operator> basis;
  bool unital = true;

  std::size_t dimension() const { return basis.size(); }
};

/// One irreducible sector: n copies of a d-dimensional irrep. Column
/// lambda * d + mu of basis_vectors is the ket |J, lambda, mu>.
struct Block {
  int label = 0;
  int n = 0;
  int d = 0;
  Eigen::MatrixXcd basis_vectors;

  Vector ket(int lambda, int mu) const { return basis_vectors.col(lambda * d + mu); }
  /// Orthogonal projector onto the sector.
  Operator projector() const { return basis_vectors * basis_vectors.adjoint(); }
};

/// Sectors plus the unitary whose columns are all block kets, block-major.
struct BlockDecomposition {
  Eigen::Index dim = 0;
  std::vector<Block> blocks;
  Eigen::MatrixXcd isometry;

  /// Throws InputError for an unknown label.
  const Block& block(int label) const;
  /// Column offset of the block in the isometry.
  Eigen::Index offset(int label) const;
};

struct VerificationReport {
  /// [generator][block] distance of the block from the nearest Id_n (x) M form.
  std::vector<std::vector<double>> block_residuals;
  /// [generator] HS norm of everything outside the diagonal blocks.
  std::vector<double> off_block_residuals;
  double unitarity_residual = 0.0;
  /// Largest residual divided by the generator's HS norm.
  double max_relative_residual = 0.0;
  bool passed = false;
};

/// Smallest unital adjoint-closed algebra containing the generators.
OperatorAlgebra close_algebra(std::span<const Operator> generators, const Tolerances& tol);

/// The commutant, returned as an algebra whose generators are its basis.
OperatorAlgebra commutant(const OperatorAlgebra& alg, const Tolerances& tol,
                          std::uint64_t seed = kDefaultSeed);

/// HS-orthonormal basis of the center (alg intersected with its commutant).
std::vector<Operator> center(const OperatorAlgebra& alg, const Tolerances& tol);

/// Constructive Wedderburn decomposition. Throws DecompositionError when the
/// retry budget runs out.
BlockDecomposition wedderburn_decompose(const OperatorAlgebra& alg, std::uint64_t seed,
                                        const Tolerances& tol);

/// Checks that every generator is block diagonal with blocks Id_n (x) M.
VerificationReport verify_decomposition(const OperatorAlgebra& alg, const BlockDecomposition& dec,
                                        const Tolerances& tol);

/// The d x d matrix M_J(op) obtained by averaging the lambda-diagonal
/// sub-blocks of U^dagger op U inside block `label`.
Operator irrep_action(const BlockDecomposition& dec, const Operator& op, int label);

/// ||op - P op|| / ||op|| where P is the HS projector onto span(basis).
/// The basis must be HS-orthonormal.
double span_residual(std::span<const Operator> basis, const Operator& op);

/// Largest span residual over all pairwise products and adjoints of the basis.
double closure_defect(const OperatorAlgebra& alg);

}  // namespace nsforge

#endif  // NSFORGE_ALGEBRA_HPP
