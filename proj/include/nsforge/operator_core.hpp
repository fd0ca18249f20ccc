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

#ifndef NSFORGE_OPERATOR_CORE_HPP
#define NSFORGE_OPERATOR_CORE_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nsforge {

using Complex = std::complex<double>;

/// Dense complex square matrix. Every operator in the toolkit (generators,
/// density matrices, Lindblad operators, group elements) is one of these.
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Superoperators act on column-major vectorized operators: vec(A X B) = (B^T (x) A) vec(X).
using Superoperator = Eigen::MatrixXcd;

/// The single source of randomness. Every randomized routine takes one by
/// reference or a seed to construct one.
using Rng = std::mt19937_64;

/// Raised when caller-supplied data violates a precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical construction cannot be completed within the
/// configured tolerances and retry budget.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double rank_tol = 1e-9;      // relative singular-value cutoff
  double residual_tol = 1e-8;  // verification norm bound
  double cluster_tol = 1e-7;   // eigenvalue grouping width
  int max_retries = 8;

  /// Throws InputError unless every field is strictly positive.
  void validate() const;
};

/// tr(A^dagger B); antilinear in the first slot.
Complex hs_inner(const Operator& a, const Operator& b);
double hs_norm(const Operator& a);

/// ||A - A^dagger||_HS <= tol * ||A||_HS.
bool is_hermitian(const Operator& a, double tol);
bool is_normalized(const Vector& v, double tol);

Operator commutator(const Operator& a, const Operator& b);
Operator dagger(const Operator& a);

/// Column-major vectorization and its inverse.
Vector vectorize(const Operator& a);
Operator devectorize(const Vector& v, Eigen::Index dim);

/// HS-orthonormal basis of span(ops). The output length is the numerical rank
/// (singular values above rank_tol times the largest one).
std::vector<Operator> orthonormalize(std::span<const Operator> ops, const Tolerances& tol);

/// HS-orthonormal basis of {X : [X, S] = 0 for every S in generators}.
std::vector<Operator> commutator_nullspace(std::span<const Operator> generators,
                                           const Tolerances& tol);

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  Eigen::MatrixXcd vectors;  // orthonormal columns, vectors.col(k) <-> values(k)
};

Eigensystem hermitian_eigensystem(const Operator& h, const Tolerances& tol);

/// A run of numerically equal eigenvalues in an ascending spectrum.
struct EigenCluster {
  Eigen::Index begin = 0;
  Eigen::Index size = 0;
  double mean = 0.0;
};

/// Groups consecutive ascending eigenvalues whose gap is at most
/// cluster_tol * max(1, spectral radius).
std::vector<EigenCluster> cluster_eigenvalues(const Eigen::VectorXd& ascending, double cluster_tol);

/// Kronecker product, A acting on the first (most significant) factor.
Operator tensor(const Operator& a, const Operator& b);

enum class TraceOut { First, Second };

/// Partial trace of an operator on C^{d_a} (x) C^{d_b}.
Operator partial_trace(const Operator& m, Eigen::Index d_a, Eigen::Index d_b, TraceOut side);

/// Y = sum_a g_a B_a with independent complex standard-normal g_a.
Operator random_element_in(std::span<const Operator> basis, Rng& rng);
/// Hermitian part of random_element_in.
Operator random_hermitian_in(std::span<const Operator> basis, Rng& rng);

/// Pauli matrices.
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

namespace detail {

/// Orthonormal basis of the operators commuting with every generator, searched
/// inside the ansatz spanned by the matrix units e_i e_j^dagger of the unitary
/// `frame`, where i and j run over the same cluster. The ansatz must contain
/// the true solution space; a single cluster covering the whole frame gives
/// the unrestricted problem.
std::vector<Operator> commutant_in_frame(std::span<const Operator> generators,
                                         const Eigen::MatrixXcd& frame,
                                         std::span<const EigenCluster> clusters,
                                         const Tolerances& tol);

/// Incrementally grown HS-orthonormal basis with two-pass Gram-Schmidt.
class SpanBuilder {
 public:
  explicit SpanBuilder(Eigen::Index dim);

  /// Adds the component of `op` orthogonal to the current span if its norm
  /// exceeds rank_tol * ||op||. Returns true when the span grew.
  bool add(const Operator& op, double rank_tol);

  /// Norm of the part of `op` orthogonal to the span, relative to ||op||.
  double relative_residual(const Operator& op) const;

  Eigen::Index size() const { return count_; }
  Eigen::Index dim() const { return dim_; }
  Operator element(Eigen::Index k) const { return devectorize(columns_.col(k), dim_); }
  std::vector<Operator> basis() const;

 private:
  Eigen::Index dim_;
  Eigen::Index count_ = 0;
  Eigen::MatrixXcd columns_;
};

}  // namespace detail

}  // namespace nsforge

#endif  // NSFORGE_OPERATOR_CORE_HPP
