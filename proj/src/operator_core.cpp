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

#include "nsforge/operator_core.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace nsforge {

namespace {

Eigen::Index common_dim(std::span<const Operator> ops, const char* what) {
  if (ops.empty()) {
    return 0;
  }
  const Eigen::Index dim = ops.front().rows();
  for (const auto& op : ops) {
    if (op.rows() != dim || op.cols() != dim) {
      throw InputError(std::string(what) + ": operators must be square with a common dimension");
    }
  }
  return dim;
}

}  // namespace

void Tolerances::validate() const {
  if (!(rank_tol > 0.0) || !(residual_tol > 0.0) || !(cluster_tol > 0.0) || max_retries <= 0) {
    throw InputError("tolerances must be strictly positive");
  }
}

Complex hs_inner(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("hs_inner: dimension mismatch");
  }
  return a.conjugate().cwiseProduct(b).sum();
}

double hs_norm(const Operator& a) { return a.norm(); }

bool is_hermitian(const Operator& a, double tol) {
  if (a.rows() != a.cols()) {
    return false;
  }
  return (a - a.adjoint()).norm() <= tol * a.norm();
}

bool is_normalized(const Vector& v, double tol) { return std::abs(v.norm() - 1.0) <= tol; }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator dagger(const Operator& a) { return a.adjoint(); }

Vector vectorize(const Operator& a) { return Eigen::Map<const Vector>(a.data(), a.size()); }

Operator devectorize(const Vector& v, Eigen::Index dim) {
  if (v.size() != dim * dim) {
    throw InputError("devectorize: vector length is not dim^2");
  }
  return Eigen::Map<const Operator>(v.data(), dim, dim);
}

std::vector<Operator> orthonormalize(std::span<const Operator> ops, const Tolerances& tol) {
  const Eigen::Index dim = common_dim(ops, "orthonormalize");
  if (ops.empty()) {
    return {};
  }
  Eigen::MatrixXcd stacked(dim * dim, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    stacked.col(static_cast<Eigen::Index>(k)) = vectorize(ops[k]);
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  std::vector<Operator> out;
  if (sv.size() == 0 || sv(0) == 0.0) {
    return out;
  }
  const double cutoff = tol.rank_tol * sv(0);
  for (Eigen::Index k = 0; k < sv.size() && sv(k) > cutoff; ++k) {
    out.push_back(devectorize(svd.matrixU().col(k), dim));
  }
  return out;
}

std::vector<Operator> commutator_nullspace(std::span<const Operator> generators,
                                           const Tolerances& tol) {
  if (generators.empty()) {
    throw InputError("commutator_nullspace: empty generator list");
  }
  const Eigen::Index dim = common_dim(generators, "commutator_nullspace");
  const std::vector<EigenCluster> whole{{0, dim, 0.0}};
  return detail::commutant_in_frame(generators, Eigen::MatrixXcd::Identity(dim, dim), whole, tol);
}

Eigensystem hermitian_eigensystem(const Operator& h, const Tolerances& tol) {
  if (h.rows() != h.cols()) {
    throw InputError("hermitian_eigensystem: matrix is not square");
  }
  if (!is_hermitian(h, tol.residual_tol)) {
    throw InputError("hermitian_eigensystem: matrix is not Hermitian");
  }
  const Operator sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw DecompositionError("hermitian_eigensystem: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<EigenCluster> cluster_eigenvalues(const Eigen::VectorXd& ascending, double cluster_tol) {
  std::vector<EigenCluster> clusters;
  if (ascending.size() == 0) {
    return clusters;
  }
  const double scale = std::max(1.0, ascending.cwiseAbs().maxCoeff());
  const double width = cluster_tol * scale;
  EigenCluster current{0, 1, ascending(0)};
  double sum = ascending(0);
  for (Eigen::Index k = 1; k < ascending.size(); ++k) {
    if (ascending(k) - ascending(k - 1) <= width) {
      ++current.size;
      sum += ascending(k);
    } else {
      current.mean = sum / static_cast<double>(current.size);
      clusters.push_back(current);
      current = {k, 1, ascending(k)};
      sum = ascending(k);
    }
  }
  current.mean = sum / static_cast<double>(current.size);
  clusters.push_back(current);
  return clusters;
}

Operator tensor(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator partial_trace(const Operator& m, Eigen::Index d_a, Eigen::Index d_b, TraceOut side) {
  if (d_a <= 0 || d_b <= 0 || m.rows() != d_a * d_b || m.cols() != d_a * d_b) {
    throw InputError("partial_trace: operator dimension does not equal d_a * d_b");
  }
  if (side == TraceOut::Second) {
    Operator out = Operator::Zero(d_a, d_a);
    for (Eigen::Index i = 0; i < d_a; ++i) {
      for (Eigen::Index j = 0; j < d_a; ++j) {
        out(i, j) = m.block(i * d_b, j * d_b, d_b, d_b).trace();
      }
    }
    return out;
  }
  Operator out = Operator::Zero(d_b, d_b);
  for (Eigen::Index a = 0; a < d_a; ++a) {
    out += m.block(a * d_b, a * d_b, d_b, d_b);
  }
  return out;
}

Operator random_element_in(std::span<const Operator> basis, Rng& rng) {
  if (basis.empty()) {
    throw InputError("random_element_in: empty basis");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  Operator y = Operator::Zero(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) {
    const double re = normal(rng);
    const double im = normal(rng);
    y += Complex(re, im) * b;
  }
  return y;
}

Operator random_hermitian_in(std::span<const Operator> basis, Rng& rng) {
  const Operator y = random_element_in(basis, rng);
  return 0.5 * (y + y.adjoint());
}

Operator pauli_x() {
  Operator m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Operator pauli_y() {
  Operator m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Operator pauli_z() {
  Operator m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

namespace detail {

// The Gram matrix of the stacked maps X -> [S, X] restricted to the ansatz is
// assembled in closed form. For matrix units E_ij, E_kl in the frame and
// T = frame^dagger S frame,
//   <[T,E_ij],[T,E_kl]> = d_jl (T^dag T)_ik - conj(T_ki) T_lj - conj(T_jl) T_ik + d_ik (T T^dag)_lj.
std::vector<Operator> commutant_in_frame(std::span<const Operator> generators,
                                         const Eigen::MatrixXcd& frame,
                                         std::span<const EigenCluster> clusters,
                                         const Tolerances& tol) {
  const Eigen::Index dim = frame.rows();
  std::vector<std::pair<Eigen::Index, Eigen::Index>> units;
  for (const auto& c : clusters) {
    for (Eigen::Index i = c.begin; i < c.begin + c.size; ++i) {
      for (Eigen::Index j = c.begin; j < c.begin + c.size; ++j) {
        units.emplace_back(i, j);
      }
    }
  }
  const auto p = static_cast<Eigen::Index>(units.size());
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(p, p);
  double scale = 0.0;
  for (const auto& s : generators) {
    if (s.rows() != dim || s.cols() != dim) {
      throw InputError("commutator nullspace: generator dimension mismatch");
    }
    scale += s.squaredNorm();
    const Eigen::MatrixXcd t = frame.adjoint() * s * frame;
    const Eigen::MatrixXcd tdt = t.adjoint() * t;
    const Eigen::MatrixXcd ttd = t * t.adjoint();
    for (Eigen::Index b = 0; b < p; ++b) {
      const auto [k, l] = units[static_cast<std::size_t>(b)];
      for (Eigen::Index a = 0; a < p; ++a) {
        const auto [i, j] = units[static_cast<std::size_t>(a)];
        Complex g = -std::conj(t(k, i)) * t(l, j) - std::conj(t(j, l)) * t(i, k);
        if (j == l) {
          g += tdt(i, k);
        }
        if (i == k) {
          g += ttd(l, j);
        }
        gram(a, b) += g;
      }
    }
  }
  std::vector<Operator> out;
  if (p == 0) {
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw DecompositionError("commutator nullspace: eigensolver did not converge");
  }
  const double cutoff = tol.rank_tol * scale;
  for (Eigen::Index n = 0; n < p && solver.eigenvalues()(n) <= cutoff; ++n) {
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index a = 0; a < p; ++a) {
      const auto [i, j] = units[static_cast<std::size_t>(a)];
      coeffs(i, j) = solver.eigenvectors()(a, n);
    }
    out.push_back(frame * coeffs * frame.adjoint());
  }
  return out;
}

SpanBuilder::SpanBuilder(Eigen::Index dim) : dim_(dim) {}

bool SpanBuilder::add(const Operator& op, double rank_tol) {
  if (op.rows() != dim_ || op.cols() != dim_) {
    throw InputError("SpanBuilder: dimension mismatch");
  }
  Vector v = vectorize(op);
  const double norm0 = v.norm();
  if (norm0 == 0.0) {
    return false;
  }
  if (count_ > 0) {
    const auto q = columns_.leftCols(count_);
    for (int pass = 0; pass < 2; ++pass) {
      const Vector coeffs = q.adjoint() * v;
      v -= q * coeffs;
    }
  }
  const double residual = v.norm();
  if (residual <= rank_tol * norm0) {
    return false;
  }
  if (count_ == columns_.cols()) {
    const Eigen::Index grown = std::min(dim_ * dim_, std::max<Eigen::Index>(8, 2 * count_));
    if (grown <= count_) {
      return false;
    }
    columns_.conservativeResize(dim_ * dim_, grown);
  }
  columns_.col(count_) = v / residual;
  ++count_;
  return true;
}

double SpanBuilder::relative_residual(const Operator& op) const {
  Vector v = vectorize(op);
  const double norm0 = v.norm();
  if (norm0 == 0.0) {
    return 0.0;
  }
  if (count_ > 0) {
    const auto q = columns_.leftCols(count_);
    for (int pass = 0; pass < 2; ++pass) {
      const Vector coeffs = q.adjoint() * v;
      v -= q * coeffs;
    }
  }
  return v.norm() / norm0;
}

std::vector<Operator> SpanBuilder::basis() const {
  std::vector<Operator> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (Eigen::Index k = 0; k < count_; ++k) {
    out.push_back(devectorize(columns_.col(k), dim_));
  }
  return out;
}

}  // namespace detail

}  // namespace nsforge
