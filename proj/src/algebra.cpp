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

#include "nsforge/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <tuple>

#include <Eigen/SVD>

namespace nsforge {

namespace {

/// A recoverable failure inside one decomposition attempt.
struct AttemptFailure {
  std::string stage;
  std::string detail;
};

std::vector<Operator> with_adjoints(std::span<const Operator> ops) {
  std::vector<Operator> out(ops.begin(), ops.end());
  for (const auto& op : ops) {
    if (!is_hermitian(op, 1e-14)) {
      out.push_back(op.adjoint());
    }
  }
  return out;
}

/// Elements of span(basis) commuting with every generator.
std::vector<Operator> commuting_subspace(std::span<const Operator> basis,
                                         std::span<const Operator> generators,
                                         const Tolerances& tol) {
  if (basis.empty()) {
    return {};
  }
  const Eigen::Index dim = basis.front().rows();
  const Eigen::Index block = dim * dim;
  const auto p = static_cast<Eigen::Index>(basis.size());
  const auto m = static_cast<Eigen::Index>(generators.size());
  if (m == 0) {
    return {basis.begin(), basis.end()};
  }
  Eigen::MatrixXcd stacked(block * m, p);
  double scale = 0.0;
  for (Eigen::Index s = 0; s < m; ++s) {
    const auto& g = generators[static_cast<std::size_t>(s)];
    scale = std::max(scale, g.norm());
    for (Eigen::Index a = 0; a < p; ++a) {
      stacked.block(s * block, a, block, 1) = vectorize(commutator(g, basis[static_cast<std::size_t>(a)]));
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // Singular values are relative to the generator scale so that scalar
  // generators (identically zero commutators) leave the whole basis.
  const double cutoff = tol.rank_tol * std::max(scale, 1e-300);
  std::vector<Operator> out;
  for (Eigen::Index k = 0; k < p; ++k) {
    const double sigma = k < sv.size() ? sv(k) : 0.0;
    if (sigma > cutoff) {
      continue;
    }
    Operator x = Operator::Zero(dim, dim);
    for (Eigen::Index a = 0; a < p; ++a) {
      x += svd.matrixV()(a, k) * basis[static_cast<std::size_t>(a)];
    }
    out.push_back(x);
  }
  return out;
}

/// Compressions W^dagger B W, orthonormalized.
std::vector<Operator> compress(std::span<const Operator> ops, const Eigen::MatrixXcd& w,
                               const Tolerances& tol) {
  std::vector<Operator> restricted;
  restricted.reserve(ops.size());
  for (const auto& op : ops) {
    restricted.push_back(w.adjoint() * op * w);
  }
  return orthonormalize(restricted, tol);
}

int integer_sqrt_gate(std::size_t value, const char* what, int block) {
  const double root = std::sqrt(static_cast<double>(value));
  const double rounded = std::round(root);
  if (std::abs(root - rounded) >= 1e-6) {
    std::ostringstream msg;
    msg << what << " dimension " << value << " of isotypic component " << block
        << " is not a perfect square";
    throw AttemptFailure{"integer extraction", msg.str()};
  }
  return static_cast<int>(rounded);
}

struct Sector {
  int n = 0;
  int d = 0;
  double central_eigenvalue = 0.0;
  Eigen::MatrixXcd basis;  // dim x (n d)
};

BlockDecomposition attempt_decomposition(const OperatorAlgebra& alg, const OperatorAlgebra& comm,
                                         std::span<const Operator> center_basis, Rng& rng,
                                         const Tolerances& tol) {
  const Eigen::Index dim = alg.dim;

  // (a) isotypic components from a random central element.
  const Operator z = random_hermitian_in(center_basis, rng);
  const Eigensystem zeig = hermitian_eigensystem(z, tol);
  const auto zclusters = cluster_eigenvalues(zeig.values, tol.cluster_tol);
  if (zclusters.size() != center_basis.size()) {
    std::ostringstream msg;
    msg << "central element separated " << zclusters.size() << " eigenspaces, expected "
        << center_basis.size();
    throw AttemptFailure{"isotypic split", msg.str()};
  }

  std::vector<Sector> sectors;
  for (std::size_t c = 0; c < zclusters.size(); ++c) {
    const auto& cl = zclusters[c];
    const Eigen::MatrixXcd w = zeig.vectors.middleCols(cl.begin, cl.size);
    const int block = static_cast<int>(c);

    // (b) sector sizes from the restricted algebra and commutant.
    const auto restricted_alg = compress(alg.basis, w, tol);
    const auto restricted_comm = compress(comm.basis, w, tol);
    const int d = integer_sqrt_gate(restricted_alg.size(), "restricted algebra", block);
    const int n = integer_sqrt_gate(restricted_comm.size(), "restricted commutant", block);
    if (static_cast<Eigen::Index>(n) * d != cl.size) {
      std::ostringstream msg;
      msg << "n*d = " << n * d << " but the component has dimension " << cl.size;
      throw AttemptFailure{"sector sizes", msg.str()};
    }

    // (c) the first copy of the irrep from a random commutant element.
    const Operator y = random_hermitian_in(restricted_comm, rng);
    const Eigensystem yeig = hermitian_eigensystem(y, tol);
    const auto yclusters = cluster_eigenvalues(yeig.values, tol.cluster_tol);
    const bool generic = static_cast<int>(yclusters.size()) == n &&
                         std::all_of(yclusters.begin(), yclusters.end(),
                                     [d](const EigenCluster& k) { return k.size == d; });
    if (!generic) {
      std::ostringstream msg;
      msg << "commutant element spectrum has " << yclusters.size() << " clusters, expected " << n
          << " of size " << d << " in block " << block;
      throw AttemptFailure{"multiplicity split", msg.str()};
    }

    // (d) transport the first copy to the others with commutant elements.
    Eigen::MatrixXcd local(cl.size, static_cast<Eigen::Index>(n) * d);
    const Eigen::MatrixXcd v1 = yeig.vectors.middleCols(yclusters[0].begin, d);
    local.leftCols(d) = v1;
    const Operator s = random_element_in(restricted_comm, rng);
    const Eigen::MatrixXcd moved = s * v1;
    for (int lambda = 1; lambda < n; ++lambda) {
      const Eigen::MatrixXcd q = yeig.vectors.middleCols(yclusters[static_cast<std::size_t>(lambda)].begin, d);
      const Eigen::MatrixXcd image = q * (q.adjoint() * moved);
      const double scale = image.col(0).norm();
      if (scale <= 1e-6 * s.norm()) {
        std::ostringstream msg;
        msg << "transport to copy " << lambda << " of block " << block << " degenerated";
        throw AttemptFailure{"copy transport", msg.str()};
      }
      local.middleCols(static_cast<Eigen::Index>(lambda) * d, d) = image / scale;
    }
    sectors.push_back({n, d, cl.mean, w * local});
  }

  std::stable_sort(sectors.begin(), sectors.end(), [](const Sector& a, const Sector& b) {
    return std::tie(a.d, a.n, a.central_eigenvalue) < std::tie(b.d, b.n, b.central_eigenvalue);
  });

  std::size_t sum_d2 = 0;
  std::size_t sum_n2 = 0;
  Eigen::Index sum_nd = 0;
  for (const auto& s : sectors) {
    sum_d2 += static_cast<std::size_t>(s.d) * s.d;
    sum_n2 += static_cast<std::size_t>(s.n) * s.n;
    sum_nd += static_cast<Eigen::Index>(s.n) * s.d;
  }
  if (sum_d2 != alg.dimension() || sum_n2 != comm.dimension() || sum_nd != dim) {
    std::ostringstream msg;
    msg << "sum d^2 = " << sum_d2 << " (algebra " << alg.dimension() << "), sum n^2 = " << sum_n2
        << " (commutant " << comm.dimension() << "), sum n d = " << sum_nd << " (dim " << dim << ")";
    throw AttemptFailure{"dimension accounting", msg.str()};
  }

  BlockDecomposition dec;
  dec.dim = dim;
  dec.isometry.resize(dim, dim);
  Eigen::Index col = 0;
  for (std::size_t k = 0; k < sectors.size(); ++k) {
    auto& s = sectors[k];
    const Eigen::Index width = static_cast<Eigen::Index>(s.n) * s.d;
    dec.isometry.middleCols(col, width) = s.basis;
    col += width;
    dec.blocks.push_back({static_cast<int>(k), s.n, s.d, std::move(s.basis)});
  }
  return dec;
}

}  // namespace

const Block& BlockDecomposition::block(int label) const {
  for (const auto& b : blocks) {
    if (b.label == label) {
      return b;
    }
  }
  throw InputError("unknown block label " + std::to_string(label));
}

Eigen::Index BlockDecomposition::offset(int label) const {
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    if (b.label == label) {
      return off;
    }
    off += static_cast<Eigen::Index>(b.n) * b.d;
  }
  throw InputError("unknown block label " + std::to_string(label));
}

OperatorAlgebra close_algebra(std::span<const Operator> generators, const Tolerances& tol) {
  tol.validate();
  if (generators.empty()) {
    throw InputError("close_algebra: at least one generator is required");
  }
  const Eigen::Index dim = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw InputError("close_algebra: generators must be square with a common dimension");
    }
  }
  const auto letters = with_adjoints(generators);

  // Words in the generators and their adjoints, grown by left multiplication.
  detail::SpanBuilder span(dim);
  std::deque<Operator> frontier;
  const Operator id = Operator::Identity(dim, dim);
  span.add(id, tol.rank_tol);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Operator word = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& letter : letters) {
      const Operator next = letter * word;
      if (span.add(next, tol.rank_tol)) {
        frontier.push_back(span.element(span.size() - 1));
      }
      if (span.size() > dim * dim) {
        throw DecompositionError("close_algebra: algebra dimension exceeds dim^2; rank tolerance failure");
      }
    }
  }
  return {dim, {generators.begin(), generators.end()}, span.basis(), true};
}

OperatorAlgebra commutant(const OperatorAlgebra& alg, const Tolerances& tol, std::uint64_t seed) {
  tol.validate();
  Rng rng(seed);
  const auto letters = with_adjoints(alg.generators);
  // A generic Hermitian element of the algebra has eigenspaces whose blocks
  // already contain every commuting operator; the nullspace search runs
  // inside those blocks only.
  std::vector<EigenCluster> clusters{{0, alg.dim, 0.0}};
  Eigen::MatrixXcd frame = Eigen::MatrixXcd::Identity(alg.dim, alg.dim);
  if (!alg.basis.empty()) {
    const Eigensystem eig = hermitian_eigensystem(random_hermitian_in(alg.basis, rng), tol);
    frame = eig.vectors;
    clusters = cluster_eigenvalues(eig.values, tol.cluster_tol);
  }
  auto basis = detail::commutant_in_frame(letters, frame, clusters, tol);
  OperatorAlgebra out;
  out.dim = alg.dim;
  out.generators = basis;
  out.basis = std::move(basis);
  return out;
}

std::vector<Operator> center(const OperatorAlgebra& alg, const Tolerances& tol) {
  tol.validate();
  return commuting_subspace(alg.basis, with_adjoints(alg.generators), tol);
}

BlockDecomposition wedderburn_decompose(const OperatorAlgebra& alg, std::uint64_t seed,
                                        const Tolerances& tol) {
  tol.validate();
  if (alg.basis.empty()) {
    throw InputError("wedderburn_decompose: empty algebra");
  }
  Rng rng(seed);
  const OperatorAlgebra comm = commutant(alg, tol, rng());
  const auto cen = center(alg, tol);
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < tol.max_retries; ++attempt) {
    try {
      BlockDecomposition dec = attempt_decomposition(alg, comm, cen, rng, tol);
      const VerificationReport report = verify_decomposition(alg, dec, tol);
      if (report.passed) {
        return dec;
      }
      std::ostringstream msg;
      msg << "verification: max relative residual " << report.max_relative_residual
          << ", unitarity residual " << report.unitarity_residual;
      last_failure = msg.str();
    } catch (const AttemptFailure& f) {
      last_failure = f.stage + ": " + f.detail;
    }
  }
  throw DecompositionError("wedderburn_decompose: retries exhausted after " +
                           std::to_string(tol.max_retries) + " attempts; last failure at " +
                           last_failure);
}

Operator irrep_action(const BlockDecomposition& dec, const Operator& op, int label) {
  const Block& b = dec.block(label);
  const Operator t = b.basis_vectors.adjoint() * op * b.basis_vectors;
  Operator m = Operator::Zero(b.d, b.d);
  for (int lambda = 0; lambda < b.n; ++lambda) {
    m += t.block(lambda * b.d, lambda * b.d, b.d, b.d);
  }
  return m / static_cast<double>(b.n);
}

VerificationReport verify_decomposition(const OperatorAlgebra& alg, const BlockDecomposition& dec,
                                        const Tolerances& tol) {
  if (dec.dim != alg.dim || dec.isometry.rows() != alg.dim || dec.isometry.cols() != alg.dim) {
    throw InputError("verify_decomposition: decomposition and algebra dimensions differ");
  }
  VerificationReport report;
  const Eigen::Index dim = alg.dim;
  report.unitarity_residual =
      (dec.isometry.adjoint() * dec.isometry - Eigen::MatrixXcd::Identity(dim, dim)).norm();
  Eigen::Index total = 0;
  for (const auto& b : dec.blocks) {
    total += static_cast<Eigen::Index>(b.n) * b.d;
  }
  bool ok = total == dim && report.unitarity_residual <= tol.residual_tol;

  for (const auto& s : alg.generators) {
    const Operator t = dec.isometry.adjoint() * s * dec.isometry;
    Operator outside = t;
    std::vector<double> per_block;
    Eigen::Index off = 0;
    for (const auto& b : dec.blocks) {
      const Eigen::Index width = static_cast<Eigen::Index>(b.n) * b.d;
      if (off + width > dim) {
        break;
      }
      const Operator sub = t.block(off, off, width, width);
      Operator m = Operator::Zero(b.d, b.d);
      for (int lambda = 0; lambda < b.n; ++lambda) {
        m += sub.block(lambda * b.d, lambda * b.d, b.d, b.d);
      }
      m /= static_cast<double>(b.n);
      const Operator expected = tensor(Operator::Identity(b.n, b.n), m);
      per_block.push_back((sub - expected).norm());
      outside.block(off, off, width, width).setZero();
      off += width;
    }
    const double off_block = outside.norm();
    const double norm = s.norm();
    double worst = off_block;
    for (double r : per_block) {
      worst = std::max(worst, r);
    }
    const double relative = norm > 0.0 ? worst / norm : worst;
    report.max_relative_residual = std::max(report.max_relative_residual, relative);
    if (worst > tol.residual_tol * norm) {
      ok = false;
    }
    report.block_residuals.push_back(std::move(per_block));
    report.off_block_residuals.push_back(off_block);
  }
  report.passed = ok;
  return report;
}

double span_residual(std::span<const Operator> basis, const Operator& op) {
  const double norm = op.norm();
  if (norm == 0.0) {
    return 0.0;
  }
  Operator rest = op;
  for (const auto& b : basis) {
    rest -= hs_inner(b, op) * b;
  }
  return rest.norm() / norm;
}

double closure_defect(const OperatorAlgebra& alg) {
  double worst = span_residual(alg.basis, Operator::Identity(alg.dim, alg.dim));
  for (const auto& a : alg.basis) {
    worst = std::max(worst, span_residual(alg.basis, a.adjoint()));
    for (const auto& b : alg.basis) {
      worst = std::max(worst, span_residual(alg.basis, a * b));
    }
  }
  return worst;
}

}  // namespace nsforge
