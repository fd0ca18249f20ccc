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


// Random fixtures shared by the unit tests and the acceptance binary. Each
// fixture carries its expected answer so tests compare against it directly.

#ifndef NSFORGE_TESTS_FIXTURES_HPP
#define NSFORGE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "nsforge/algebra.hpp"
#include "nsforge/lindblad.hpp"

namespace nsforge::fixtures {

inline Operator random_complex(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  Operator m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  return m;
}

inline Operator random_unitary(Eigen::Index dim, Rng& rng) {
  Eigen::HouseholderQR<Operator> qr(random_complex(dim, dim, rng));
  return qr.householderQ() * Operator::Identity(dim, dim);
}

inline Operator random_hermitian(Eigen::Index dim, Rng& rng) {
  const Operator m = random_complex(dim, dim, rng);
  return 0.5 * (m + m.adjoint());
}

inline Vector random_unit_vector(Eigen::Index dim, Rng& rng) {
  const Operator v = random_complex(dim, 1, rng);
  return v.col(0) / v.norm();
}

/// Sector sizes (n, d) with sum n d = dim and the generators realizing them.
struct StructuredSet {
  Eigen::Index dim = 0;
  std::vector<std::pair<int, int>> sectors;
  std::vector<Operator> generators;
};

/// Generators U (+)_J (Id_n (x) M_J) U^dagger with independent random M_J, so
/// the generated algebra has exactly the drawn sectors.
inline StructuredSet random_structured_set(Eigen::Index min_dim, Eigen::Index max_dim, Rng& rng) {
  std::uniform_int_distribution<Eigen::Index> dim_dist(min_dim, max_dim);
  StructuredSet set;
  set.dim = dim_dist(rng);
  Eigen::Index left = set.dim;
  while (left > 0) {
    std::uniform_int_distribution<int> d_dist(1, static_cast<int>(std::min<Eigen::Index>(left, 4)));
    const int d = d_dist(rng);
    std::uniform_int_distribution<int> n_dist(1, static_cast<int>(std::min<Eigen::Index>(left / d, 3)));
    const int n = n_dist(rng);
    set.sectors.emplace_back(n, d);
    left -= static_cast<Eigen::Index>(n) * d;
  }
  // Two d = 1 sectors of equal n would only be told apart by distinct
  // scalars, which random draws supply almost surely.
  const Operator u = random_unitary(set.dim, rng);
  const int n_generators = 2;
  for (int g = 0; g < n_generators; ++g) {
    Operator block_diag = Operator::Zero(set.dim, set.dim);
    Eigen::Index offset = 0;
    for (const auto& [n, d] : set.sectors) {
      const Operator m = random_complex(d, d, rng);
      const Operator piece = tensor(Operator::Identity(n, n), m);
      block_diag.block(offset, offset, n * d, n * d) = piece;
      offset += static_cast<Eigen::Index>(n) * d;
    }
    set.generators.push_back(u * block_diag * u.adjoint());
  }
  std::sort(set.sectors.begin(), set.sectors.end());
  return set;
}

/// Bath-only Lindblad operators I (x) B with perturbations X (x) A. The
/// system state is pure and the bath state is full rank.
inline LindbladModel random_ns_model(Eigen::Index d_s, Eigen::Index d_b, int n_ops, Rng& rng) {
  LindbladModel model;
  model.d_s = d_s;
  model.d_b = d_b;
  for (int k = 0; k < n_ops; ++k) {
    Operator b = random_complex(d_b, d_b, rng);
    b /= b.operatorNorm();
    model.l_ops.push_back(tensor(Operator::Identity(d_s, d_s), b));
    Operator dl = tensor(random_complex(d_s, d_s, rng), random_complex(d_b, d_b, rng));
    dl *= 0.5 / dl.operatorNorm();
    model.delta_ops.push_back(dl);
  }
  const Vector psi = random_unit_vector(d_s, rng);
  model.rho_s = psi * psi.adjoint();
  const Operator g = random_complex(d_b, d_b, rng);
  Operator sigma = g * g.adjoint() + 0.1 * Operator::Identity(d_b, d_b);
  model.sigma_b = sigma / sigma.trace().real();
  return model;
}

/// Sorted (n, d) pairs of a decomposition.
inline std::vector<std::pair<int, int>> sector_sizes(const BlockDecomposition& dec) {
  std::vector<std::pair<int, int>> out;
  for (const auto& b : dec.blocks) {
    out.emplace_back(b.n, b.d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nsforge::fixtures

#endif  // NSFORGE_TESTS_FIXTURES_HPP
