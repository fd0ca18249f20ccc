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

#include "nsforge/collective.hpp"

#include <cmath>

namespace nsforge {

namespace {

// Largest N for which every n_J fits in 64 bits.
constexpr int kMaxTableQubits = 66;

using Wide = unsigned __int128;

Wide binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  Wide c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<Wide>(n - k + i) / static_cast<Wide>(i);
  }
  return c;
}

Operator single_site(int n_qubits, int site, const Operator& pauli) {
  Operator out = Operator::Identity(1, 1);
  for (int j = 0; j < n_qubits; ++j) {
    out = tensor(out, j == site ? pauli : Operator::Identity(2, 2));
  }
  return out;
}

}  // namespace

std::string SectorRow::spin_label() const {
  if (two_j % 2 == 0) {
    return std::to_string(two_j / 2);
  }
  return std::to_string(two_j) + "/2";
}

CollectiveModel collective_generators(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxCollectiveQubits) {
    throw InputError("collective_generators: N must lie in [1, " +
                     std::to_string(kMaxCollectiveQubits) + "]");
  }
  CollectiveModel model;
  model.n_qubits = n_qubits;
  const std::array<Operator, 3> paulis{pauli_x(), pauli_y(), pauli_z()};
  for (std::size_t a = 0; a < 3; ++a) {
    Operator sum = Operator::Zero(model.dim(), model.dim());
    for (int site = 0; site < n_qubits; ++site) {
      sum += single_site(n_qubits, site, paulis[a]);
    }
    model.generators[a] = std::move(sum);
  }
  return model;
}

SectorTable expected_multiplicities(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxTableQubits) {
    throw InputError("expected_multiplicities: N must lie in [1, " + std::to_string(kMaxTableQubits) + "]");
  }
  SectorTable table;
  for (int two_j = n_qubits % 2; two_j <= n_qubits; two_j += 2) {
    // With a = N/2 + J + 1 and b = N/2 - J we have a + b = N + 1, so
    // N! / (a! b!) = C(N+1, b) / (N+1).
    const int b = (n_qubits - two_j) / 2;
    const Wide numerator = static_cast<Wide>(two_j + 1) * binomial(n_qubits + 1, b);
    const Wide n = numerator / static_cast<Wide>(n_qubits + 1);
    table.push_back({two_j, static_cast<std::uint64_t>(n), two_j + 1});
  }
  return table;
}

Operator permutation_rep(int n_qubits, const std::vector<int>& perm) {
  if (n_qubits < 1 || n_qubits > kMaxCollectiveQubits) {
    throw InputError("permutation_rep: N out of range");
  }
  if (static_cast<int>(perm.size()) != n_qubits) {
    throw InputError("permutation_rep: permutation length differs from N");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
  for (int image : perm) {
    if (image < 1 || image > n_qubits || seen[static_cast<std::size_t>(image - 1)]) {
      throw InputError("permutation_rep: not a permutation of {1..N}");
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Operator out = Operator::Zero(dim, dim);
  for (Eigen::Index in = 0; in < dim; ++in) {
    Eigen::Index moved = 0;
    for (int j = 0; j < n_qubits; ++j) {
      const Eigen::Index bit = (in >> (n_qubits - 1 - j)) & 1;
      const int target = perm[static_cast<std::size_t>(j)] - 1;
      moved |= bit << (n_qubits - 1 - target);
    }
    out(moved, in) = 1.0;
  }
  return out;
}

std::array<Vector, 4> n3_reference_basis() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  std::array<Vector, 4> psi;
  for (auto& v : psi) {
    v = Vector::Zero(8);
  }
  // |b1 b2 b3> has index 4 b1 + 2 b2 + b3.
  psi[0](0b010) = r2;
  psi[0](0b100) = -r2;
  psi[1](0b011) = r2;
  psi[1](0b101) = -r2;
  psi[2](0b010) = r6;
  psi[2](0b100) = r6;
  psi[2](0b001) = -2.0 * r6;
  psi[3](0b110) = 2.0 * r6;
  psi[3](0b011) = -r6;
  psi[3](0b101) = -r6;
  return psi;
}

Operator total_spin_squared(const CollectiveModel& model) {
  Operator out = Operator::Zero(model.dim(), model.dim());
  for (const auto& s : model.generators) {
    out += s * s;
  }
  return out / 4.0;
}

}  // namespace nsforge
