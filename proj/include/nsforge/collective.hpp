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

#ifndef NSFORGE_COLLECTIVE_HPP
#define NSFORGE_COLLECTIVE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nsforge/operator_core.hpp"

namespace nsforge {

/// N qubits coupled symmetrically to a common bath.
struct CollectiveModel {
  int n_qubits = 0;
  /// sum_i sigma_x^(i), sum_i sigma_y^(i), sum_i sigma_z^(i); qubit 1 is the
  /// most significant tensor factor.
  std::array<Operator, 3> generators;

  Eigen::Index dim() const { return Eigen::Index{1} << n_qubits; }
};

struct SectorRow {
  int two_j = 0;  // 2J, so half-integer spins stay exact
  std::uint64_t n = 0;
  int d = 0;  // 2J + 1

  std::string spin_label() const;
};

using SectorTable = std::vector<SectorRow>;

inline constexpr int kMaxCollectiveQubits = 10;

/// Throws InputError unless 1 <= n_qubits <= 10.
CollectiveModel collective_generators(int n_qubits);

/// n_J = (2J+1) N! / ((N/2+J+1)! (N/2-J)!) for J = N/2, N/2-1, ... >= 0,
/// ascending in J, in exact integer arithmetic.
SectorTable expected_multiplicities(int n_qubits);

/// nu(pi) with perm[j] = pi(j+1) (one-based images): the state of qubit j
/// moves to qubit pi(j), which makes nu a homomorphism,
/// nu(p1) nu(p2) = nu(p1 o p2).
Operator permutation_rep(int n_qubits, const std::vector<int>& perm);

/// The four three-qubit kets spanning the J = 1/2 sector, in the order
/// psi^1_1, psi^1_2, psi^2_1, psi^2_2.
std::array<Vector, 4> n3_reference_basis();

/// J^2 = (Sx^2 + Sy^2 + Sz^2) / 4 built from the collective sums.
Operator total_spin_squared(const CollectiveModel& model);

}  // namespace nsforge

#endif  // NSFORGE_COLLECTIVE_HPP
