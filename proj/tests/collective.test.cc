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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "nsforge/algebra.hpp"

using namespace nsforge;

TEST(collective, expected_multiplicities_three_qubits) {
  const SectorTable table = expected_multiplicities(3);
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[0].spin_label(), "1/2");
  EXPECT_EQ(table[0].n, 2u);
  EXPECT_EQ(table[0].d, 2);
  EXPECT_EQ(table[1].spin_label(), "3/2");
  EXPECT_EQ(table[1].n, 1u);
  EXPECT_EQ(table[1].d, 4);
}

TEST(collective, expected_multiplicities_fill_the_space) {
  for (int n = 1; n <= 40; ++n) {
    unsigned __int128 total = 0;
    for (const auto& row : expected_multiplicities(n)) {
      EXPECT_EQ(row.d, row.two_j + 1);
      total += static_cast<unsigned __int128>(row.n) * static_cast<unsigned>(row.d);
    }
    EXPECT_TRUE(total == (static_cast<unsigned __int128>(1) << n)) << "N = " << n;
  }
}

TEST(collective, spin_labels) {
  EXPECT_EQ((SectorRow{0, 1, 1}.spin_label()), "0");
  EXPECT_EQ((SectorRow{4, 1, 5}.spin_label()), "2");
  EXPECT_EQ((SectorRow{5, 1, 6}.spin_label()), "5/2");
}

TEST(collective, generators_satisfy_su2_relations) {
  const CollectiveModel m = collective_generators(4);
  const auto& [sx, sy, sz] = m.generators;
  EXPECT_EQ(m.dim(), 16);
  // Sums of Pauli matrices obey [Sx, Sy] = 2 i Sz.
  EXPECT_LT((commutator(sx, sy) - Complex(0, 2) * sz).norm(), 1e-12);
  const Operator j2 = total_spin_squared(m);
  EXPECT_LT(commutator(j2, sx).norm(), 1e-12);
  EXPECT_THROW(collective_generators(0), InputError);
  EXPECT_THROW(collective_generators(kMaxCollectiveQubits + 1), InputError);
}

TEST(collective, permutation_rep_is_a_homomorphism) {
  const int n = 4;
  std::vector<int> p1{2, 3, 1, 4};
  std::vector<int> p2{4, 1, 3, 2};
  std::vector<int> composed(n);
  for (int j = 0; j < n; ++j) {
    composed[static_cast<std::size_t>(j)] = p1[static_cast<std::size_t>(p2[static_cast<std::size_t>(j)] - 1)];
  }
  const Operator lhs = permutation_rep(n, p1) * permutation_rep(n, p2);
  EXPECT_LT((lhs - permutation_rep(n, composed)).norm(), 1e-15);
  const Operator u = permutation_rep(n, p1);
  EXPECT_LT((u.adjoint() * u - Operator::Identity(16, 16)).norm(), 1e-15);
  EXPECT_THROW(permutation_rep(n, {1, 1, 2, 3}), InputError);
}

TEST(collective, permutation_moves_qubit_states) {
  // |100> under the cycle 1 -> 2 -> 3 -> 1 becomes |010>.
  const Operator u = permutation_rep(3, {2, 3, 1});
  Vector e = Vector::Zero(8);
  e(4) = 1.0;
  const Vector moved = u * e;
  EXPECT_NEAR(std::abs(moved(2)), 1.0, 1e-15);
}

TEST(collective, permutations_span_the_commutant) {
  // Schur-Weyl duality at small N: the commutant of the collective algebra is
  // spanned by the qubit permutations.
  const Tolerances tol;
  for (int n = 2; n <= 4; ++n) {
    const CollectiveModel m = collective_generators(n);
    const std::vector<Operator> gens(m.generators.begin(), m.generators.end());
    const auto comm = commutant(close_algebra(gens, tol), tol, 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Operator> reps;
    do {
      reps.push_back(permutation_rep(n, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto span = orthonormalize(reps, tol);
    EXPECT_EQ(span.size(), comm.dimension()) << "N = " << n;
    for (const auto& r : reps) {
      EXPECT_LT(span_residual(comm.basis, r), 1e-10);
    }
  }
}

TEST(collective, n3_reference_basis_is_spin_one_half) {
  const auto psi = n3_reference_basis();
  const Operator j2 = total_spin_squared(collective_generators(3));
  for (std::size_t a = 0; a < psi.size(); ++a) {
    for (std::size_t b = 0; b < psi.size(); ++b) {
      EXPECT_NEAR(std::abs(psi[a].dot(psi[b]) - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
    }
    EXPECT_LT((j2 * psi[a] - 0.75 * psi[a]).norm(), 1e-12);
  }
}
