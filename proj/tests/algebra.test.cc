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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "nsforge/collective.hpp"

using namespace nsforge;

namespace {

OperatorAlgebra collective_algebra(int n) {
  const CollectiveModel model = collective_generators(n);
  const std::vector<Operator> gens(model.generators.begin(), model.generators.end());
  return close_algebra(gens, Tolerances{});
}

}  // namespace

TEST(algebra, close_algebra_small_cases) {
  const Tolerances tol;
  const std::vector<Operator> xz{pauli_x(), pauli_z()};
  const auto full = close_algebra(xz, tol);
  EXPECT_EQ(full.dimension(), 4u);
  EXPECT_LT(closure_defect(full), 1e-12);

  const std::vector<Operator> z{pauli_z()};
  EXPECT_EQ(close_algebra(z, tol).dimension(), 2u);

  // A non-Hermitian generator pulls its adjoint in.
  const Operator raise = 0.5 * (pauli_x() + Complex(0, 1) * pauli_y());
  const std::vector<Operator> r{raise};
  EXPECT_EQ(close_algebra(r, tol).dimension(), 4u);
}

TEST(algebra, basis_is_orthonormal_and_contains_identity) {
  const auto alg = collective_algebra(3);
  EXPECT_EQ(alg.dimension(), 20u);
  for (std::size_t i = 0; i < alg.basis.size(); ++i) {
    for (std::size_t j = 0; j < alg.basis.size(); ++j) {
      EXPECT_NEAR(std::abs(hs_inner(alg.basis[i], alg.basis[j]) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-10);
    }
  }
  EXPECT_LT(span_residual(alg.basis, Operator::Identity(8, 8)), 1e-12);
}

TEST(algebra, commutant_and_bicommutant) {
  const Tolerances tol;
  const auto alg = collective_algebra(3);
  const auto comm = commutant(alg, tol, 11);
  EXPECT_EQ(comm.dimension(), 5u);
  for (const auto& c : comm.basis) {
    for (const auto& g : alg.generators) {
      EXPECT_LT(commutator(c, g).norm(), 1e-10);
    }
  }
  const auto bicomm = commutant(comm, tol, 12);
  ASSERT_EQ(bicomm.dimension(), alg.dimension());
  for (const auto& a : alg.basis) {
    EXPECT_LT(span_residual(bicomm.basis, a), 1e-10);
  }
}

TEST(algebra, center_counts_sectors) {
  const Tolerances tol;
  EXPECT_EQ(center(collective_algebra(3), tol).size(), 2u);
  EXPECT_EQ(center(collective_algebra(4), tol).size(), 3u);
  const std::vector<Operator> xz{pauli_x(), pauli_z()};
  EXPECT_EQ(center(close_algebra(xz, tol), tol).size(), 1u);
}

TEST(algebra, wedderburn_recovers_planted_sectors) {
  Rng rng(21);
  const Tolerances tol;
  for (int trial = 0; trial < 12; ++trial) {
    const auto set = fixtures::random_structured_set(3, 10, rng);
    const auto alg = close_algebra(set.generators, tol);
    const auto dec = wedderburn_decompose(alg, static_cast<std::uint64_t>(trial), tol);
    EXPECT_EQ(fixtures::sector_sizes(dec), set.sectors) << "trial " << trial;
    const auto report = verify_decomposition(alg, dec, tol);
    EXPECT_TRUE(report.passed) << "trial " << trial;
    EXPECT_LT(report.unitarity_residual, 1e-10);
  }
}

TEST(algebra, wedderburn_is_deterministic_per_seed) {
  const Tolerances tol;
  const auto alg = collective_algebra(4);
  const auto a = wedderburn_decompose(alg, 5, tol);
  const auto b = wedderburn_decompose(alg, 5, tol);
  EXPECT_EQ(a.isometry, b.isometry);
  const auto c = wedderburn_decompose(alg, 6, tol);
  EXPECT_EQ(fixtures::sector_sizes(a), fixtures::sector_sizes(c));
}

TEST(algebra, blocks_are_sorted_and_labelled) {
  const auto dec = wedderburn_decompose(collective_algebra(4), 0, Tolerances{});
  ASSERT_EQ(dec.blocks.size(), 3u);
  for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
    EXPECT_EQ(dec.blocks[j].label, static_cast<int>(j));
  }
  EXPECT_EQ(dec.blocks[0].d, 1);
  EXPECT_EQ(dec.blocks[0].n, 2);
  EXPECT_EQ(dec.offset(2), 2 + 9);
  EXPECT_THROW(dec.block(7), InputError);
}

TEST(algebra, irrep_action_reconstructs_generators) {
  const Tolerances tol;
  const auto alg = collective_algebra(3);
  const auto dec = wedderburn_decompose(alg, 0, tol);
  for (const auto& g : alg.generators) {
    Operator rebuilt = Operator::Zero(8, 8);
    for (const auto& b : dec.blocks) {
      const Operator m = irrep_action(dec, g, b.label);
      ASSERT_EQ(m.rows(), b.d);
      const Operator piece = tensor(Operator::Identity(b.n, b.n), m);
      rebuilt += b.basis_vectors * piece * b.basis_vectors.adjoint();
    }
    EXPECT_LT((rebuilt - g).norm(), 1e-10);
  }
}

TEST(algebra, verification_rejects_a_wrong_frame) {
  const Tolerances tol;
  const auto alg = collective_algebra(3);
  auto dec = wedderburn_decompose(alg, 0, tol);
  // Mixing the two sectors breaks block diagonality.
  Rng rng(3);
  const Operator u = fixtures::random_unitary(8, rng);
  dec.isometry = u * dec.isometry;
  for (auto& b : dec.blocks) {
    b.basis_vectors = u * b.basis_vectors;
  }
  EXPECT_FALSE(verify_decomposition(alg, dec, tol).passed);
}

TEST(algebra, abelian_algebra_splits_into_one_dimensional_irreps) {
  const Tolerances tol;
  const Operator h = Eigen::Vector4cd(1.0, 1.0, 2.0, -3.0).asDiagonal();
  const std::vector<Operator> gens{h};
  const auto dec = wedderburn_decompose(close_algebra(gens, tol), 0, tol);
  const std::vector<std::pair<int, int>> expected{{1, 1}, {1, 1}, {2, 1}};
  EXPECT_EQ(fixtures::sector_sizes(dec), expected);
}
