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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "nsforge/noiseless.hpp"

using namespace nsforge;

TEST(operator_core, hs_inner_is_conjugate_linear_in_first_argument) {
  Rng rng(1);
  const Operator a = fixtures::random_complex(3, 3, rng);
  const Operator b = fixtures::random_complex(3, 3, rng);
  const Complex c(0.3, -1.7);
  EXPECT_NEAR(std::abs(hs_inner(c * a, b) - std::conj(c) * hs_inner(a, b)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(hs_inner(a, b) - (a.adjoint() * b).trace()), 0.0, 1e-12);
  EXPECT_NEAR(hs_norm(a) * hs_norm(a), hs_inner(a, a).real(), 1e-10);
}

TEST(operator_core, vectorize_matches_kronecker_identity) {
  Rng rng(2);
  const Operator a = fixtures::random_complex(3, 3, rng);
  const Operator x = fixtures::random_complex(3, 3, rng);
  const Operator b = fixtures::random_complex(3, 3, rng);
  const Vector lhs = vectorize(a * x * b);
  const Vector rhs = tensor(b.transpose(), a) * vectorize(x);
  EXPECT_LT((lhs - rhs).norm(), 1e-12);
  EXPECT_EQ(devectorize(vectorize(x), 3), x);
}

TEST(operator_core, orthonormalize_drops_dependent_operators) {
  Rng rng(3);
  const Operator a = fixtures::random_complex(2, 2, rng);
  const Operator b = fixtures::random_complex(2, 2, rng);
  const std::vector<Operator> ops{a, b, 2.0 * a - Complex(0, 1) * b, Operator::Zero(2, 2)};
  const auto basis = orthonormalize(ops, Tolerances{});
  ASSERT_EQ(basis.size(), 2u);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      EXPECT_NEAR(std::abs(hs_inner(basis[i], basis[j]) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-12);
    }
  }
}

TEST(operator_core, commutator_nullspace_of_paulis) {
  const std::vector<Operator> xz{pauli_x(), pauli_z()};
  const auto scalars = commutator_nullspace(xz, Tolerances{});
  ASSERT_EQ(scalars.size(), 1u);
  EXPECT_LT(distance_from_scalar(scalars[0]), 1e-12);

  const std::vector<Operator> z{pauli_z()};
  EXPECT_EQ(commutator_nullspace(z, Tolerances{}).size(), 2u);
}

TEST(operator_core, commutator_and_dagger) {
  EXPECT_LT((commutator(pauli_x(), pauli_y()) - Complex(0, 2) * pauli_z()).norm(), 1e-15);
  const Operator y = pauli_y();
  EXPECT_EQ(dagger(y), y);
  EXPECT_TRUE(is_hermitian(y, 1e-15));
  EXPECT_FALSE(is_hermitian(Complex(0, 1) * y, 1e-15));
}

TEST(operator_core, hermitian_eigensystem_reconstructs) {
  Rng rng(4);
  const Operator h = fixtures::random_hermitian(5, rng);
  const Eigensystem es = hermitian_eigensystem(h, Tolerances{});
  const Operator rebuilt = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  EXPECT_LT((rebuilt - h).norm(), 1e-12);
  for (Eigen::Index k = 1; k < es.values.size(); ++k) {
    EXPECT_LE(es.values(k - 1), es.values(k));
  }
  EXPECT_THROW(hermitian_eigensystem(fixtures::random_complex(3, 3, rng), Tolerances{}), InputError);
}

TEST(operator_core, cluster_eigenvalues_groups_near_degenerate_values) {
  Eigen::VectorXd v(6);
  v << -1.0, -1.0 + 1e-10, 0.5, 2.0, 2.0 + 1e-9, 2.0 + 2e-9;
  const auto clusters = cluster_eigenvalues(v, 1e-7);
  ASSERT_EQ(clusters.size(), 3u);
  EXPECT_EQ(clusters[0].size, 2);
  EXPECT_EQ(clusters[1].size, 1);
  EXPECT_EQ(clusters[2].begin, 3);
  EXPECT_EQ(clusters[2].size, 3);
  EXPECT_NEAR(clusters[2].mean, 2.0 + 1e-9, 1e-12);
}

TEST(operator_core, partial_trace_of_product) {
  Rng rng(5);
  const Operator a = fixtures::random_complex(2, 2, rng);
  const Operator b = fixtures::random_complex(3, 3, rng);
  const Operator ab = tensor(a, b);
  EXPECT_LT((partial_trace(ab, 2, 3, TraceOut::First) - a.trace() * b).norm(), 1e-12);
  EXPECT_LT((partial_trace(ab, 2, 3, TraceOut::Second) - b.trace() * a).norm(), 1e-12);
  EXPECT_THROW(partial_trace(ab, 2, 2, TraceOut::First), InputError);
}

TEST(operator_core, tolerances_validate) {
  Tolerances tol;
  EXPECT_NO_THROW(tol.validate());
  tol.rank_tol = 0.0;
  EXPECT_THROW(tol.validate(), InputError);
  tol = Tolerances{};
  tol.max_retries = 0;
  EXPECT_THROW(tol.validate(), InputError);
}

TEST(operator_core, random_elements_stay_in_span) {
  Rng rng(6);
  const std::vector<Operator> basis{Operator::Identity(2, 2) / std::sqrt(2.0), pauli_z() / std::sqrt(2.0)};
  const Operator h = random_hermitian_in(basis, rng);
  EXPECT_TRUE(is_hermitian(h, 1e-12));
  EXPECT_LT(std::abs(h(0, 1)) + std::abs(h(1, 0)), 1e-15);
  const Operator e = random_element_in(basis, rng);
  EXPECT_LT(std::abs(e(0, 1)), 1e-15);
}

TEST(operator_core, span_builder_tracks_residuals) {
  detail::SpanBuilder span(2);
  EXPECT_TRUE(span.add(pauli_x(), 1e-9));
  EXPECT_FALSE(span.add(Complex(3.0, 1.0) * pauli_x(), 1e-9));
  EXPECT_NEAR(span.relative_residual(pauli_x() + pauli_z()), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(span.size(), 1);
}
