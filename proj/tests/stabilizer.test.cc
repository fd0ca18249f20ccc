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


#include "nsforge/stabilizer.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace nsforge;

namespace {

PauliElement random_pauli(int n, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return PauliElement{n, bits(rng), bits(rng), phase(rng)};
}

}  // namespace

TEST(stabilizer, labels_round_trip) {
  const PauliElement p = pauli_from_label("XIYZ");
  EXPECT_EQ(p.label(), "+XIYZ");
  EXPECT_EQ(p.x_string(), "1010");
  EXPECT_EQ(p.z_string(), "0011");
  EXPECT_EQ(pauli_from_label("-iZX").label(), "-iZX");
  EXPECT_THROW(pauli_from_label("XQ"), InputError);
  EXPECT_THROW(pauli_from_label(""), InputError);
}

TEST(stabilizer, label_matches_dense_matrix) {
  const Operator expected = tensor(pauli_x(), tensor(pauli_y(), pauli_z()));
  EXPECT_LT((pauli_from_label("XYZ").to_operator() - expected).norm(), 1e-15);
  EXPECT_LT((pauli_from_label("-Y").to_operator() + pauli_y()).norm(), 1e-15);
}

TEST(stabilizer, products_match_matrix_products) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const PauliElement a = random_pauli(n, rng);
    const PauliElement b = random_pauli(n, rng);
    const Operator product = a.to_operator() * b.to_operator();
    EXPECT_LT(((a * b).to_operator() - product).norm(), 1e-12);
    const bool commute = commutator(a.to_operator(), b.to_operator()).norm() < 1e-12;
    EXPECT_EQ(a.commutes_with(b), commute);
    EXPECT_LT((a.adjoint().to_operator() - a.to_operator().adjoint()).norm(), 1e-12);
  }
}

TEST(stabilizer, group_validation) {
  const auto g = [](std::vector<std::string> labels) {
    std::vector<PauliElement> out;
    for (const auto& l : labels) {
      out.push_back(pauli_from_label(l));
    }
    return out;
  };
  EXPECT_NO_THROW(StabilizerGroup::create(3, g({"ZZI", "IZZ"})));
  EXPECT_THROW(StabilizerGroup::create(3, g({"XZI", "ZZI"})), InputError);   // anticommute
  EXPECT_THROW(StabilizerGroup::create(3, g({"ZZI", "IZZ", "ZIZ"})), InputError);  // dependent
  EXPECT_THROW(StabilizerGroup::create(2, g({"ZI", "IZ"})), InputError);   // k = N
  EXPECT_THROW(StabilizerGroup::create(3, {pauli_from_label("-ZZI")}), InputError);
  EXPECT_THROW(StabilizerGroup::create(3, {}), InputError);
}

TEST(stabilizer, repetition_code_blocks_and_projectors) {
  const auto group = StabilizerGroup::create(3, {pauli_from_label("ZZI"), pauli_from_label("IZZ")});
  EXPECT_EQ(group.elements().size(), 4u);
  const auto sd = stabilizer_decompose(group);
  ASSERT_EQ(sd.decomposition.blocks.size(), 4u);
  const std::vector<std::vector<int>> syndromes{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  EXPECT_EQ(sd.syndromes, syndromes);
  const auto ops = generator_operators(group);
  const Operator id = Operator::Identity(8, 8);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& b = sd.decomposition.blocks[j];
    EXPECT_EQ(b.n, 2);
    EXPECT_EQ(b.d, 1);
    const Operator expected =
        0.25 * (id + syndromes[j][0] * ops[0]) * (id + syndromes[j][1] * ops[1]);
    EXPECT_LT((b.projector() - expected).norm(), 1e-12);
  }
  const auto report = verify_decomposition(close_algebra(ops, Tolerances{}), sd.decomposition, Tolerances{});
  EXPECT_TRUE(report.passed);
}

TEST(stabilizer, error_classification) {
  const auto group = StabilizerGroup::create(3, {pauli_from_label("ZZI"), pauli_from_label("IZZ")});
  const PauliElement id{3, 0, 0, 0};
  EXPECT_EQ(classify_error_pair(id, pauli_from_label("XII"), group), ErrorClass::Anticommutes);
  EXPECT_EQ(classify_error_pair(pauli_from_label("ZII"), pauli_from_label("IZI"), group), ErrorClass::InGroup);
  EXPECT_EQ(classify_error_pair(id, pauli_from_label("-iZIZ"), group), ErrorClass::InGroup);
  EXPECT_EQ(classify_error_pair(id, pauli_from_label("XXX"), group), ErrorClass::Outside);
  EXPECT_EQ(to_string(ErrorClass::Outside), "OUTSIDE");
  EXPECT_TRUE(group.contains_up_to_phase(pauli_from_label("ZIZ")));
  EXPECT_FALSE(group.contains_up_to_phase(pauli_from_label("ZII")));
}

TEST(stabilizer, anticommuting_errors_permute_blocks) {
  // An error flips the syndrome bits of the generators it anticommutes with.
  const auto group = StabilizerGroup::create(3, {pauli_from_label("ZZI"), pauli_from_label("IZZ")});
  const auto sd = stabilizer_decompose(group);
  for (const char* label : {"XII", "IXI", "IIX", "YII"}) {
    const PauliElement e = pauli_from_label(label);
    const Operator u = e.to_operator();
    for (std::size_t j = 0; j < sd.syndromes.size(); ++j) {
      std::vector<int> flipped = sd.syndromes[j];
      for (std::size_t g = 0; g < flipped.size(); ++g) {
        flipped[g] *= e.commutes_with(group.generators()[g]) ? 1 : -1;
      }
      const auto target = std::find(sd.syndromes.begin(), sd.syndromes.end(), flipped) - sd.syndromes.begin();
      const Operator moved = u * sd.decomposition.blocks[j].projector() * u.adjoint();
      EXPECT_LT((moved - sd.decomposition.blocks[static_cast<std::size_t>(target)].projector()).norm(), 1e-12)
          << label << " on block " << j;
    }
  }
}
