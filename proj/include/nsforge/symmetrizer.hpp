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

#ifndef NSFORGE_SYMMETRIZER_HPP
#define NSFORGE_SYMMETRIZER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nsforge/algebra.hpp"

namespace nsforge {

/// A finite group of unitaries, closed under multiplication up to a global
/// phase. Phases drop out of X -> g X g^dagger, so projective
/// representations (such as the Pauli matrices) are accepted.
class UnitaryGroup {
 public:
  /// Verifies unitarity, the presence of the identity and closure. The
  /// InputError message names the first offending product.
  static UnitaryGroup create(std::vector<Operator> elements, const Tolerances& tol = {});

  /// Multiplicative closure of `generators`; throws InputError past max_order.
  static UnitaryGroup generate(std::span<const Operator> generators, const Tolerances& tol = {},
                               std::size_t max_order = 1024);

  const std::vector<Operator>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  Eigen::Index dim() const { return elements_.front().rows(); }

 private:
  explicit UnitaryGroup(std::vector<Operator> elements) : elements_(std::move(elements)) {}

  std::vector<Operator> elements_;
};

/// (1/|G|) sum_g g X g^dagger, summed in element order.
Operator symmetrize(const Operator& x, const UnitaryGroup& group);

struct DecouplingReport {
  /// H_S commutes with the group.
  bool condition_i = false;
  double hamiltonian_residual = 0.0;
  /// ||symmetrize(S_alpha)|| per interaction operator.
  std::vector<double> residuals;
  bool unitary_effective = false;
};

DecouplingReport check_decoupling(const Operator& hamiltonian, std::span<const Operator> interactions,
                                  const UnitaryGroup& group, const Tolerances& tol = {});

struct SynthesisResult {
  std::vector<Operator> symmetrized;
  OperatorAlgebra algebra;
  BlockDecomposition decomposition;
};

/// Symmetrizes each interaction, closes the algebra and decomposes it.
SynthesisResult synthesize_ns(std::span<const Operator> interactions, const UnitaryGroup& group,
                              std::uint64_t seed, const Tolerances& tol = {});

}  // namespace nsforge

#endif  // NSFORGE_SYMMETRIZER_HPP
