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

#ifndef NSFORGE_STABILIZER_HPP
#define NSFORGE_STABILIZER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsforge/algebra.hpp"

namespace nsforge {

inline constexpr int kMaxPauliQubits = 64;
inline constexpr int kMaxDenseQubits = 12;

/// i^phase * P_1 (x) ... (x) P_N in symplectic form. Bit j of x_bits/z_bits
/// belongs to qubit j+1, the leftmost label character; (x,z) = (1,1) is Y.
struct PauliElement {
  int n_qubits = 0;
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;
  int phase = 0;  // exponent of i, in [0, 4)

  /// Dense matrix; throws InputError above kMaxDenseQubits.
  Operator to_operator() const;
  /// Sign prefix ("+", "+i", "-", "-i") followed by the letters.
  std::string label() const;
  /// Bits of x or z in qubit order, e.g. "110".
  std::string x_string() const;
  std::string z_string() const;

  bool commutes_with(const PauliElement& other) const;
  bool is_identity_up_to_phase() const { return x_bits == 0 && z_bits == 0; }
  PauliElement adjoint() const;

  friend PauliElement operator*(const PauliElement& a, const PauliElement& b);
  friend bool operator==(const PauliElement& a, const PauliElement& b) = default;
};

/// Parses a label over {I, X, Y, Z}. An optional sign prefix ("+", "-", "i",
/// "+i", "-i") multiplies `phase`.
PauliElement pauli_from_label(std::string_view label, int phase = 0);

/// k independent, pairwise commuting Pauli generators with phase +1 and k < N.
class StabilizerGroup {
 public:
  /// Throws InputError when the generators do not form such a group.
  static StabilizerGroup create(int n_qubits, std::vector<PauliElement> generators);

  int n_qubits() const { return n_qubits_; }
  int k() const { return static_cast<int>(generators_.size()); }
  const std::vector<PauliElement>& generators() const { return generators_; }

  /// All 2^k elements; element m is the product of generators whose bit is set in m.
  std::vector<PauliElement> elements() const;
  /// Whether p's Pauli pattern is a product of generators.
  bool contains_up_to_phase(const PauliElement& p) const;

 private:
  StabilizerGroup(int n_qubits, std::vector<PauliElement> generators)
      : n_qubits_(n_qubits), generators_(std::move(generators)) {}

  int n_qubits_;
  std::vector<PauliElement> generators_;
};

/// Block decomposition into joint eigenspaces. syndromes[J][i] is the
/// eigenvalue (+1 or -1) of generator i on block J.
struct StabilizerDecomposition {
  BlockDecomposition decomposition;
  std::vector<std::vector<int>> syndromes;
};

/// 2^k blocks with n = 2^(N-k), d = 1, ordered lexicographically over the
/// syndromes with +1 before -1.
StabilizerDecomposition stabilizer_decompose(const StabilizerGroup& group);

enum class ErrorClass { InGroup, Anticommutes, Outside };

std::string to_string(ErrorClass c);

/// Classifies e_i^dagger e_j: InGroup when it is a group element up to an
/// overall phase, Anticommutes when it anticommutes with some generator, and
/// Outside when it commutes with every generator without being in the group.
ErrorClass classify_error_pair(const PauliElement& e_i, const PauliElement& e_j,
                               const StabilizerGroup& group);

/// Operators of the generators, for building the abelian algebra they generate.
std::vector<Operator> generator_operators(const StabilizerGroup& group);

}  // namespace nsforge

#endif  // NSFORGE_STABILIZER_HPP
