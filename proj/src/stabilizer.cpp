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

#include <array>
#include <bit>

#include <Eigen/Eigenvalues>

namespace nsforge {

namespace {

using Symplectic = unsigned __int128;

Symplectic pack(const PauliElement& p) {
  return static_cast<Symplectic>(p.x_bits) | (static_cast<Symplectic>(p.z_bits) << 64);
}

/// XOR basis over GF(2), indexed by leading bit.
class Gf2Basis {
 public:
  /// Returns false when v is already in the span.
  bool insert(Symplectic v) {
    v = reduce(v);
    if (v == 0) {
      return false;
    }
    rows_[static_cast<std::size_t>(leading_bit(v))] = v;
    return true;
  }

  Symplectic reduce(Symplectic v) const {
    for (int bit = 127; bit >= 0; --bit) {
      if (((v >> bit) & 1) != 0 && rows_[static_cast<std::size_t>(bit)] != 0) {
        v ^= rows_[static_cast<std::size_t>(bit)];
      }
    }
    return v;
  }

 private:
  static int leading_bit(Symplectic v) {
    const auto high = static_cast<std::uint64_t>(v >> 64);
    if (high != 0) {
      return 127 - std::countl_zero(high);
    }
    return 63 - std::countl_zero(static_cast<std::uint64_t>(v));
  }

  std::array<Symplectic, 128> rows_{};
};

/// Phase exponent picked up by one qubit in P(x1,z1) P(x2,z2).
int single_qubit_phase(int x1, int z1, int x2, int z2) {
  if (x1 == 0 && z1 == 0) {
    return 0;
  }
  if (x1 == 1 && z1 == 1) {
    return z2 - x2;
  }
  if (x1 == 1) {
    return z2 * (2 * x2 - 1);
  }
  return x2 * (1 - 2 * z2);
}

Operator single_qubit(int x, int z) {
  if (x == 0 && z == 0) {
    return Operator::Identity(2, 2);
  }
  if (x == 1 && z == 0) {
    return pauli_x();
  }
  if (x == 0) {
    return pauli_z();
  }
  return pauli_y();
}

std::string bits_to_string(std::uint64_t bits, int n) {
  std::string out;
  for (int j = 0; j < n; ++j) {
    out.push_back(((bits >> j) & 1) != 0 ? '1' : '0');
  }
  return out;
}

}  // namespace

Operator PauliElement::to_operator() const {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw InputError("PauliElement::to_operator: qubit count out of dense range");
  }
  Operator out = Operator::Identity(1, 1);
  for (int j = 0; j < n_qubits; ++j) {
    out = tensor(out, single_qubit(static_cast<int>((x_bits >> j) & 1), static_cast<int>((z_bits >> j) & 1)));
  }
  static const std::array<Complex, 4> powers{Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  return powers[static_cast<std::size_t>(phase)] * out;
}

std::string PauliElement::label() const {
  static const std::array<const char*, 4> prefixes{"+", "+i", "-", "-i"};
  std::string out = prefixes[static_cast<std::size_t>(phase)];
  for (int j = 0; j < n_qubits; ++j) {
    const bool x = ((x_bits >> j) & 1) != 0;
    const bool z = ((z_bits >> j) & 1) != 0;
    out.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
  }
  return out;
}

std::string PauliElement::x_string() const { return bits_to_string(x_bits, n_qubits); }
std::string PauliElement::z_string() const { return bits_to_string(z_bits, n_qubits); }

bool PauliElement::commutes_with(const PauliElement& other) const {
  const int overlap = std::popcount(x_bits & other.z_bits) + std::popcount(z_bits & other.x_bits);
  return overlap % 2 == 0;
}

PauliElement PauliElement::adjoint() const {
  PauliElement out = *this;
  out.phase = (4 - phase) % 4;
  return out;
}

PauliElement operator*(const PauliElement& a, const PauliElement& b) {
  if (a.n_qubits != b.n_qubits) {
    throw InputError("Pauli product: qubit counts differ");
  }
  int phase = a.phase + b.phase;
  for (int j = 0; j < a.n_qubits; ++j) {
    phase += single_qubit_phase(static_cast<int>((a.x_bits >> j) & 1), static_cast<int>((a.z_bits >> j) & 1),
                                static_cast<int>((b.x_bits >> j) & 1), static_cast<int>((b.z_bits >> j) & 1));
  }
  return {a.n_qubits, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits, ((phase % 4) + 4) % 4};
}

PauliElement pauli_from_label(std::string_view label, int phase) {
  if (label.starts_with("-i")) {
    phase += 3;
    label.remove_prefix(2);
  } else if (label.starts_with("+i")) {
    phase += 1;
    label.remove_prefix(2);
  } else if (label.starts_with("i")) {
    phase += 1;
    label.remove_prefix(1);
  } else if (label.starts_with("-")) {
    phase += 2;
    label.remove_prefix(1);
  } else if (label.starts_with("+")) {
    label.remove_prefix(1);
  }
  if (label.empty() || label.size() > static_cast<std::size_t>(kMaxPauliQubits)) {
    throw InputError("pauli_from_label: label must have between 1 and 64 letters");
  }
  PauliElement p;
  p.n_qubits = static_cast<int>(label.size());
  p.phase = ((phase % 4) + 4) % 4;
  for (std::size_t j = 0; j < label.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    switch (label[j]) {
      case 'I':
        break;
      case 'X':
        p.x_bits |= bit;
        break;
      case 'Y':
        p.x_bits |= bit;
        p.z_bits |= bit;
        break;
      case 'Z':
        p.z_bits |= bit;
        break;
      default:
        throw InputError(std::string("pauli_from_label: bad character '") + label[j] + "'");
    }
  }
  return p;
}

StabilizerGroup StabilizerGroup::create(int n_qubits, std::vector<PauliElement> generators) {
  if (n_qubits < 1 || n_qubits > kMaxPauliQubits) {
    throw InputError("StabilizerGroup: qubit count out of range");
  }
  if (generators.empty()) {
    throw InputError("StabilizerGroup: at least one generator is required");
  }
  if (static_cast<int>(generators.size()) >= n_qubits) {
    throw InputError("StabilizerGroup: need k < N generators");
  }
  Gf2Basis span;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.n_qubits != n_qubits) {
      throw InputError("StabilizerGroup: generator " + g.label() + " has the wrong qubit count");
    }
    if (g.phase != 0) {
      throw InputError("StabilizerGroup: generator " + g.label() + " must have phase +1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!g.commutes_with(generators[j])) {
        throw InputError("StabilizerGroup: generators " + generators[j].label() + " and " + g.label() +
                         " anticommute");
      }
    }
    if (!span.insert(pack(g))) {
      throw InputError("StabilizerGroup: generator " + g.label() + " depends on the others");
    }
  }
  return StabilizerGroup(n_qubits, std::move(generators));
}

std::vector<PauliElement> StabilizerGroup::elements() const {
  std::vector<PauliElement> out;
  const std::size_t count = std::size_t{1} << generators_.size();
  for (std::size_t m = 0; m < count; ++m) {
    PauliElement p{n_qubits_, 0, 0, 0};
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (((m >> i) & 1) != 0) {
        p = p * generators_[i];
      }
    }
    out.push_back(p);
  }
  return out;
}

bool StabilizerGroup::contains_up_to_phase(const PauliElement& p) const {
  Gf2Basis span;
  for (const auto& g : generators_) {
    span.insert(pack(g));
  }
  return span.reduce(pack(p)) == 0;
}

StabilizerDecomposition stabilizer_decompose(const StabilizerGroup& group) {
  const int n = group.n_qubits();
  if (n > kMaxDenseQubits) {
    throw InputError("stabilizer_decompose: too many qubits for a dense decomposition");
  }
  const int k = group.k();
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index per_block = Eigen::Index{1} << (n - k);
  const auto ops = generator_operators(group);
  const Operator id = Operator::Identity(dim, dim);

  StabilizerDecomposition out;
  out.decomposition.dim = dim;
  out.decomposition.isometry.resize(dim, dim);
  const int count = 1 << k;
  for (int s = 0; s < count; ++s) {
    std::vector<int> syndrome;
    Operator projector = id;
    for (int i = 0; i < k; ++i) {
      const int sign = ((s >> (k - 1 - i)) & 1) != 0 ? -1 : 1;
      syndrome.push_back(sign);
      projector = projector * (0.5 * (id + static_cast<double>(sign) * ops[static_cast<std::size_t>(i)]));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (projector + projector.adjoint()));
    // Eigenvalues are 0 or 1, ascending; the range is the trailing block.
    const Eigen::MatrixXcd range = solver.eigenvectors().rightCols(per_block);
    out.decomposition.isometry.middleCols(static_cast<Eigen::Index>(s) * per_block, per_block) = range;
    out.decomposition.blocks.push_back({s, static_cast<int>(per_block), 1, range});
    out.syndromes.push_back(std::move(syndrome));
  }
  return out;
}

std::string to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::InGroup:
      return "IN_GROUP";
    case ErrorClass::Anticommutes:
      return "ANTICOMMUTES";
    case ErrorClass::Outside:
      return "OUTSIDE";
  }
  return "UNKNOWN";
}

ErrorClass classify_error_pair(const PauliElement& e_i, const PauliElement& e_j,
                               const StabilizerGroup& group) {
  if (e_i.n_qubits != group.n_qubits() || e_j.n_qubits != group.n_qubits()) {
    throw InputError("classify_error_pair: qubit count differs from the group");
  }
  const PauliElement product = e_i.adjoint() * e_j;
  for (const auto& g : group.generators()) {
    if (!product.commutes_with(g)) {
      return ErrorClass::Anticommutes;
    }
  }
  return group.contains_up_to_phase(product) ? ErrorClass::InGroup : ErrorClass::Outside;
}

std::vector<Operator> generator_operators(const StabilizerGroup& group) {
  std::vector<Operator> out;
  for (const auto& g : group.generators()) {
    out.push_back(g.to_operator());
  }
  return out;
}

}  // namespace nsforge
