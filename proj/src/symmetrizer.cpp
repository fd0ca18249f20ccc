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

#include "nsforge/symmetrizer.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace nsforge {

namespace {

/// Index of the element equal to `op` up to a global phase.
std::optional<std::size_t> find_up_to_phase(const std::vector<Operator>& elements, const Operator& op,
                                            double tol) {
  const double dim = static_cast<double>(op.rows());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Complex overlap = hs_inner(elements[k], op) / dim;
    if (std::abs(std::abs(overlap) - 1.0) > tol) {
      continue;
    }
    if ((op - overlap * elements[k]).norm() <= tol * std::sqrt(dim)) {
      return k;
    }
  }
  return std::nullopt;
}

void check_unitary(const Operator& u, std::size_t index, double tol) {
  if (u.rows() != u.cols()) {
    throw InputError("UnitaryGroup: element " + std::to_string(index) + " is not square");
  }
  const Eigen::Index dim = u.rows();
  if ((u.adjoint() * u - Operator::Identity(dim, dim)).norm() > tol * std::sqrt(static_cast<double>(dim))) {
    throw InputError("UnitaryGroup: element " + std::to_string(index) + " is not unitary");
  }
}

}  // namespace

UnitaryGroup UnitaryGroup::create(std::vector<Operator> elements, const Tolerances& tol) {
  if (elements.empty()) {
    throw InputError("UnitaryGroup: empty element list");
  }
  const Eigen::Index dim = elements.front().rows();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].rows() != dim) {
      throw InputError("UnitaryGroup: elements have different dimensions");
    }
    check_unitary(elements[k], k, tol.residual_tol);
  }
  if (!find_up_to_phase(elements, Operator::Identity(dim, dim), tol.residual_tol)) {
    throw InputError("UnitaryGroup: identity element missing");
  }
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (!find_up_to_phase(elements, elements[a] * elements[b], tol.residual_tol)) {
        std::ostringstream msg;
        msg << "UnitaryGroup: not closed, product of elements " << a << " and " << b
            << " is not in the list";
        throw InputError(msg.str());
      }
    }
  }
  return UnitaryGroup(std::move(elements));
}

UnitaryGroup UnitaryGroup::generate(std::span<const Operator> generators, const Tolerances& tol,
                                    std::size_t max_order) {
  if (generators.empty()) {
    throw InputError("UnitaryGroup::generate: no generators");
  }
  const Eigen::Index dim = generators.front().rows();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    check_unitary(generators[k], k, tol.residual_tol);
  }
  std::vector<Operator> elements{Operator::Identity(dim, dim)};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : generators) {
      Operator product = g * elements[next];
      if (!find_up_to_phase(elements, product, tol.residual_tol)) {
        if (elements.size() == max_order) {
          throw InputError("UnitaryGroup::generate: order exceeds " + std::to_string(max_order));
        }
        elements.push_back(std::move(product));
      }
    }
  }
  return UnitaryGroup(std::move(elements));
}

Operator symmetrize(const Operator& x, const UnitaryGroup& group) {
  if (x.rows() != group.dim() || x.cols() != group.dim()) {
    throw InputError("symmetrize: operator and group dimensions differ");
  }
  Operator sum = Operator::Zero(x.rows(), x.cols());
  for (const auto& g : group.elements()) {
    sum += g * x * g.adjoint();
  }
  return sum / static_cast<double>(group.order());
}

DecouplingReport check_decoupling(const Operator& hamiltonian, std::span<const Operator> interactions,
                                  const UnitaryGroup& group, const Tolerances& tol) {
  DecouplingReport report;
  report.hamiltonian_residual = (symmetrize(hamiltonian, group) - hamiltonian).norm();
  report.condition_i = report.hamiltonian_residual <= tol.residual_tol * hamiltonian.norm();
  bool all_vanish = true;
  for (const auto& s : interactions) {
    const double r = symmetrize(s, group).norm();
    report.residuals.push_back(r);
    all_vanish = all_vanish && r <= tol.residual_tol * s.norm();
  }
  report.unitary_effective = report.condition_i && all_vanish;
  return report;
}

SynthesisResult synthesize_ns(std::span<const Operator> interactions, const UnitaryGroup& group,
                              std::uint64_t seed, const Tolerances& tol) {
  if (interactions.empty()) {
    throw InputError("synthesize_ns: no interaction operators");
  }
  SynthesisResult result;
  for (const auto& s : interactions) {
    result.symmetrized.push_back(symmetrize(s, group));
  }
  result.algebra = close_algebra(result.symmetrized, tol);
  result.decomposition = wedderburn_decompose(result.algebra, seed, tol);
  return result;
}

}  // namespace nsforge
