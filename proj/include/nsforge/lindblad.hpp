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

#ifndef NSFORGE_LINDBLAD_HPP
#define NSFORGE_LINDBLAD_HPP

#include <array>
#include <span>
#include <vector>

#include "nsforge/operator_core.hpp"

namespace nsforge {

/// System (x) bath model with bath-only Lindblad operators I_S (x) B_mu and
/// perturbations delta L_mu, typically of the form X_mu (x) A_mu.
struct LindbladModel {
  Eigen::Index d_s = 0;
  Eigen::Index d_b = 0;
  std::vector<Operator> l_ops;
  std::vector<Operator> delta_ops;
  double epsilon = 0.0;
  Operator rho_s;
  Operator sigma_b;

  Eigen::Index dim() const { return d_s * d_b; }

  /// Throws InputError when shapes, the bath-only form of l_ops, or the
  /// density matrices are invalid.
  void validate(const Tolerances& tol = {}) const;
};

/// Vectorized L(rho) = sum_mu (L rho L^dag - {L^dag L, rho} / 2). No
/// Hamiltonian term.
Superoperator lindblad_generator(std::span<const Operator> l_ops);

/// L(L + eps dL) = l0 + eps l1 + eps^2 l2.
struct PerturbedGenerators {
  Superoperator l0;
  Superoperator l1;
  Superoperator l2;

  Superoperator at(double eps) const { return l0 + eps * l1 + (eps * eps) * l2; }
};

/// l1 is assembled from the commutator form
/// (1/2) sum ([dL w, L^dag] + [dL, w L^dag] + [L w, dL^dag] + [L, w dL^dag]).
PerturbedGenerators perturbed_generators(const LindbladModel& model);

/// exp(t gen) applied to rho0 by dense scaling-and-squaring.
Operator evolve(const Operator& rho0, const Superoperator& gen, double t);

struct FidelityValue {
  double value = 0.0;
  double imaginary_part = 0.0;
  /// |imaginary_part| > 1e-9.
  bool imaginary_flag = false;
};

/// tr[(rho (x) I_B) exp(t L_eps)(rho (x) sigma)].
FidelityValue fidelity(const LindbladModel& model, double t, double eps);

inline constexpr double kFirstOrderTolerance = 1e-6;
inline constexpr double kUnitFidelityTolerance = 1e-8;

struct FidelitySeries {
  double t = 0.0;
  std::vector<double> eps_grid;
  std::vector<double> f_values;
  /// Least-squares cubic f0 + f1 eps + f2 eps^2 + f3 eps^3.
  std::array<double, 4> coefficients{};
  std::array<double, 4> std_errors{};
  /// Measured F(0), which is f0 exactly.
  double f_at_zero = 0.0;
  double max_imaginary = 0.0;
  /// |F(0) - 1| <= 1e-8 and |f1| <= 1e-6 max(1, |f2|).
  bool passed = false;
};

/// Evaluates F over the grid and fits the cubic. The grid needs at least 5
/// distinct values, must contain 0 and must satisfy max |eps| <= 0.2.
FidelitySeries first_order_check(const LindbladModel& model, double t, std::span<const double> eps_grid);

}  // namespace nsforge

#endif  // NSFORGE_LINDBLAD_HPP
