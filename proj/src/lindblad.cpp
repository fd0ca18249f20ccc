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

#include "nsforge/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <unsupported/Eigen/MatrixFunctions>

namespace nsforge {

namespace {

constexpr double kStateTolerance = 1e-10;
constexpr double kImaginaryFlag = 1e-9;

void check_state(const Operator& rho, Eigen::Index dim, const char* name) {
  const std::string what(name);
  if (rho.rows() != dim || rho.cols() != dim) {
    throw InputError(what + " has the wrong dimension");
  }
  if ((rho - rho.adjoint()).norm() > kStateTolerance * std::max(1.0, rho.norm())) {
    throw InputError(what + " is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kStateTolerance) {
    throw InputError(what + " does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kStateTolerance) {
    throw InputError(what + " is not positive semidefinite");
  }
}

/// vec(A X B) = (B^T (x) A) vec(X).
Superoperator sandwich(const Operator& left, const Operator& right) { return tensor(right.transpose(), left); }

FidelityValue fidelity_with(const PerturbedGenerators& gens, const LindbladModel& model, double t, double eps) {
  const Operator initial = tensor(model.rho_s, model.sigma_b);
  const Operator evolved = evolve(initial, gens.at(eps), t);
  const Operator probe = tensor(model.rho_s, Operator::Identity(model.d_b, model.d_b));
  const Complex overlap = hs_inner(probe, evolved);
  return {overlap.real(), overlap.imag(), std::abs(overlap.imag()) > kImaginaryFlag};
}

}  // namespace

void LindbladModel::validate(const Tolerances& tol) const {
  if (d_s <= 0 || d_b <= 0) {
    throw InputError("LindbladModel: d_S and d_B must be positive");
  }
  if (l_ops.empty()) {
    throw InputError("LindbladModel: at least one Lindblad operator is required");
  }
  if (l_ops.size() != delta_ops.size()) {
    throw InputError("LindbladModel: L_ops and delta_ops differ in length");
  }
  const Eigen::Index n = dim();
  for (std::size_t mu = 0; mu < l_ops.size(); ++mu) {
    const auto& l = l_ops[mu];
    const auto& dl = delta_ops[mu];
    if (l.rows() != n || l.cols() != n || dl.rows() != n || dl.cols() != n) {
      throw InputError("LindbladModel: operator " + std::to_string(mu) + " is not d_S*d_B square");
    }
    const Operator bath = partial_trace(l, d_s, d_b, TraceOut::First) / static_cast<double>(d_s);
    const Operator product = tensor(Operator::Identity(d_s, d_s), bath);
    if ((l - product).norm() > tol.residual_tol * std::max(1.0, l.norm())) {
      throw InputError("LindbladModel: L_" + std::to_string(mu) + " is not of the form I_S (x) B");
    }
  }
  check_state(rho_s, d_s, "rho_S");
  check_state(sigma_b, d_b, "sigma_B");
}

Superoperator lindblad_generator(std::span<const Operator> l_ops) {
  if (l_ops.empty()) {
    throw InputError("lindblad_generator: no Lindblad operators");
  }
  const Eigen::Index dim = l_ops.front().rows();
  const Operator id = Operator::Identity(dim, dim);
  Superoperator gen = Superoperator::Zero(dim * dim, dim * dim);
  for (const auto& l : l_ops) {
    if (l.rows() != dim || l.cols() != dim) {
      throw InputError("lindblad_generator: operators must share a square dimension");
    }
    const Operator ldl = l.adjoint() * l;
    gen += sandwich(l, l.adjoint());
    gen -= 0.5 * sandwich(ldl, id);
    gen -= 0.5 * sandwich(id, ldl);
  }
  return gen;
}

PerturbedGenerators perturbed_generators(const LindbladModel& model) {
  if (model.l_ops.size() != model.delta_ops.size()) {
    throw InputError("perturbed_generators: L_ops and delta_ops differ in length");
  }
  PerturbedGenerators out;
  out.l0 = lindblad_generator(model.l_ops);
  out.l2 = lindblad_generator(model.delta_ops);
  const Eigen::Index dim = model.dim();
  const Operator id = Operator::Identity(dim, dim);
  out.l1 = Superoperator::Zero(dim * dim, dim * dim);
  for (std::size_t mu = 0; mu < model.l_ops.size(); ++mu) {
    const Operator& l = model.l_ops[mu];
    const Operator& dl = model.delta_ops[mu];
    const Operator ld = l.adjoint();
    const Operator dld = dl.adjoint();
    // [dL w, L^dag] = dL w L^dag - L^dag dL w
    out.l1 += sandwich(dl, ld) - sandwich(ld * dl, id);
    // [dL, w L^dag] = dL w L^dag - w L^dag dL
    out.l1 += sandwich(dl, ld) - sandwich(id, ld * dl);
    // [L w, dL^dag] = L w dL^dag - dL^dag L w
    out.l1 += sandwich(l, dld) - sandwich(dld * l, id);
    // [L, w dL^dag] = L w dL^dag - w dL^dag L
    out.l1 += sandwich(l, dld) - sandwich(id, dld * l);
  }
  out.l1 *= 0.5;
  return out;
}

Operator evolve(const Operator& rho0, const Superoperator& gen, double t) {
  const Eigen::Index dim = rho0.rows();
  if (rho0.cols() != dim || gen.rows() != dim * dim || gen.cols() != dim * dim) {
    throw InputError("evolve: state and generator dimensions differ");
  }
  if (!(t >= 0.0)) {
    throw InputError("evolve: time must be non-negative");
  }
  if (t == 0.0) {
    return rho0;
  }
  const Superoperator propagator = (t * gen).exp();
  return devectorize(propagator * vectorize(rho0), dim);
}

FidelityValue fidelity(const LindbladModel& model, double t, double eps) {
  model.validate();
  return fidelity_with(perturbed_generators(model), model, t, eps);
}

FidelitySeries first_order_check(const LindbladModel& model, double t, std::span<const double> eps_grid) {
  model.validate();
  const std::set<double> distinct(eps_grid.begin(), eps_grid.end());
  if (distinct.size() < 5) {
    throw InputError("first_order_check: the grid needs at least 5 distinct values");
  }
  if (distinct.count(0.0) == 0) {
    throw InputError("first_order_check: the grid must contain 0");
  }
  double eps_max = 0.0;
  for (double e : eps_grid) {
    if (!std::isfinite(e)) {
      throw InputError("first_order_check: non-finite grid value");
    }
    eps_max = std::max(eps_max, std::abs(e));
  }
  if (eps_max > 0.2) {
    throw InputError("first_order_check: max |eps| exceeds 0.2");
  }

  FidelitySeries series;
  series.t = t;
  series.eps_grid.assign(eps_grid.begin(), eps_grid.end());
  const PerturbedGenerators gens = perturbed_generators(model);
  for (double e : eps_grid) {
    const FidelityValue f = fidelity_with(gens, model, t, e);
    series.f_values.push_back(f.value);
    series.max_imaginary = std::max(series.max_imaginary, std::abs(f.imaginary_part));
    if (e == 0.0) {
      series.f_at_zero = f.value;
    }
  }

  // Fit in u = eps / eps_max for conditioning, then rescale.
  const auto m = static_cast<Eigen::Index>(eps_grid.size());
  Eigen::MatrixXd design(m, 4);
  Eigen::VectorXd values(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double u = eps_grid[static_cast<std::size_t>(i)] / eps_max;
    design(i, 0) = 1.0;
    design(i, 1) = u;
    design(i, 2) = u * u;
    design(i, 3) = u * u * u;
    values(i) = series.f_values[static_cast<std::size_t>(i)];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 4) {
    throw InputError("first_order_check: grid is degenerate for a cubic fit");
  }
  const Eigen::VectorXd coeffs = qr.solve(values);
  const double rss = (design * coeffs - values).squaredNorm();
  const double variance = rss / static_cast<double>(m - 4);
  const Eigen::MatrixXd covariance = variance * (design.transpose() * design).inverse();
  for (int k = 0; k < 4; ++k) {
    const double scale = std::pow(eps_max, k);
    series.coefficients[static_cast<std::size_t>(k)] = coeffs(k) / scale;
    series.std_errors[static_cast<std::size_t>(k)] = std::sqrt(std::max(0.0, covariance(k, k))) / scale;
  }
  const double f1 = series.coefficients[1];
  const double f2 = series.coefficients[2];
  series.passed = std::abs(series.f_at_zero - 1.0) <= kUnitFidelityTolerance &&
                  std::abs(f1) <= kFirstOrderTolerance * std::max(1.0, std::abs(f2));
  return series;
}

}  // namespace nsforge
