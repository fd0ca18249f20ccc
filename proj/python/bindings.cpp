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


// Python bindings. Operators cross the boundary as complex numpy arrays;
// InputError surfaces as ValueError and DecompositionError as RuntimeError.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsforge/algebra.hpp"
#include "nsforge/cli.hpp"
#include "nsforge/collective.hpp"
#include "nsforge/lindblad.hpp"
#include "nsforge/noiseless.hpp"
#include "nsforge/stabilizer.hpp"
#include "nsforge/symmetrizer.hpp"

namespace py = pybind11;
using namespace nsforge;

namespace {

py::dict command_dict(const cli::CommandResult& r) {
  py::dict out;
  out["report"] = r.report.dump(2);
  out["exit_code"] = r.exit_code;
  out["csv"] = r.csv;
  out["text"] = r.text;
  return out;
}

cli::RunConfig run_config(std::uint64_t seed, const Tolerances& tol) { return {seed, tol}; }

}  // namespace

PYBIND11_MODULE(_nsforge, m) {
  m.doc() = "Noiseless subsystem extraction and verification";

  py::register_exception<DecompositionError>(m, "DecompositionError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def(py::init([](double rank_tol, double residual_tol, double cluster_tol, int max_retries) {
             Tolerances t{rank_tol, residual_tol, cluster_tol, max_retries};
             t.validate();
             return t;
           }),
           py::arg("rank_tol") = 1e-9, py::arg("residual_tol") = 1e-8, py::arg("cluster_tol") = 1e-7,
           py::arg("max_retries") = 8)
      .def_readwrite("rank_tol", &Tolerances::rank_tol)
      .def_readwrite("residual_tol", &Tolerances::residual_tol)
      .def_readwrite("cluster_tol", &Tolerances::cluster_tol)
      .def_readwrite("max_retries", &Tolerances::max_retries);

  // Algebra layer.
  py::class_<OperatorAlgebra>(m, "OperatorAlgebra")
      .def_readonly("dim", &OperatorAlgebra::dim)
      .def_readonly("generators", &OperatorAlgebra::generators)
      .def_readonly("basis", &OperatorAlgebra::basis)
      .def("dimension", &OperatorAlgebra::dimension);

  py::class_<Block>(m, "Block")
      .def_readonly("label", &Block::label)
      .def_readonly("n", &Block::n)
      .def_readonly("d", &Block::d)
      .def_readonly("basis_vectors", &Block::basis_vectors)
      .def("ket", &Block::ket, py::arg("lam"), py::arg("mu"))
      .def("projector", &Block::projector)
      .def("__repr__", [](const Block& b) {
        return "Block(label=" + std::to_string(b.label) + ", n=" + std::to_string(b.n) +
               ", d=" + std::to_string(b.d) + ")";
      });

  py::class_<BlockDecomposition>(m, "BlockDecomposition")
      .def_readonly("dim", &BlockDecomposition::dim)
      .def_readonly("blocks", &BlockDecomposition::blocks)
      .def_readonly("isometry", &BlockDecomposition::isometry)
      .def("block", &BlockDecomposition::block, py::return_value_policy::reference_internal);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("block_residuals", &VerificationReport::block_residuals)
      .def_readonly("off_block_residuals", &VerificationReport::off_block_residuals)
      .def_readonly("unitarity_residual", &VerificationReport::unitarity_residual)
      .def_readonly("max_relative_residual", &VerificationReport::max_relative_residual)
      .def_readonly("passed", &VerificationReport::passed);

  m.def("close_algebra", [](const std::vector<Operator>& gens, const Tolerances& tol) {
    return close_algebra(gens, tol);
  }, py::arg("generators"), py::arg("tol") = Tolerances{});
  m.def("commutant", &commutant, py::arg("algebra"), py::arg("tol") = Tolerances{}, py::arg("seed") = kDefaultSeed);
  m.def("center", &center, py::arg("algebra"), py::arg("tol") = Tolerances{});
  m.def("wedderburn_decompose", &wedderburn_decompose, py::arg("algebra"), py::arg("seed") = kDefaultSeed,
        py::arg("tol") = Tolerances{});
  m.def("verify_decomposition", &verify_decomposition, py::arg("algebra"), py::arg("decomposition"),
        py::arg("tol") = Tolerances{});

  // Noiseless subsystems.
  py::class_<NoiselessSubsystem>(m, "NoiselessSubsystem")
      .def_property_readonly("label", &NoiselessSubsystem::label)
      .def_property_readonly("noiseless_dim", &NoiselessSubsystem::noiseless_dim)
      .def_property_readonly("cofactor_dim", &NoiselessSubsystem::cofactor_dim)
      .def("encode", &NoiselessSubsystem::encode, py::arg("logical"), py::arg("mu0") = 0)
      .def("decode", py::overload_cast<const Vector&>(&NoiselessSubsystem::decode, py::const_))
      .def("decode_state", py::overload_cast<const Operator&>(&NoiselessSubsystem::decode, py::const_));
  m.def("find_noiseless_subsystems", &find_noiseless_subsystems);
  m.def("find_dfs", &find_dfs);

  // Collective noise.
  m.def("collective_generators", [](int n) {
    const auto model = collective_generators(n);
    return std::vector<Operator>(model.generators.begin(), model.generators.end());
  }, py::arg("n_qubits"));
  m.def("expected_multiplicities", [](int n) {
    std::vector<std::tuple<std::string, std::uint64_t, int>> out;
    for (const auto& row : expected_multiplicities(n)) {
      out.emplace_back(row.spin_label(), row.n, row.d);
    }
    return out;
  }, py::arg("n_qubits"), "Rows (J, n_J, d_J), ascending in J.");
  m.def("permutation_rep", &permutation_rep, py::arg("n_qubits"), py::arg("perm"));

  // Stabilizers.
  py::class_<PauliElement>(m, "PauliElement")
      .def_readonly("n_qubits", &PauliElement::n_qubits)
      .def_readonly("phase", &PauliElement::phase)
      .def("to_operator", &PauliElement::to_operator)
      .def("label", &PauliElement::label)
      .def("commutes_with", &PauliElement::commutes_with)
      .def("__mul__", [](const PauliElement& a, const PauliElement& b) { return a * b; })
      .def("__eq__", [](const PauliElement& a, const PauliElement& b) { return a == b; })
      .def("__repr__", &PauliElement::label);
  m.def("pauli", [](const std::string& label) { return pauli_from_label(label); }, py::arg("label"));
  m.def("stabilizer_decompose", [](const std::vector<std::string>& labels) {
    std::vector<PauliElement> gens;
    for (const auto& l : labels) {
      gens.push_back(pauli_from_label(l));
    }
    const int n = gens.empty() ? 0 : gens.front().n_qubits;
    const auto sd = stabilizer_decompose(StabilizerGroup::create(n, gens));
    return py::make_tuple(sd.decomposition, sd.syndromes);
  }, py::arg("labels"), "Returns (decomposition, syndromes).");

  // Symmetrization.
  m.def("symmetrize", [](const Operator& x, const std::vector<Operator>& group, const Tolerances& tol) {
    return symmetrize(x, UnitaryGroup::create(group, tol));
  }, py::arg("x"), py::arg("group"), py::arg("tol") = Tolerances{});
  m.def("generate_group", [](const std::vector<Operator>& gens, std::size_t max_order) {
    return UnitaryGroup::generate(gens, Tolerances{}, max_order).elements();
  }, py::arg("generators"), py::arg("max_order") = 1024);

  // Lindblad robustness.
  py::class_<LindbladModel>(m, "LindbladModel")
      .def(py::init([](Eigen::Index d_s, Eigen::Index d_b, std::vector<Operator> l_ops,
                       std::vector<Operator> delta_ops, Operator rho_s, Operator sigma_b) {
             LindbladModel model{d_s, d_b, std::move(l_ops), std::move(delta_ops), 0.0, std::move(rho_s),
                                 std::move(sigma_b)};
             model.validate();
             return model;
           }),
           py::arg("d_s"), py::arg("d_b"), py::arg("l_ops"), py::arg("delta_ops"), py::arg("rho_s"),
           py::arg("sigma_b"))
      .def_readonly("d_s", &LindbladModel::d_s)
      .def_readonly("d_b", &LindbladModel::d_b);
  m.def("lindblad_generator", [](const std::vector<Operator>& l_ops) { return lindblad_generator(l_ops); });
  m.def("evolve", &evolve, py::arg("rho0"), py::arg("generator"), py::arg("t"));
  m.def("fidelity", [](const LindbladModel& model, double t, double eps) {
    return fidelity(model, t, eps).value;
  }, py::arg("model"), py::arg("t"), py::arg("eps"));

  py::class_<FidelitySeries>(m, "FidelitySeries")
      .def_readonly("t", &FidelitySeries::t)
      .def_readonly("eps_grid", &FidelitySeries::eps_grid)
      .def_readonly("f_values", &FidelitySeries::f_values)
      .def_readonly("coefficients", &FidelitySeries::coefficients)
      .def_readonly("std_errors", &FidelitySeries::std_errors)
      .def_readonly("f_at_zero", &FidelitySeries::f_at_zero)
      .def_readonly("passed", &FidelitySeries::passed);
  m.def("first_order_check", [](const LindbladModel& model, double t, const std::vector<double>& grid) {
    return first_order_check(model, t, grid);
  }, py::arg("model"), py::arg("t"), py::arg("eps_grid"));

  // Command layer: each returns {report, exit_code, csv, text} with the JSON
  // report as a string.
  m.def("cmd_decompose", [](const std::string& text, std::uint64_t seed, const Tolerances& tol) {
    return command_dict(cli::cmd_decompose(text, run_config(seed, tol)));
  }, py::arg("problem"), py::arg("seed") = 0, py::arg("tol") = Tolerances{});
  m.def("cmd_collective", [](int n, std::uint64_t seed, const Tolerances& tol) {
    return command_dict(cli::cmd_collective(n, run_config(seed, tol)));
  }, py::arg("n_qubits"), py::arg("seed") = 0, py::arg("tol") = Tolerances{});
  m.def("cmd_stabilizer", [](const std::vector<std::string>& labels, std::uint64_t seed, const Tolerances& tol) {
    return command_dict(cli::cmd_stabilizer(labels, run_config(seed, tol)));
  }, py::arg("labels"), py::arg("seed") = 0, py::arg("tol") = Tolerances{});
  m.def("cmd_symmetrize", [](const std::string& text, std::uint64_t seed, const Tolerances& tol) {
    return command_dict(cli::cmd_symmetrize(text, run_config(seed, tol)));
  }, py::arg("problem"), py::arg("seed") = 0, py::arg("tol") = Tolerances{});
  m.def("cmd_robustness", [](const std::string& text, double t, std::vector<double> grid, std::uint64_t seed,
                             const Tolerances& tol) {
    if (grid.empty()) {
      grid = cli::default_eps_grid();
    }
    return command_dict(cli::cmd_robustness(text, t, grid, run_config(seed, tol)));
  }, py::arg("problem"), py::arg("t") = 1.0, py::arg("eps_grid") = std::vector<double>{}, py::arg("seed") = 0,
        py::arg("tol") = Tolerances{});
}
