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

#include "nsforge/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>

#include <openssl/evp.h>

#include "nsforge/algebra.hpp"
#include "nsforge/collective.hpp"
#include "nsforge/noiseless.hpp"
#include "nsforge/stabilizer.hpp"
#include "nsforge/symmetrizer.hpp"

namespace nsforge::cli {

using nlohmann::json;

namespace {

/// `byte` is the 1-based offset of the offending character.
std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& require(const json& node, const std::string& key, const std::string& where) {
  if (!node.contains(key)) {
    throw ProblemError(where, "missing field \"" + key + "\"");
  }
  return node.at(key);
}

double number_at(const json& node, const std::string& where) {
  if (!node.is_number()) {
    throw ProblemError(where, "expected a number");
  }
  return node.get<double>();
}

Eigen::Index positive_integer(const json& node, const std::string& where) {
  if (!node.is_number_integer() || node.get<long long>() <= 0) {
    throw ProblemError(where, "expected a positive integer");
  }
  return static_cast<Eigen::Index>(node.get<long long>());
}

Operator parse_matrix(const json& node, Eigen::Index dim, const std::string& where) {
  if (!node.is_array() || static_cast<Eigen::Index>(node.size()) != dim) {
    throw ProblemError(where, "expected an array of " + std::to_string(dim) + " rows");
  }
  Operator m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::string row_where = where + "/" + std::to_string(i);
    const json& row = node.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw ProblemError(row_where, "expected a row of " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      const std::string entry_where = row_where + "/" + std::to_string(j);
      const json& entry = row.at(static_cast<std::size_t>(j));
      if (!entry.is_array() || entry.size() != 2) {
        throw ProblemError(entry_where, "expected an [re, im] pair");
      }
      m(i, j) = Complex(number_at(entry.at(0), entry_where + "/0"), number_at(entry.at(1), entry_where + "/1"));
    }
  }
  return m;
}

std::vector<Operator> parse_matrix_list(const json& node, Eigen::Index dim, const std::string& where) {
  if (!node.is_array()) {
    throw ProblemError(where, "expected an array of matrices");
  }
  std::vector<Operator> out;
  for (std::size_t k = 0; k < node.size(); ++k) {
    out.push_back(parse_matrix(node.at(k), dim, where + "/" + std::to_string(k)));
  }
  return out;
}

LindbladModel parse_lindblad(const json& node) {
  const std::string where = "/lindblad";
  if (!node.is_object()) {
    throw ProblemError(where, "expected an object");
  }
  LindbladModel model;
  model.d_s = positive_integer(require(node, "d_S", where), where + "/d_S");
  model.d_b = positive_integer(require(node, "d_B", where), where + "/d_B");
  const Eigen::Index dim = model.d_s * model.d_b;
  model.l_ops = parse_matrix_list(require(node, "L_ops", where), dim, where + "/L_ops");
  model.delta_ops = parse_matrix_list(require(node, "delta_ops", where), dim, where + "/delta_ops");
  if (model.l_ops.size() != model.delta_ops.size()) {
    throw ProblemError(where + "/delta_ops", "must have as many entries as L_ops");
  }
  model.rho_s = parse_matrix(require(node, "rho_S", where), model.d_s, where + "/rho_S");
  model.sigma_b = parse_matrix(require(node, "sigma_B", where), model.d_b, where + "/sigma_B");
  if (node.contains("epsilon")) {
    model.epsilon = number_at(node.at("epsilon"), where + "/epsilon");
  }
  return model;
}

json tolerances_json(const Tolerances& tol) {
  return {{"rank_tol", tol.rank_tol},
          {"residual_tol", tol.residual_tol},
          {"cluster_tol", tol.cluster_tol},
          {"max_retries", tol.max_retries}};
}

json header(const std::string& command, const std::string& input_digest, const RunConfig& config) {
  json report;
  report["tool"] = "nsforge";
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  report["input_digest"] = input_digest;
  report["seed"] = config.seed;
  report["tolerances"] = tolerances_json(config.tol);
  return report;
}

json subsystems_json(const std::vector<NoiselessSubsystem>& list) {
  json out = json::array();
  for (const auto& ns : list) {
    out.push_back({{"J", ns.label()}, {"noiseless_dim", ns.noiseless_dim()}, {"cofactor_dim", ns.cofactor_dim()}});
  }
  return out;
}

std::string blocks_csv(const BlockDecomposition& dec) {
  std::string out = "J,n,d\n";
  for (const auto& b : dec.blocks) {
    out += std::to_string(b.label) + "," + std::to_string(b.n) + "," + std::to_string(b.d) + "\n";
  }
  return out;
}

std::string blocks_text(const BlockDecomposition& dec) {
  std::string out = "blocks (J, n, d):";
  for (const auto& b : dec.blocks) {
    out += " (" + std::to_string(b.label) + ", " + std::to_string(b.n) + ", " + std::to_string(b.d) + ")";
  }
  return out + "\n";
}

/// Decomposition, verification and subsystem payload shared by the
/// decompose and symmetrize commands. Returns true on a verified result.
bool decomposition_payload(const OperatorAlgebra& alg, const std::vector<std::string>& names,
                           const RunConfig& config, json& report, CommandResult& result) {
  const OperatorAlgebra comm = commutant(alg, config.tol, config.seed);
  report["algebra_dimension"] = alg.dimension();
  report["commutant_dimension"] = comm.dimension();
  std::ostringstream text;
  text << "algebra dimension: " << alg.dimension() << "\n"
       << "commutant dimension: " << comm.dimension() << "\n";

  BlockDecomposition dec;
  try {
    dec = wedderburn_decompose(alg, config.seed, config.tol);
  } catch (const DecompositionError& e) {
    report["error"] = e.what();
    report["blocks"] = json::array();
    text << "decomposition failed: " << e.what() << "\n";
    result.text += text.str();
    return false;
  }

  json blocks = json::array();
  std::size_t sum_d2 = 0;
  std::size_t sum_n2 = 0;
  Eigen::Index sum_nd = 0;
  for (const auto& b : dec.blocks) {
    blocks.push_back({{"J", b.label}, {"n", b.n}, {"d", b.d}});
    sum_d2 += static_cast<std::size_t>(b.d) * b.d;
    sum_n2 += static_cast<std::size_t>(b.n) * b.n;
    sum_nd += static_cast<Eigen::Index>(b.n) * b.d;
  }
  report["blocks"] = blocks;
  const bool consistent = sum_d2 == alg.dimension() && sum_n2 == comm.dimension() && sum_nd == alg.dim;
  report["dimension_accounting"] = {
      {"sum_d2", sum_d2}, {"sum_n2", sum_n2}, {"sum_nd", sum_nd}, {"consistent", consistent}};

  const VerificationReport check = verify_decomposition(alg, dec, config.tol);
  json per_generator = json::array();
  for (std::size_t g = 0; g < check.block_residuals.size(); ++g) {
    per_generator.push_back({{"name", g < names.size() ? names[g] : "generator_" + std::to_string(g)},
                             {"block_residuals", check.block_residuals[g]},
                             {"off_block_residual", check.off_block_residuals[g]}});
  }
  report["verification"] = {{"passed", check.passed},
                            {"max_relative_residual", check.max_relative_residual},
                            {"unitarity_residual", check.unitarity_residual},
                            {"generators", per_generator}};

  const auto ns = find_noiseless_subsystems(dec);
  const auto dfs = find_dfs(dec);
  report["noiseless_subsystems"] = subsystems_json(ns);
  report["dfs"] = subsystems_json(dfs);

  text << blocks_text(dec) << "verification: " << (check.passed ? "PASS" : "FAIL")
       << " (max relative residual " << check.max_relative_residual << ")\n"
       << "noiseless subsystems:";
  for (const auto& s : ns) {
    text << " J=" << s.label() << " dim " << s.noiseless_dim();
  }
  text << (ns.empty() ? " none\n" : "\n") << "decoherence-free subspaces:";
  for (const auto& s : dfs) {
    text << " J=" << s.label() << " dim " << s.noiseless_dim();
  }
  text << (dfs.empty() ? " none\n" : "\n");
  result.text += text.str();
  result.csv = blocks_csv(dec);
  return check.passed && consistent;
}

void finish(CommandResult& result, json report, bool passed) {
  report["status"] = passed ? "PASS" : "FAIL";
  result.exit_code = passed ? kPass : kVerificationFailure;
  result.text = "command: " + report["command"].get<std::string>() + "\nstatus: " +
                report["status"].get<std::string>() + "\n" + result.text;
  result.report = std::move(report);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ProblemError(line_column(text, e.byte), "malformed JSON");
  }
  if (!doc.is_object()) {
    throw ProblemError("/", "expected a JSON object");
  }
  ProblemFile problem;
  const json& version = require(doc, "schema_version", "/");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw ProblemError("/schema_version", std::string("expected \"") + kSchemaVersion + "\"");
  }
  problem.schema_version = version.get<std::string>();
  problem.dim = positive_integer(require(doc, "dim", "/"), "/dim");

  if (doc.contains("generators")) {
    const json& gens = doc.at("generators");
    if (!gens.is_array()) {
      throw ProblemError("/generators", "expected an array of {name, matrix} objects");
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::string where = "/generators/" + std::to_string(k);
      const json& item = gens.at(k);
      if (!item.is_object()) {
        throw ProblemError(where, "expected an object with name and matrix");
      }
      const json& name = require(item, "name", where);
      if (!name.is_string()) {
        throw ProblemError(where + "/name", "expected a string");
      }
      problem.generators.push_back(
          {name.get<std::string>(), parse_matrix(require(item, "matrix", where), problem.dim, where + "/matrix")});
    }
  }
  if (doc.contains("hamiltonian")) {
    problem.hamiltonian = parse_matrix(doc.at("hamiltonian"), problem.dim, "/hamiltonian");
  }
  if (doc.contains("group")) {
    problem.group = parse_matrix_list(doc.at("group"), problem.dim, "/group");
  }
  if (doc.contains("stabilizer")) {
    const json& stab = doc.at("stabilizer");
    if (!stab.is_array()) {
      throw ProblemError("/stabilizer", "expected an array of Pauli labels");
    }
    for (std::size_t k = 0; k < stab.size(); ++k) {
      if (!stab.at(k).is_string()) {
        throw ProblemError("/stabilizer/" + std::to_string(k), "expected a string");
      }
      problem.stabilizer.push_back(stab.at(k).get<std::string>());
    }
  }
  if (doc.contains("lindblad")) {
    problem.lindblad = parse_lindblad(doc.at("lindblad"));
  }
  return problem;
}

json matrix_to_json(const Operator& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

json problem_to_json(const ProblemFile& problem) {
  json doc;
  doc["schema_version"] = problem.schema_version.empty() ? kSchemaVersion : problem.schema_version;
  doc["dim"] = problem.dim;
  json gens = json::array();
  for (const auto& g : problem.generators) {
    gens.push_back({{"name", g.name}, {"matrix", matrix_to_json(g.matrix)}});
  }
  doc["generators"] = gens;
  if (problem.hamiltonian) {
    doc["hamiltonian"] = matrix_to_json(*problem.hamiltonian);
  }
  if (!problem.group.empty()) {
    json group = json::array();
    for (const auto& g : problem.group) {
      group.push_back(matrix_to_json(g));
    }
    doc["group"] = group;
  }
  if (!problem.stabilizer.empty()) {
    doc["stabilizer"] = problem.stabilizer;
  }
  if (problem.lindblad) {
    const auto& m = *problem.lindblad;
    json l_ops = json::array();
    json delta_ops = json::array();
    for (const auto& l : m.l_ops) {
      l_ops.push_back(matrix_to_json(l));
    }
    for (const auto& l : m.delta_ops) {
      delta_ops.push_back(matrix_to_json(l));
    }
    doc["lindblad"] = {{"d_S", m.d_s},
                       {"d_B", m.d_b},
                       {"L_ops", l_ops},
                       {"delta_ops", delta_ops},
                       {"rho_S", matrix_to_json(m.rho_s)},
                       {"sigma_B", matrix_to_json(m.sigma_b)},
                       {"epsilon", m.epsilon}};
  }
  return doc;
}

std::string digest(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("digest: SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

CommandResult cmd_decompose(std::string_view problem_text, const RunConfig& config) {
  config.tol.validate();
  const ProblemFile problem = parse_problem(problem_text);
  if (problem.generators.empty()) {
    throw ProblemError("/generators", "at least one generator is required");
  }
  std::vector<Operator> gens;
  std::vector<std::string> names;
  for (const auto& g : problem.generators) {
    gens.push_back(g.matrix);
    names.push_back(g.name);
  }
  // The system Hamiltonian joins the interaction operators as a generator.
  if (problem.hamiltonian) {
    gens.push_back(*problem.hamiltonian);
    names.emplace_back("hamiltonian");
  }
  CommandResult result;
  json report = header("decompose", digest(problem_text), config);
  const OperatorAlgebra alg = close_algebra(gens, config.tol);
  const bool passed = decomposition_payload(alg, names, config, report, result);
  finish(result, std::move(report), passed);
  return result;
}

CommandResult cmd_collective(int n_qubits, const RunConfig& config) {
  config.tol.validate();
  const CollectiveModel model = collective_generators(n_qubits);
  const SectorTable expected = expected_multiplicities(n_qubits);
  CommandResult result;
  json report = header("collective", digest("collective:" + std::to_string(n_qubits)), config);
  report["n_qubits"] = n_qubits;

  json expected_json = json::array();
  for (const auto& row : expected) {
    expected_json.push_back({{"J", row.spin_label()}, {"n", row.n}, {"d", row.d}});
  }
  report["expected"] = expected_json;

  const std::vector<Operator> gens(model.generators.begin(), model.generators.end());
  const OperatorAlgebra alg = close_algebra(gens, config.tol);
  bool passed = decomposition_payload(alg, {"Sx", "Sy", "Sz"}, config, report, result);

  if (passed) {
    // Blocks are matched to spins through d = 2J + 1.
    std::map<int, std::uint64_t> computed;
    json table = json::array();
    for (const auto& b : report["blocks"]) {
      const int d = b["d"].get<int>();
      computed[d - 1] = b["n"].get<std::uint64_t>();
      table.push_back({{"J", SectorRow{d - 1, 0, d}.spin_label()}, {"n", b["n"]}, {"d", d}});
    }
    std::map<int, std::uint64_t> wanted;
    for (const auto& row : expected) {
      wanted[row.two_j] = row.n;
    }
    const bool match = computed == wanted && computed.size() == report["blocks"].size();
    report["table"] = table;
    report["multiplicity_check"] = match ? "PASS" : "FAIL";
    result.text += std::string("multiplicity check against closed form: ") + (match ? "PASS" : "FAIL") + "\n";
    passed = match;
  }
  finish(result, std::move(report), passed);
  return result;
}

CommandResult cmd_stabilizer(const std::vector<std::string>& labels, const RunConfig& config) {
  config.tol.validate();
  if (labels.empty()) {
    throw InputError("stabilizer: no generator labels given");
  }
  std::vector<PauliElement> gens;
  std::string joined;
  for (const auto& l : labels) {
    gens.push_back(pauli_from_label(l));
    joined += l + ",";
  }
  const int n = gens.front().n_qubits;
  const StabilizerGroup group = StabilizerGroup::create(n, gens);
  const StabilizerDecomposition sd = stabilizer_decompose(group);

  CommandResult result;
  json report = header("stabilizer", digest("stabilizer:" + joined), config);
  report["n_qubits"] = n;
  report["k"] = group.k();
  json blocks = json::array();
  std::ostringstream text;
  text << "blocks (syndrome, n, d):";
  for (std::size_t j = 0; j < sd.decomposition.blocks.size(); ++j) {
    const auto& b = sd.decomposition.blocks[j];
    blocks.push_back({{"J", b.label}, {"n", b.n}, {"d", b.d}, {"syndrome", sd.syndromes[j]}});
    text << " (";
    for (int s : sd.syndromes[j]) {
      text << (s > 0 ? '+' : '-');
    }
    text << ", " << b.n << ", " << b.d << ")";
  }
  text << "\n";
  report["blocks"] = blocks;

  // Cross-check against the generic decomposition of the abelian algebra.
  const auto ops = generator_operators(group);
  const OperatorAlgebra alg = close_algebra(ops, config.tol);
  const VerificationReport own = verify_decomposition(alg, sd.decomposition, config.tol);
  bool agrees = false;
  std::string failure;
  try {
    const BlockDecomposition generic = wedderburn_decompose(alg, config.seed, config.tol);
    std::vector<std::pair<int, int>> a;
    std::vector<std::pair<int, int>> b;
    for (const auto& blk : generic.blocks) {
      a.emplace_back(blk.n, blk.d);
    }
    for (const auto& blk : sd.decomposition.blocks) {
      b.emplace_back(blk.n, blk.d);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    agrees = a == b;
  } catch (const DecompositionError& e) {
    failure = e.what();
  }
  report["verification"] = {{"passed", own.passed},
                            {"max_relative_residual", own.max_relative_residual},
                            {"unitarity_residual", own.unitarity_residual}};
  report["generic_decomposition_agrees"] = agrees;
  if (!failure.empty()) {
    report["error"] = failure;
  }

  json errors = json::array();
  const PauliElement identity{n, 0, 0, 0};
  for (int q = 0; q < n; ++q) {
    for (char letter : std::string("XYZ")) {
      std::string label(static_cast<std::size_t>(n), 'I');
      label[static_cast<std::size_t>(q)] = letter;
      const PauliElement e = pauli_from_label(label);
      errors.push_back({{"error", label}, {"class", to_string(classify_error_pair(identity, e, group))}});
    }
  }
  report["single_qubit_errors"] = errors;

  const auto ns = find_noiseless_subsystems(sd.decomposition);
  report["noiseless_subsystems"] = subsystems_json(ns);
  report["dfs"] = subsystems_json(find_dfs(sd.decomposition));
  text << "verification: " << (own.passed ? "PASS" : "FAIL") << "\n"
       << "generic decomposition agrees: " << (agrees ? "yes" : "no") << "\n";
  result.text = text.str();
  result.csv = blocks_csv(sd.decomposition);
  finish(result, std::move(report), own.passed && agrees);
  return result;
}

CommandResult cmd_symmetrize(std::string_view problem_text, const RunConfig& config) {
  config.tol.validate();
  const ProblemFile problem = parse_problem(problem_text);
  if (problem.generators.empty()) {
    throw ProblemError("/generators", "at least one interaction operator is required");
  }
  if (problem.group.empty()) {
    throw ProblemError("/group", "a list of group elements is required");
  }
  const UnitaryGroup group = UnitaryGroup::create(problem.group, config.tol);
  std::vector<Operator> interactions;
  std::vector<std::string> names;
  for (const auto& g : problem.generators) {
    interactions.push_back(g.matrix);
    names.push_back(g.name);
  }
  const Operator hamiltonian =
      problem.hamiltonian ? *problem.hamiltonian : Operator::Identity(problem.dim, problem.dim);
  const DecouplingReport decoupling = check_decoupling(hamiltonian, interactions, group, config.tol);

  CommandResult result;
  json report = header("symmetrize", digest(problem_text), config);
  report["group_order"] = group.order();
  json residuals = json::array();
  for (std::size_t k = 0; k < decoupling.residuals.size(); ++k) {
    residuals.push_back({{"name", names[k]}, {"residual", decoupling.residuals[k]}});
  }
  report["decoupling"] = {{"condition_i", decoupling.condition_i},
                          {"hamiltonian_residual", decoupling.hamiltonian_residual},
                          {"residuals", residuals},
                          {"unitary_effective", decoupling.unitary_effective}};
  std::ostringstream text;
  text << "group order: " << group.order() << "\n"
       << "H_S commutes with the group: " << (decoupling.condition_i ? "yes" : "no") << "\n";
  for (std::size_t k = 0; k < names.size(); ++k) {
    text << "residual " << names[k] << ": " << decoupling.residuals[k] << "\n";
  }
  text << "unitary effective dynamics: " << (decoupling.unitary_effective ? "yes" : "no") << "\n";
  result.text = text.str();

  std::vector<Operator> symmetrized;
  for (const auto& s : interactions) {
    symmetrized.push_back(symmetrize(s, group));
  }
  const OperatorAlgebra alg = close_algebra(symmetrized, config.tol);
  const bool passed = decomposition_payload(alg, names, config, report, result);
  finish(result, std::move(report), passed);
  return result;
}

CommandResult cmd_robustness(std::string_view problem_text, double t, const std::vector<double>& eps_grid,
                             const RunConfig& config) {
  config.tol.validate();
  const ProblemFile problem = parse_problem(problem_text);
  if (!problem.lindblad) {
    throw ProblemError("/lindblad", "section is required for robustness");
  }
  if (!(t >= 0.0)) {
    throw InputError("robustness: t must be non-negative");
  }
  const FidelitySeries series = first_order_check(*problem.lindblad, t, eps_grid);

  CommandResult result;
  json report = header("robustness", digest(problem_text), config);
  report["t"] = t;
  report["series"] = {{"epsilon", series.eps_grid}, {"fidelity", series.f_values}};
  report["fit"] = {{"f0", series.coefficients[0]},
                   {"f1", series.coefficients[1]},
                   {"f2", series.coefficients[2]},
                   {"f3", series.coefficients[3]},
                   {"std_errors", series.std_errors}};
  report["f_at_zero"] = series.f_at_zero;
  report["max_imaginary"] = series.max_imaginary;
  report["first_order_bound"] = kFirstOrderTolerance * std::max(1.0, std::abs(series.coefficients[2]));

  result.csv = "epsilon,fidelity\n";
  for (std::size_t k = 0; k < series.eps_grid.size(); ++k) {
    result.csv += format_csv_number(series.eps_grid[k]) + "," + format_csv_number(series.f_values[k]) + "\n";
  }
  std::ostringstream text;
  text.precision(17);
  text << "t: " << t << "\n"
       << "F(0): " << series.f_at_zero << "\n"
       << "f1: " << series.coefficients[1] << "\n"
       << "f2: " << series.coefficients[2] << "\n";
  result.text = text.str();
  finish(result, std::move(report), series.passed);
  return result;
}

std::vector<double> default_eps_grid() { return {0.0, 0.025, -0.025, 0.05, -0.05, 0.1, -0.1}; }

std::string format_csv_number(double value) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return buf.data();
}

std::string render(const CommandResult& result, std::string_view format) {
  if (format == "json") {
    return result.report.dump(2) + "\n";
  }
  if (format == "csv") {
    return result.csv;
  }
  if (format == "text") {
    return result.text;
  }
  throw InputError("unknown output format \"" + std::string(format) + "\"");
}

}  // namespace nsforge::cli
