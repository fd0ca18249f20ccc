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


// Command-line front end. Exit codes: 0 pass, 1 input error, 2 failed
// decomposition or verification.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nsforge/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw nsforge::InputError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\n' || c == '\t' || c == '\r') {
      if (!token.empty()) {
        out.push_back(token);
        token.clear();
      }
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) {
    out.push_back(token);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nsforge::cli;

  CLI::App app{"nsforge: noiseless subsystem extraction and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string out_path;
  std::string format = "json";
  app.add_option("--seed", config.seed, "RNG seed")->envname("NSFORGE_SEED");
  app.add_option("--tol-rank", config.tol.rank_tol, "Relative rank cutoff");
  app.add_option("--tol-residual", config.tol.residual_tol, "Verification residual tolerance");
  app.add_option("--tol-cluster", config.tol.cluster_tol, "Eigenvalue clustering tolerance");
  app.add_option("--retries", config.tol.max_retries, "Decomposition retries");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  std::string problem_path;
  auto* decompose = app.add_subcommand("decompose", "Decompose the algebra generated by a problem file");
  decompose->add_option("problem", problem_path, "Problem JSON")->required();

  int n_qubits = 0;
  auto* collective = app.add_subcommand("collective", "Collective-noise model on N qubits");
  collective->add_option("N", n_qubits, "Number of qubits")->required()->check(CLI::Range(2, 10));

  std::vector<std::string> labels;
  std::string label_file;
  auto* stabilizer = app.add_subcommand("stabilizer", "Stabilizer-group decomposition");
  stabilizer->add_option("labels", labels, "Pauli generator labels");
  stabilizer->add_option("--file", label_file, "File with generator labels");

  auto* symmetrize = app.add_subcommand("symmetrize", "Group-symmetrize interactions and decompose");
  symmetrize->add_option("problem", problem_path, "Problem JSON")->required();

  double t = 1.0;
  std::vector<double> eps_grid;
  std::string csv_path;
  auto* robustness = app.add_subcommand("robustness", "First-order fidelity check of a Lindblad model");
  robustness->add_option("problem", problem_path, "Problem JSON")->required();
  robustness->add_option("--t", t, "Evolution time");
  robustness->add_option("--eps", eps_grid, "Perturbation grid")->delimiter(',');
  robustness->add_option("--csv", csv_path, "Also write the epsilon,fidelity series here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    CommandResult result;
    if (*decompose) {
      result = cmd_decompose(read_file(problem_path), config);
    } else if (*collective) {
      result = cmd_collective(n_qubits, config);
    } else if (*stabilizer) {
      if (!label_file.empty()) {
        for (auto& l : split_labels(read_file(label_file))) {
          labels.push_back(std::move(l));
        }
      }
      result = cmd_stabilizer(labels, config);
    } else if (*symmetrize) {
      result = cmd_symmetrize(read_file(problem_path), config);
    } else {
      if (eps_grid.empty()) {
        eps_grid = default_eps_grid();
      }
      result = cmd_robustness(read_file(problem_path), t, eps_grid, config);
      if (!csv_path.empty()) {
        std::ofstream(csv_path, std::ios::binary) << result.csv;
      }
    }
    const std::string rendered = render(result, format);
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        throw nsforge::InputError("cannot write " + out_path);
      }
      out << rendered;
    }
    return result.exit_code;
  } catch (const nsforge::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nsforge::DecompositionError& e) {
    std::cerr << "decomposition failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
}
