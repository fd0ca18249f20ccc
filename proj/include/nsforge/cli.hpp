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

#ifndef NSFORGE_CLI_HPP
#define NSFORGE_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nsforge/lindblad.hpp"
#include "nsforge/operator_core.hpp"

namespace nsforge::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kPass = 0, kInputError = 1, kVerificationFailure = 2 };

/// A malformed problem file. `where` is a JSON pointer or "line L, column C".
class ProblemError : public InputError {
 public:
  ProblemError(std::string where, const std::string& message)
      : InputError(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct NamedOperator {
  std::string name;
  Operator matrix;
};

/// In-memory form of a schema_version "1" problem document.
struct ProblemFile {
  std::string schema_version;
  Eigen::Index dim = 0;
  std::vector<NamedOperator> generators;
  std::optional<Operator> hamiltonian;
  std::vector<Operator> group;
  std::vector<std::string> stabilizer;
  std::optional<LindbladModel> lindblad;
};

/// Parses a problem document. Matrices are row-major arrays of rows whose
/// entries are [re, im] pairs.
ProblemFile parse_problem(std::string_view text);

/// Serializes a matrix in the problem-file encoding.
nlohmann::json matrix_to_json(const Operator& m);
nlohmann::json problem_to_json(const ProblemFile& problem);

/// Hex SHA-256.
std::string digest(std::string_view bytes);

struct RunConfig {
  std::uint64_t seed = 0;
  Tolerances tol;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kPass;
  /// CSV payload (robustness series or block table).
  std::string csv;
  /// Human-readable summary.
  std::string text;
};

CommandResult cmd_decompose(std::string_view problem_text, const RunConfig& config);
CommandResult cmd_collective(int n_qubits, const RunConfig& config);
CommandResult cmd_stabilizer(const std::vector<std::string>& labels, const RunConfig& config);
CommandResult cmd_symmetrize(std::string_view problem_text, const RunConfig& config);
CommandResult cmd_robustness(std::string_view problem_text, double t, const std::vector<double>& eps_grid,
                             const RunConfig& config);

/// Default robustness grid {0, +-0.025, +-0.05, +-0.1}.
std::vector<double> default_eps_grid();

/// Shortest round-trip decimal for JSON, %.17g for CSV.
std::string format_csv_number(double value);

/// Renders a result in "json", "csv" or "text".
std::string render(const CommandResult& result, std::string_view format);

}  // namespace nsforge::cli

#endif  // NSFORGE_CLI_HPP
