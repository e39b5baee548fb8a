// Copyright 2026 The qmm Authors
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
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "qmm/serialize.hpp"

namespace qmm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitConfig = 2;

/// Everything a run needs. The JSON form uses the same key names; unknown
/// keys are rejected.
struct RunConfig {
  /// "demo q8", "demo phase-space", "verify prop1", "verify prop3",
  /// "verify bprops", "bound" or "divergence".
  std::string command;
  std::uint64_t seed = 0;
  /// Unset means the command's default (1000 for prop1/prop3, 200 for bprops).
  std::optional<std::size_t> trials;
  /// Keys: tol_check, estimator, pointwise.
  std::map<std::string, double> tolerances;
  std::string out;      // empty: stdout
  std::string format;   // "json" or "csv"; empty: command default
  std::size_t dim = 3;  // phase-space dimension
  std::size_t points = 201;
  /// Fixture for verify: "random", "q8" or "phase-space"; bprops also
  /// accepts "sharp" and "equal".
  std::string fixture = "random";
  std::string e1;  // observable files
  std::string e2;
  std::size_t restarts = 32;
};

/// Throws FormatError for unknown keys or ill-typed values.
RunConfig config_from_json(const Json& j);
Json to_json(const RunConfig& c);

/// Runs one configured command, writing the report to `out` (or the
/// configured file) and diagnostics to `err`. Returns the exit status.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (plus an optional --config file and the QML_SEED
/// environment variable) and executes. Precedence, lowest first: defaults,
/// config file, QML_SEED, explicit flags.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmm::cli
