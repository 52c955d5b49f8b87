// Copyright 2026 The nchv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "nchv/hilbert.h"
#include "nchv/optimizer.h"
#include "nchv/scenario.h"
#include "report.h"

namespace nchv::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,  ///< bad arguments or a scenario that fails validation
    kExitIo = 3,     ///< unreadable or malformed file
    kExitNumeric = 4,
};

struct CommandResult {
    Report report;
    int exit_code = kExitOk;
    std::string diagnostic;  ///< for stderr; empty on success
};

struct VerifyOptions {
    std::string target;  ///< "cabello" or "hardy"
    std::optional<double> theta_a;
    std::optional<double> theta_b;
    bool optimal = false;
    std::optional<std::filesystem::path> export_path;
    /// Verify this scenario file against the target's expectations instead of building it.
    std::optional<std::filesystem::path> from;
    double tol = kTolCheck;
    SearchOptions search;
};

struct CheckOptions {
    std::filesystem::path path;
    std::size_t max_witnesses = 16;
    bool lax = false;
    double tol = kTolCheck;
    unsigned threads = 1;
};

struct OptimizeOptions {
    std::string target;  ///< "hardy" or "cabello-family"
    SearchOptions search;
};

/// Runs the full verification pipeline on the target scenario and checks
/// every result against the known values.
CommandResult cmd_verify(const VerifyOptions &options);
/// Neutral analysis of a scenario file: SAT witnesses or a contradiction trace.
CommandResult cmd_check(const CheckOptions &options);
CommandResult cmd_optimize(const OptimizeOptions &options);

/// Verification checks for an already-built scenario. `hardy_optimal` selects
/// the optimal-probability expectation for the Hardy target.
Report verify_scenario(const std::string &target, const PrePostScenario &s, bool hardy_optimal, double tol);

/// Parses argv, runs a subcommand, writes the report to `out` and
/// diagnostics to `err`, and returns the exit code. QPP_TOL in the
/// environment overrides the default scenario-data tolerance.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace nchv::cli
