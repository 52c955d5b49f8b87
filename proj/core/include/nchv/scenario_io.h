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

/**
 * @file
 * Scenario exchange format. A scenario file is a UTF-8 JSON object:
 *
 *     {
 *       "dim": 4,
 *       "pre":  [[re, im], ...],
 *       "post": [[re, im], ...],
 *       "projectors": [{"label": "alpha", "state": [[re, im], ...]}, ...],
 *       "contexts": [["alpha", "beta+", ...], ...],
 *       "exclusive_pairs": [["delta+", "delta-"], ...],
 *       "metadata": {"name": "...", ...}
 *     }
 *
 * Numbers use the shortest decimal form that round-trips to the same double.
 * Key order is irrelevant on input and sorted on output. Projectors are stored
 * by generating state; the matrices are rebuilt on load.
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nchv/scenario.h"

namespace nchv {

struct LoadOptions {
    /// Accept (and ignore) unknown fields instead of rejecting them.
    bool lax = false;
    /// Norm tolerance applied to every state in the file.
    double tol = kTolCheck;
};

/// Serializes `s`; the output ends in a newline.
std::string save(const PrePostScenario &s);

/// Throws ParseError naming the offending location on malformed input.
PrePostScenario load(std::string_view text, const LoadOptions &options = {});

void save_file(const PrePostScenario &s, const std::filesystem::path &path);
/// Throws std::runtime_error when the file cannot be read, ParseError on bad content.
PrePostScenario load_file(const std::filesystem::path &path, const LoadOptions &options = {});

}  // namespace nchv
