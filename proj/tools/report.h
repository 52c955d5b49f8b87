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

#include <string>
#include <string_view>
#include <vector>

namespace nchv::cli {

inline constexpr const char *kArtifactVersion = "0.1.0";

struct ReportCheck {
    std::string name;
    std::string expected;
    std::string actual;
    double deviation = 0.0;
    bool pass = true;
    bool operator==(const ReportCheck &) const = default;
};

struct ReportMetric {
    std::string name;
    double value;
    bool operator==(const ReportMetric &) const = default;
};

/// Outcome of one CLI command. Text and JSON renderings both derive from it.
struct Report {
    std::string artifact_version = kArtifactVersion;
    std::string command;
    std::vector<ReportCheck> checks;
    std::vector<ReportMetric> metrics;
    std::vector<std::string> notes;

    /// Conjunction of all checks.
    bool overall() const;
    bool operator==(const Report &) const = default;
};

/// Shortest decimal string that parses back to `x`.
std::string format_double(double x);

std::string render_json(const Report &r);
std::string render_text(const Report &r);
/// Inverse of render_json; throws nchv::ParseError.
Report parse_report_json(std::string_view text);

}  // namespace nchv::cli
