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

#include "report.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "nchv/errors.h"

namespace nchv::cli {

using nlohmann::ordered_json;

bool Report::overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck &c) { return c.pass; });
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

std::string render_json(const Report &r) {
    ordered_json j;
    j["artifact_version"] = r.artifact_version;
    j["command"] = r.command;
    j["checks"] = ordered_json::array();
    for (const auto &c : r.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"deviation", c.deviation},
                               {"pass", c.pass}});
    }
    j["metrics"] = ordered_json::array();
    for (const auto &m : r.metrics) {
        j["metrics"].push_back({{"name", m.name}, {"value", m.value}});
    }
    j["notes"] = r.notes;
    j["overall"] = r.overall() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

Report parse_report_json(std::string_view text) {
    try {
        auto j = ordered_json::parse(text.begin(), text.end());
        Report r;
        r.artifact_version = j.at("artifact_version").get<std::string>();
        r.command = j.at("command").get<std::string>();
        for (const auto &c : j.at("checks")) {
            r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                                c.at("actual").get<std::string>(), c.at("deviation").get<double>(),
                                c.at("pass").get<bool>()});
        }
        for (const auto &m : j.at("metrics")) {
            r.metrics.push_back({m.at("name").get<std::string>(), m.at("value").get<double>()});
        }
        r.notes = j.at("notes").get<std::vector<std::string>>();
        if (j.at("overall").get<std::string>() != (r.overall() ? "pass" : "fail")) {
            throw ParseError("report 'overall' disagrees with its checks");
        }
        return r;
    } catch (const ordered_json::exception &e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string render_text(const Report &r) {
    // Values wider than this go on continuation lines instead of stretching the table.
    constexpr std::size_t kColumnLimit = 32;
    auto fits = [&](const ReportCheck &c) {
        return c.expected.size() <= kColumnLimit && c.actual.size() <= kColumnLimit;
    };
    std::size_t name_w = 5, exp_w = 8, act_w = 6;
    for (const auto &c : r.checks) {
        name_w = std::max(name_w, c.name.size());
        if (fits(c)) {
            exp_w = std::max(exp_w, c.expected.size());
            act_w = std::max(act_w, c.actual.size());
        }
    }
    std::ostringstream out;
    auto pad = [](const std::string &s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
    out << r.command << "  (nchv " << r.artifact_version << ")\n";
    if (!r.checks.empty()) {
        out << "  " << pad("check", name_w) << "        " << pad("expected", exp_w) << "  " << pad("actual", act_w)
            << "  deviation\n";
        for (const auto &c : r.checks) {
            out << "  " << pad(c.name, name_w) << "  " << (c.pass ? "PASS" : "FAIL") << "  ";
            if (fits(c)) {
                out << pad(c.expected, exp_w) << "  " << pad(c.actual, act_w) << "  " << format_double(c.deviation)
                    << "\n";
            } else {
                out << pad("", exp_w) << "  " << pad("", act_w) << "  " << format_double(c.deviation) << "\n"
                    << "      expected: " << c.expected << "\n"
                    << "      actual:   " << c.actual << "\n";
            }
        }
    }
    for (const auto &m : r.metrics) {
        out << "  " << m.name << " = " << format_double(m.value) << "\n";
    }
    for (const auto &n : r.notes) {
        out << "  " << n << "\n";
    }
    out << "overall: " << (r.overall() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace nchv::cli
