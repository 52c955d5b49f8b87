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

#include "nchv/scenario.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace nchv {

LabeledProjector::LabeledProjector(std::string label, StateVector state)
    : label_(std::move(label)), state_(std::move(state)), op_(projector(state_)) {}

std::optional<std::size_t> PrePostScenario::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        if (projectors[i].label() == label) {
            return i;
        }
    }
    return std::nullopt;
}

const LabeledProjector &PrePostScenario::at(std::string_view label) const {
    auto i = index_of(label);
    if (!i) {
        throw std::out_of_range("unknown projector label '" + std::string(label) + "'");
    }
    return projectors[*i];
}

const char *to_string(Justification j) {
    switch (j) {
        case Justification::kPrediction:
            return "Prediction";
        case Justification::kRetrodiction:
            return "Retrodiction";
    }
    return "?";
}

Bit ValueAssignment::at(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) {
            return bits[i];
        }
    }
    throw std::out_of_range("unknown label '" + std::string(label) + "'");
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

const CheckResult *ValidationReport::first_failure() const {
    for (const auto &c : checks) {
        if (!c.pass) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

std::string join(const std::vector<std::string> &xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + xs[i];
    }
    return out;
}

}  // namespace

ValidationReport validate(const PrePostScenario &s, double tol) {
    ValidationReport report;
    auto add = [&](std::string name, bool pass, double deviation, std::string detail = {}) {
        report.checks.push_back({std::move(name), pass, deviation, std::move(detail)});
    };

    {
        bool ok = s.dim >= 2 && s.pre.dim() == s.dim && s.post.dim() == s.dim;
        std::string bad;
        for (const auto &p : s.projectors) {
            if (p.state().dim() != s.dim) {
                ok = false;
                bad = p.label();
            }
        }
        add("dimension", ok, ok ? 0.0 : 1.0, bad.empty() ? "" : "state '" + bad + "' has wrong dimension");
    }
    if (!report.checks.back().pass) {
        // Nothing else is meaningful with mismatched dimensions.
        return report;
    }

    {
        std::set<std::string> seen;
        std::string bad;
        for (const auto &p : s.projectors) {
            if (p.label().empty() || !seen.insert(p.label()).second) {
                bad = p.label().empty() ? "<empty>" : p.label();
            }
        }
        add("labels", bad.empty(), bad.empty() ? 0.0 : 1.0,
            bad.empty() ? "" : "empty or duplicate label '" + bad + "'");
    }

    {
        double worst = std::max(std::abs(s.pre.amplitudes().norm() - 1.0),
                                std::abs(s.post.amplitudes().norm() - 1.0));
        for (const auto &p : s.projectors) {
            worst = std::max(worst, std::abs(p.state().amplitudes().norm() - 1.0));
        }
        add("states normalized", worst < tol, worst);
    }

    {
        double overlap = std::abs(inner(s.post, s.pre));
        add("postselection possible", overlap > tol, overlap);
    }

    for (std::size_t i = 0; i < s.contexts.size(); ++i) {
        const auto &ctx = s.contexts[i];
        std::string prefix = "context[" + std::to_string(i) + "]";
        std::vector<Operator> ops;
        std::string missing;
        for (const auto &label : ctx.members) {
            if (auto idx = s.index_of(label)) {
                ops.push_back(s.projectors[*idx].op());
            } else {
                missing = label;
            }
        }
        bool resolves = missing.empty() && ctx.members.size() >= 2;
        add(prefix + " resolves", resolves, resolves ? 0.0 : 1.0,
            !missing.empty() ? "unknown label '" + missing + "'"
                             : (ctx.members.size() < 2 ? "fewer than two members" : ""));
        if (!resolves) {
            continue;
        }
        Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(s.dim), static_cast<Eigen::Index>(s.dim));
        for (const auto &op : ops) {
            sum += op.entries();
        }
        sum -= Matrix::Identity(sum.rows(), sum.cols());
        add(prefix + " resolution of identity", is_resolution_of_identity(ops, tol), spectral_norm(sum),
            "{" + join(ctx.members) + "}");
    }

    for (const auto &pair : s.exclusive_pairs) {
        std::string name = "exclusive (" + pair.first + "," + pair.second + ")";
        auto a = s.index_of(pair.first);
        auto b = s.index_of(pair.second);
        if (!a || !b) {
            add(name, false, 1.0, "unknown label '" + (a ? pair.second : pair.first) + "'");
            continue;
        }
        double dev = max_entry(s.projectors[*a].op().entries() * s.projectors[*b].op().entries());
        add(name, dev < tol, dev);
    }
    return report;
}

}  // namespace nchv
