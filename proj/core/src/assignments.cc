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

#include "nchv/assignments.h"

#include <algorithm>
#include <bit>
#include <thread>

#include "nchv/errors.h"
#include "nchv/prepost.h"

namespace nchv {

const char *to_string(SatStatus s) {
    return s == SatStatus::kSat ? "SAT" : "UNSAT";
}

const char *to_string(Rule r) {
    switch (r) {
        case Rule::kPrediction:
            return "Prediction";
        case Rule::kRetrodiction:
            return "Retrodiction";
        case Rule::kSumRule:
            return "SumRule";
        case Rule::kExclusivity:
            return "Exclusivity";
    }
    return "?";
}

std::string TraceStep::describe() const {
    std::string out;
    for (std::size_t i = 0; i < premises.size(); ++i) {
        out += (i ? ", " : "") + premises[i].label + "=" + std::to_string(to_int(premises[i].bit));
    }
    out += " => ";
    out += conflict ? std::string("CONFLICT") : label + "=" + std::to_string(to_int(bit));
    out += std::string(" [") + to_string(rule) + "]";
    return out;
}

namespace {

std::size_t resolve(const PrePostScenario &s, const std::string &label, const char *what) {
    auto i = s.index_of(label);
    if (!i) {
        throw InvalidValue(std::string(what) + " names unknown label '" + label + "'");
    }
    return *i;
}

Rule rule_of(Justification j) {
    return j == Justification::kPrediction ? Rule::kPrediction : Rule::kRetrodiction;
}

/// Constraint set with labels resolved to projector indices.
struct Resolved {
    std::vector<std::vector<std::size_t>> contexts;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

Resolved resolve_constraints(const PrePostScenario &s) {
    Resolved r;
    for (const auto &ctx : s.contexts) {
        std::vector<std::size_t> idx;
        for (const auto &m : ctx.members) {
            idx.push_back(resolve(s, m, "context"));
        }
        r.contexts.push_back(std::move(idx));
    }
    for (const auto &p : s.exclusive_pairs) {
        r.pairs.emplace_back(resolve(s, p.first, "exclusive pair"), resolve(s, p.second, "exclusive pair"));
    }
    return r;
}

}  // namespace

SatisfiabilityReport enumerate_assignments(const PrePostScenario &s, const std::vector<ForcedValue> &forced,
                                           unsigned threads) {
    const std::size_t n = s.projectors.size();
    if (n > kMaxExhaustiveProjectors) {
        throw TooManyProjectors("exhaustive enumeration limited to " + std::to_string(kMaxExhaustiveProjectors) +
                                " projectors, scenario has " + std::to_string(n));
    }
    Resolved r = resolve_constraints(s);

    // Projector i occupies bit n-1-i so that increasing integers are
    // lexicographically increasing bit strings in projector order.
    auto bit_of = [n](std::size_t i) { return std::uint32_t{1} << (n - 1 - i); };

    std::uint32_t forced_mask = 0;
    std::uint32_t forced_bits = 0;
    bool forced_disagree = false;
    for (const auto &f : forced) {
        std::uint32_t b = bit_of(resolve(s, f.label, "forced value"));
        if ((forced_mask & b) && ((forced_bits & b) != 0) != (f.bit == Bit::kOne)) {
            forced_disagree = true;
        }
        forced_mask |= b;
        if (f.bit == Bit::kOne) {
            forced_bits |= b;
        }
    }
    std::vector<std::uint32_t> context_masks;
    for (const auto &ctx : r.contexts) {
        std::uint32_t m = 0;
        for (auto i : ctx) {
            m |= bit_of(i);
        }
        context_masks.push_back(m);
    }
    std::vector<std::uint32_t> pair_masks;
    for (auto [a, b] : r.pairs) {
        pair_masks.push_back(bit_of(a) | bit_of(b));
    }

    auto admissible = [&](std::uint32_t m) {
        if (forced_disagree || (m & forced_mask) != forced_bits) {
            return false;
        }
        for (auto cm : context_masks) {
            if (std::popcount(m & cm) != 1) {
                return false;
            }
        }
        for (auto pm : pair_masks) {
            if ((m & pm) == pm) {
                return false;
            }
        }
        return true;
    };

    const std::uint64_t total = std::uint64_t{1} << n;
    threads = std::max(1u, std::min<unsigned>(threads, 64));
    if (total < 4096) {
        threads = 1;
    }
    std::vector<std::vector<std::uint32_t>> found(threads);
    auto scan = [&](unsigned t) {
        std::uint64_t lo = total * t / threads;
        std::uint64_t hi = total * (t + 1) / threads;
        for (std::uint64_t m = lo; m < hi; ++m) {
            if (admissible(static_cast<std::uint32_t>(m))) {
                found[t].push_back(static_cast<std::uint32_t>(m));
            }
        }
    };
    if (threads == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(scan, t);
        }
    }

    SatisfiabilityReport report;
    report.assignments_examined = total;
    std::vector<std::string> labels;
    for (const auto &p : s.projectors) {
        labels.push_back(p.label());
    }
    for (const auto &block : found) {
        for (auto m : block) {
            ValueAssignment va{labels, {}};
            for (std::size_t i = 0; i < n; ++i) {
                va.bits.push_back((m & bit_of(i)) ? Bit::kOne : Bit::kZero);
            }
            report.witnesses.push_back(std::move(va));
        }
    }
    report.status = report.witnesses.empty() ? SatStatus::kUnsat : SatStatus::kSat;
    if (report.status == SatStatus::kUnsat) {
        report.conflict = propagate(s, forced);
    }
    return report;
}

ContradictionTrace propagate(const PrePostScenario &s, const std::vector<ForcedValue> &forced) {
    Resolved r = resolve_constraints(s);
    const std::size_t n = s.projectors.size();
    std::vector<std::optional<Bit>> value(n);
    std::vector<Rule> origin(n, Rule::kPrediction);

    ContradictionTrace trace{TraceOutcome::kNoUnitCertificate, forced, {}};
    auto premise = [&](std::size_t i) { return Premise{s.projectors[i].label(), *value[i], origin[i]}; };

    for (const auto &f : forced) {
        std::size_t i = resolve(s, f.label, "forced value");
        if (value[i] && *value[i] != f.bit) {
            trace.steps.push_back({{premise(i), {f.label, f.bit, rule_of(f.justification)}},
                                   rule_of(f.justification), true, {}, Bit::kZero});
            trace.outcome = TraceOutcome::kConflict;
            return trace;
        }
        value[i] = f.bit;
        origin[i] = rule_of(f.justification);
    }

    auto is = [&](std::size_t i, Bit b) { return value[i] && *value[i] == b; };

    // Each pass records at most one step; the loop ends on a conflict or when no move applies.
    for (;;) {
        for (auto [a, b] : r.pairs) {
            if (is(a, Bit::kOne) && is(b, Bit::kOne)) {
                trace.steps.push_back({{premise(a), premise(b)}, Rule::kExclusivity, true, {}, Bit::kZero});
                trace.outcome = TraceOutcome::kConflict;
                return trace;
            }
        }
        for (const auto &ctx : r.contexts) {
            std::vector<Premise> ones;
            bool all_zero = true;
            for (auto i : ctx) {
                if (is(i, Bit::kOne)) {
                    ones.push_back(premise(i));
                }
                all_zero = all_zero && is(i, Bit::kZero);
            }
            if (ones.size() >= 2) {
                trace.steps.push_back({{ones[0], ones[1]}, Rule::kSumRule, true, {}, Bit::kZero});
                trace.outcome = TraceOutcome::kConflict;
                return trace;
            }
            if (all_zero) {
                std::vector<Premise> zeros;
                for (auto i : ctx) {
                    zeros.push_back(premise(i));
                }
                trace.steps.push_back({std::move(zeros), Rule::kSumRule, true, {}, Bit::kZero});
                trace.outcome = TraceOutcome::kConflict;
                return trace;
            }
        }

        auto derive = [&](std::size_t i, Bit b, Rule rule, std::vector<Premise> premises) {
            value[i] = b;
            origin[i] = rule;
            trace.steps.push_back({std::move(premises), rule, false, s.projectors[i].label(), b});
        };

        bool moved = false;
        for (const auto &ctx : r.contexts) {
            std::vector<std::size_t> open;
            std::vector<Premise> zeros;
            for (auto i : ctx) {
                if (!value[i]) {
                    open.push_back(i);
                } else if (*value[i] == Bit::kZero) {
                    zeros.push_back(premise(i));
                }
            }
            if (open.size() == 1 && zeros.size() + 1 == ctx.size()) {
                derive(open[0], Bit::kOne, Rule::kSumRule, std::move(zeros));
                moved = true;
                break;
            }
        }
        if (moved) {
            continue;
        }
        for (const auto &ctx : r.contexts) {
            auto one = std::find_if(ctx.begin(), ctx.end(), [&](std::size_t i) { return is(i, Bit::kOne); });
            auto open = std::find_if(ctx.begin(), ctx.end(), [&](std::size_t i) { return !value[i]; });
            if (one != ctx.end() && open != ctx.end()) {
                derive(*open, Bit::kZero, Rule::kSumRule, {premise(*one)});
                moved = true;
                break;
            }
        }
        if (moved) {
            continue;
        }
        for (auto [a, b] : r.pairs) {
            if (is(a, Bit::kOne) && !value[b]) {
                derive(b, Bit::kZero, Rule::kExclusivity, {premise(a)});
                moved = true;
                break;
            }
            if (is(b, Bit::kOne) && !value[a]) {
                derive(a, Bit::kZero, Rule::kExclusivity, {premise(b)});
                moved = true;
                break;
            }
        }
        if (!moved) {
            return trace;
        }
    }
}

ContradictionTrace contradiction_trace(const PrePostScenario &s, double tol) {
    auto forced = forced_values(s, tol);
    auto report = enumerate_assignments(s, forced);
    if (report.status == SatStatus::kSat) {
        throw NoContradiction();
    }
    return *report.conflict;
}

}  // namespace nchv
