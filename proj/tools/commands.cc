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

#include "commands.h"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "nchv/assignments.h"
#include "nchv/constructions.h"
#include "nchv/errors.h"
#include "nchv/prepost.h"
#include "nchv/scenario_io.h"

namespace nchv::cli {

namespace {

const double kHardyMaximum = std::pow((std::sqrt(5.0) - 1.0) / 2.0, 5);
constexpr double kOneNinth = 1.0 / 9.0;

struct Labels {
    std::string alpha, beta_p, beta_m, gamma_p, gamma_m, delta_p, delta_m;
};

Labels labels_for(const std::string &target) {
    if (target == "hardy") {
        return {"alpha_hat",  "beta_hat+",  "beta_hat-", "gamma_hat+",
                "gamma_hat-", "delta_hat+", "delta_hat-"};
    }
    return {"alpha", "beta+", "beta-", "gamma+", "gamma-", "delta+", "delta-"};
}

ReportCheck numeric_check(std::string name, double expected, double actual, double tol) {
    double dev = std::abs(actual - expected);
    return {std::move(name), format_double(expected), format_double(actual), dev, dev < tol};
}

std::string describe_forced(const std::vector<ForcedValue> &forced) {
    std::string out;
    for (const auto &f : forced) {
        out += (out.empty() ? "" : ", ") + f.label + "=" + std::to_string(to_int(f.bit)) + " " +
               (f.justification == Justification::kPrediction ? "P" : "R");
    }
    return out;
}

std::string describe_steps(const std::vector<TraceStep> &steps) {
    std::string out;
    for (const auto &s : steps) {
        out += (out.empty() ? "" : " | ") + s.describe();
    }
    return out;
}

void add_trace_notes(Report &r, const ContradictionTrace &trace) {
    for (const auto &f : trace.given) {
        r.notes.push_back("given " + f.label + "=" + std::to_string(to_int(f.bit)) + " [" +
                          to_string(f.justification) + "]");
    }
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        r.notes.push_back("step " + std::to_string(i + 1) + ": " + trace.steps[i].describe());
    }
    if (trace.outcome == TraceOutcome::kNoUnitCertificate) {
        r.notes.push_back("UNSAT without unit-propagation certificate");
    }
}

std::string bits_string(const ValueAssignment &va) {
    std::string out;
    for (std::size_t i = 0; i < va.labels.size(); ++i) {
        out += (i ? " " : "") + va.labels[i] + "=" + std::to_string(to_int(va.bits[i]));
    }
    return out;
}

CommandResult failure(Report report, int code, std::string message) {
    return CommandResult{std::move(report), code, std::move(message)};
}

void add_validation_checks(Report &r, const ValidationReport &v) {
    for (const auto &c : v.checks) {
        if (!c.pass) {
            r.checks.push_back({"validate: " + c.name, "pass", "fail" + (c.detail.empty() ? "" : " (" + c.detail + ")"),
                                c.deviation, false});
        }
    }
}

}  // namespace

Report verify_scenario(const std::string &target, const PrePostScenario &s, bool hardy_optimal, double tol) {
    const bool hardy = target == "hardy";
    const Labels L = labels_for(target);
    // Constructed data is exact to rounding; Hardy contexts are held to the scenario-data tolerance.
    const double structure_tol = hardy ? kTolCheck : kTolNorm;

    Report r;
    r.command = "verify " + target;

    ValidationReport v = validate(s, tol);
    r.checks.push_back({"validation", "pass", v.ok() ? "pass" : "fail", 0.0, v.ok()});
    add_validation_checks(r, v);
    if (!v.ok()) {
        return r;
    }

    for (std::size_t i = 0; i < s.contexts.size(); ++i) {
        std::vector<Operator> ops;
        for (const auto &m : s.contexts[i].members) {
            ops.push_back(s.at(m).op());
        }
        double dev = identity_deviation(ops);
        for (std::size_t a = 0; a < ops.size(); ++a) {
            for (std::size_t b = a + 1; b < ops.size(); ++b) {
                dev = std::max(dev, max_entry(ops[a].entries() * ops[b].entries()));
            }
        }
        r.checks.push_back({"context[" + std::to_string(i) + "] resolution of identity", "0", format_double(dev), dev,
                            is_resolution_of_identity(ops, structure_tol)});
    }
    {
        double overlap = std::abs(inner(s.at(L.delta_p).state(), s.at(L.delta_m).state()));
        r.checks.push_back(numeric_check("|<" + L.delta_p + "|" + L.delta_m + ">|", 0.0, overlap, structure_tol));
    }

    double prob = selection_probability(s);
    r.metrics.push_back({"selection_probability", prob});
    if (!hardy) {
        r.checks.push_back(numeric_check("selection probability", kOneNinth, prob, 1e-12));
    } else {
        if (hardy_optimal) {
            r.checks.push_back(numeric_check("selection probability", kHardyMaximum, prob, 1e-6));
        }
        r.checks.push_back({"selection probability < 1/9", "< " + format_double(kOneNinth), format_double(prob),
                            std::max(0.0, prob - kOneNinth), prob < kOneNinth});
    }

    std::vector<ForcedValue> forced;
    try {
        forced = forced_values(s, tol);
    } catch (const SelectionInconsistency &e) {
        r.checks.push_back({"forced values", "consistent", e.what(), 1.0, false});
        return r;
    }
    std::vector<ForcedValue> expected_forced{
        {L.alpha, Bit::kZero, Justification::kPrediction},     {L.beta_p, Bit::kZero, Justification::kPrediction},
        {L.beta_m, Bit::kZero, Justification::kPrediction},    {L.gamma_p, Bit::kZero, Justification::kRetrodiction},
        {L.gamma_m, Bit::kZero, Justification::kRetrodiction},
    };
    std::sort(expected_forced.begin(), expected_forced.end(),
              [](const ForcedValue &a, const ForcedValue &b) { return a.label < b.label; });
    r.checks.push_back({"forced values", describe_forced(expected_forced), describe_forced(forced),
                        forced == expected_forced ? 0.0 : 1.0, forced == expected_forced});

    SatisfiabilityReport sat = enumerate_assignments(s, forced);
    std::string expected_sat = "UNSAT/" + std::to_string(std::uint64_t{1} << s.projectors.size());
    std::string actual_sat = std::string(to_string(sat.status)) + "/" + std::to_string(sat.assignments_examined);
    r.checks.push_back(
        {"enumeration", expected_sat, actual_sat, expected_sat == actual_sat ? 0.0 : 1.0, expected_sat == actual_sat});
    r.metrics.push_back({"assignments_examined", static_cast<double>(sat.assignments_examined)});

    std::string expected_trace = describe_steps({
        {{{L.alpha, Bit::kZero, Rule::kPrediction},
          {L.beta_p, Bit::kZero, Rule::kPrediction},
          {L.gamma_p, Bit::kZero, Rule::kRetrodiction}},
         Rule::kSumRule,
         false,
         L.delta_p,
         Bit::kOne},
        {{{L.alpha, Bit::kZero, Rule::kPrediction},
          {L.beta_m, Bit::kZero, Rule::kPrediction},
          {L.gamma_m, Bit::kZero, Rule::kRetrodiction}},
         Rule::kSumRule,
         false,
         L.delta_m,
         Bit::kOne},
        {{{L.delta_p, Bit::kOne, Rule::kSumRule}, {L.delta_m, Bit::kOne, Rule::kSumRule}},
         Rule::kExclusivity,
         true,
         {},
         Bit::kZero},
    });
    if (sat.conflict) {
        const auto &trace = *sat.conflict;
        std::string actual_trace = describe_steps(trace.steps);
        bool ok = trace.outcome == TraceOutcome::kConflict && actual_trace == expected_trace;
        r.checks.push_back({"contradiction trace", expected_trace, actual_trace, ok ? 0.0 : 1.0, ok});
        add_trace_notes(r, trace);
    } else {
        r.checks.push_back({"contradiction trace", expected_trace, "no contradiction exists", 1.0, false});
    }

    for (const auto &[label, expect] : std::vector<std::pair<std::string, double>>{{L.alpha, 0.0},
                                                                                   {L.beta_p, 0.0},
                                                                                   {L.beta_m, 0.0},
                                                                                   {L.gamma_p, 0.0},
                                                                                   {L.gamma_m, 0.0},
                                                                                   {L.delta_p, 1.0},
                                                                                   {L.delta_m, 1.0}}) {
        try {
            r.checks.push_back(numeric_check("ABL " + label, expect, abl_probability(s, label, tol), structure_tol));
        } catch (const UndefinedAbl &e) {
            r.checks.push_back({"ABL " + label, format_double(expect), "undefined", 1.0, false});
        }
    }
    return r;
}

CommandResult cmd_verify(const VerifyOptions &o) {
    Report empty;
    empty.command = "verify " + o.target;
    if (o.target != "cabello" && o.target != "hardy") {
        return failure(empty, kExitUsage, "unknown verify target '" + o.target + "' (expected cabello or hardy)");
    }

    std::optional<PrePostScenario> scenario;
    bool hardy_optimal = false;
    try {
        if (o.from) {
            scenario = load_file(*o.from, LoadOptions{false, o.tol});
            hardy_optimal = o.optimal;
        } else if (o.target == "cabello") {
            scenario = cabello_scenario();
        } else if (o.optimal) {
            OptimizationResult best = maximize_hardy(o.search);
            scenario = hardy_scenario(best.parameter("theta_a"), best.parameter("theta_b"));
            hardy_optimal = true;
        } else {
            if (!o.theta_a || !o.theta_b) {
                return failure(empty, kExitUsage, "verify hardy needs --theta-a and --theta-b, or --optimal");
            }
            scenario = hardy_scenario(*o.theta_a, *o.theta_b);
        }
    } catch (const DegenerateConfiguration &e) {
        return failure(empty, kExitUsage, e.what());
    } catch (const DomainError &e) {
        return failure(empty, kExitUsage, e.what());
    } catch (const ConvergenceFailure &e) {
        return failure(empty, kExitNumeric, e.what());
    } catch (const ParseError &e) {
        return failure(empty, kExitIo, e.what());
    } catch (const std::runtime_error &e) {
        return failure(empty, kExitIo, e.what());
    }

    if (o.export_path) {
        try {
            save_file(*scenario, *o.export_path);
        } catch (const std::exception &e) {
            return failure(empty, kExitIo, e.what());
        }
    }

    Report r;
    try {
        r = verify_scenario(o.target, *scenario, hardy_optimal, o.tol);
    } catch (const std::out_of_range &e) {
        return failure(empty, kExitUsage, std::string("scenario does not match target: ") + e.what());
    } catch (const TooManyProjectors &e) {
        return failure(empty, kExitUsage, e.what());
    }
    if (o.target == "hardy") {
        if (auto it = scenario->metadata.find("theta_a"); it != scenario->metadata.end()) {
            r.notes.push_back("theta_a = " + it->second + ", theta_b = " + scenario->metadata.at("theta_b"));
        }
    }
    if (!r.checks.empty() && !r.checks.front().pass) {
        return failure(r, kExitUsage, "scenario failed validation");
    }
    if (!r.overall()) {
        return failure(r, kExitNumeric, "verification failed");
    }
    return {r, kExitOk, {}};
}

CommandResult cmd_check(const CheckOptions &o) {
    Report r;
    r.command = "check " + o.path.string();
    // Load failures propagate to run(), which maps them to the I/O exit code.
    PrePostScenario s = load_file(o.path, LoadOptions{o.lax, o.tol});
    ValidationReport v = validate(s, o.tol);
    r.checks.push_back({"validation", "pass", v.ok() ? "pass" : "fail", 0.0, v.ok()});
    add_validation_checks(r, v);
    if (!v.ok()) {
        return failure(r, kExitUsage, "scenario failed validation");
    }
    r.metrics.push_back({"selection_probability", selection_probability(s)});

    std::vector<ForcedValue> forced;
    try {
        forced = forced_values(s, o.tol);
    } catch (const SelectionInconsistency &e) {
        r.checks.push_back({"forced values", "consistent", e.what(), 1.0, false});
        return failure(r, kExitUsage, e.what());
    }
    for (const auto &f : forced) {
        r.notes.push_back("forced " + f.label + "=" + std::to_string(to_int(f.bit)) + " [" +
                          to_string(f.justification) + "]");
    }

    SatisfiabilityReport sat;
    try {
        sat = enumerate_assignments(s, forced, o.threads);
    } catch (const TooManyProjectors &e) {
        return failure(r, kExitUsage, e.what());
    }
    r.metrics.push_back({"assignments_examined", static_cast<double>(sat.assignments_examined)});
    r.metrics.push_back({"witnesses", static_cast<double>(sat.witnesses.size())});
    r.notes.push_back(std::string("status: ") + to_string(sat.status));
    if (sat.status == SatStatus::kSat) {
        std::size_t shown = std::min(o.max_witnesses, sat.witnesses.size());
        for (std::size_t i = 0; i < shown; ++i) {
            r.notes.push_back("witness " + std::to_string(i + 1) + ": " + bits_string(sat.witnesses[i]));
        }
        if (shown < sat.witnesses.size()) {
            r.notes.push_back("... " + std::to_string(sat.witnesses.size() - shown) + " more witnesses");
        }
    } else {
        add_trace_notes(r, *sat.conflict);
    }
    return {r, kExitOk, {}};
}

CommandResult cmd_optimize(const OptimizeOptions &o) {
    Report r;
    r.command = "optimize " + o.target;
    OptimizationResult best;
    try {
        if (o.target == "hardy") {
            best = maximize_hardy(o.search);
            r.checks.push_back(numeric_check("maximum selection probability", kHardyMaximum, best.objective, 1e-6));
            r.checks.push_back({"maximum < 1/9", "< " + format_double(kOneNinth), format_double(best.objective),
                                std::max(0.0, best.objective - kOneNinth), best.objective < kOneNinth});
        } else if (o.target == "cabello-family") {
            best = maximize_cabello_family(o.search);
            r.checks.push_back(numeric_check("maximum selection probability", kOneNinth, best.objective, 1e-6));
            r.checks.push_back(numeric_check("c at maximum", 1.0 / 3.0, best.parameter("c"), 1e-4));
            r.checks.push_back(numeric_check("p at maximum", 0.5, best.parameter("p"), 1e-4));
            r.notes.push_back("scope: maximum over the real two-parameter family (c, p) that keeps every "
                              "orthogonality relation except possibly delta+/delta- exclusivity");
        } else {
            return failure(r, kExitUsage,
                           "unknown optimize target '" + o.target + "' (expected hardy or cabello-family)");
        }
    } catch (const DomainError &e) {
        return failure(r, kExitUsage, e.what());
    } catch (const ConvergenceFailure &e) {
        return failure(r, kExitNumeric, e.what());
    }
    for (const auto &[name, value] : best.parameters) {
        r.metrics.push_back({name, value});
    }
    r.metrics.push_back({"objective", best.objective});
    r.metrics.push_back({"evaluations", static_cast<double>(best.evaluations)});
    r.metrics.push_back({"iterations", static_cast<double>(best.iterations)});
    r.metrics.push_back({"grid_resolution", static_cast<double>(best.grid_resolution)});
    r.metrics.push_back({"refine_tolerance", best.refine_tolerance});
    r.metrics.push_back({"final_box", best.final_box});
    if (best.exclusivity_tol > 0.0) {
        r.metrics.push_back({"exclusivity_tol", best.exclusivity_tol});
    }
    if (!r.overall()) {
        return failure(r, kExitNumeric, "optimum does not match the expected value");
    }
    return {r, kExitOk, {}};
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Noncontextual hidden-variable checks for pre- and postselected quantum systems", "nchv"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit the machine-readable JSON report");

    double tol = kTolCheck;
    if (const char *env = std::getenv("QPP_TOL")) {
        char *end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0)) {
            err << "error: QPP_TOL must be a positive number, got '" << env << "'\n";
            return kExitUsage;
        }
        tol = v;
    }

    VerifyOptions vo;
    auto *verify = app.add_subcommand("verify", "Reproduce the contradiction for a built-in scenario");
    verify->add_option("target", vo.target, "cabello | hardy")->required()->check(CLI::IsMember({"cabello", "hardy"}));
    verify->add_option("--theta-a", vo.theta_a, "Hardy angle of a (radians)");
    verify->add_option("--theta-b", vo.theta_b, "Hardy angle of b (radians)");
    verify->add_flag("--optimal", vo.optimal, "Use the angles that maximize the Hardy selection probability");
    verify->add_option("--export", vo.export_path, "Write the scenario file to this path");
    verify->add_option("--from", vo.from, "Verify a scenario file against the target's expectations");
    verify->add_option("--grid", vo.search.grid, "Optimizer grid for --optimal")->check(CLI::PositiveNumber);
    verify->add_option("--refine-tol", vo.search.refine_tol, "Optimizer box tolerance for --optimal");
    verify->add_flag("--json", json, "Emit the machine-readable JSON report");

    CheckOptions co;
    auto *check = app.add_subcommand("check", "Analyze a scenario file");
    check->add_option("path", co.path, "Scenario file")->required();
    check->add_option("--max-witnesses", co.max_witnesses, "Witnesses to print when SAT");
    check->add_flag("--lax", co.lax, "Ignore unknown fields");
    check->add_option("--threads", co.threads, "Enumeration threads");
    check->add_flag("--json", json, "Emit the machine-readable JSON report");

    OptimizeOptions oo;
    auto *optimize = app.add_subcommand("optimize", "Maximize the selection probability");
    optimize->add_option("target", oo.target, "hardy | cabello-family")
        ->required()
        ->check(CLI::IsMember({"hardy", "cabello-family"}));
    optimize->add_option("--grid", oo.search.grid, "Lattice points per axis (>= 16)");
    optimize->add_option("--refine-tol", oo.search.refine_tol, "Stop when the search box is smaller than this");
    optimize->add_option("--threads", oo.search.threads, "Worker threads (output is identical for any count)");
    optimize->add_option("--max-iterations", oo.search.max_iterations, "Refinement iteration cap");
    optimize->add_option("--exclusivity-tol", oo.search.exclusivity_tol,
                         "Feasibility threshold on |<delta+|delta->| (cabello-family)");
    optimize->add_flag("--json", json, "Emit the machine-readable JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    vo.tol = tol;
    co.tol = tol;
    CommandResult result;
    if (*verify) {
        result = cmd_verify(vo);
    } else if (*check) {
        try {
            result = cmd_check(co);
        } catch (const ParseError &e) {
            err << "error: " << e.what() << "\n";
            return kExitIo;
        } catch (const std::runtime_error &e) {
            err << "error: " << e.what() << "\n";
            return kExitIo;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    } else {
        if (oo.search.grid < 16) {
            err << "error: --grid must be >= 16\n";
            return kExitUsage;
        }
        result = cmd_optimize(oo);
    }

    if (!result.diagnostic.empty()) {
        err << "error: " << result.diagnostic << "\n";
    }
    if (!result.report.checks.empty() || !result.report.metrics.empty() || !result.report.notes.empty()) {
        out << (json ? render_json(result.report) : render_text(result.report));
    }
    return result.exit_code;
}

}  // namespace nchv::cli
