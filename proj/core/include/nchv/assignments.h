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
 * Noncontextual 0/1 value assignments.
 *
 * An assignment gives every projector of a scenario a bit. It is admissible when
 *   - it agrees with every forced value,
 *   - every context has exactly one member set to 1 (sum rule),
 *   - no exclusive pair has both members set to 1.
 *
 * enumerate_assignments() decides admissibility exhaustively. propagate()
 * independently tries to reach a contradiction by unit propagation only, which
 * yields a human-readable derivation when it succeeds.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nchv/scenario.h"

namespace nchv {

/// Exhaustive mode refuses scenarios with more projectors than this.
inline constexpr std::size_t kMaxExhaustiveProjectors = 24;

enum class SatStatus { kSat, kUnsat };
enum class Rule { kPrediction, kRetrodiction, kSumRule, kExclusivity };

const char *to_string(SatStatus s);
const char *to_string(Rule r);

struct Premise {
    std::string label;
    Bit bit;
    Rule origin;  ///< how this value was obtained
    bool operator==(const Premise &) const = default;
};

struct TraceStep {
    std::vector<Premise> premises;
    Rule rule;
    bool conflict = false;
    std::string label;  ///< concluded label; empty when `conflict`
    Bit bit = Bit::kZero;

    /// e.g. "alpha=0, beta+=0, gamma+=0 => delta+=1 [SumRule]"
    std::string describe() const;
    bool operator==(const TraceStep &) const = default;
};

enum class TraceOutcome {
    kConflict,
    /// Unit propagation stalled without a conflict.
    kNoUnitCertificate,
};

struct ContradictionTrace {
    TraceOutcome outcome;
    std::vector<ForcedValue> given;
    std::vector<TraceStep> steps;
};

struct SatisfiabilityReport {
    SatStatus status;
    std::vector<ValueAssignment> witnesses;  ///< every admissible assignment, lexicographic by bits
    std::uint64_t assignments_examined = 0;
    std::optional<ContradictionTrace> conflict;  ///< unit-propagation trace when UNSAT
};

/**
 * Examines all 2^n assignments over the scenario's projectors (n <= 24).
 * Bits are ordered as the scenario lists its projectors; witnesses come out in
 * lexicographic order regardless of `threads`.
 *
 * Throws TooManyProjectors for n > kMaxExhaustiveProjectors and InvalidValue
 * when a forced value, context member or exclusive pair names an unknown label.
 */
SatisfiabilityReport enumerate_assignments(const PrePostScenario &s, const std::vector<ForcedValue> &forced,
                                           unsigned threads = 1);

/**
 * Unit propagation from the forced values. Each round takes the first
 * applicable move in this order: report a conflict (doubly-true exclusive
 * pair, context with two 1s, context with all 0s); set the last open member of
 * an otherwise all-zero context to 1; zero an open member of a context that
 * already has a 1; zero the open partner of a true exclusive member.
 */
ContradictionTrace propagate(const PrePostScenario &s, const std::vector<ForcedValue> &forced);

/**
 * Derivation of the contradiction for the scenario's own forced values.
 * Throws NoContradiction when the assignment problem is satisfiable. When the
 * problem is UNSAT but propagation stalls, the outcome is kNoUnitCertificate.
 */
ContradictionTrace contradiction_trace(const PrePostScenario &s, double tol = kTolCheck);

}  // namespace nchv
