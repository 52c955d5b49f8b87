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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nchv/hilbert.h"

namespace nchv {

/// Named rank-1 proposition; the operator is always projector(state).
class LabeledProjector {
  public:
    LabeledProjector(std::string label, StateVector state);

    const std::string &label() const { return label_; }
    const StateVector &state() const { return state_; }
    const Operator &op() const { return op_; }

  private:
    std::string label_;
    StateVector state_;
    Operator op_;
};

/// Labels of a set of compatible propositions expected to resolve the identity.
struct Context {
    std::vector<std::string> members;
    bool operator==(const Context &) const = default;
};

/// Two propositions that can never both be true.
struct ExclusivePair {
    std::string first;
    std::string second;
    bool operator==(const ExclusivePair &) const = default;
};

/// A system preselected in `pre` and postselected in `post`, together with the
/// propositions tested in between and the constraints that relate them.
struct PrePostScenario {
    std::size_t dim;
    StateVector pre;
    StateVector post;
    std::vector<LabeledProjector> projectors;
    std::vector<Context> contexts;
    std::vector<ExclusivePair> exclusive_pairs;
    std::map<std::string, std::string> metadata;

    std::optional<std::size_t> index_of(std::string_view label) const;
    /// Throws std::out_of_range on an unknown label.
    const LabeledProjector &at(std::string_view label) const;
};

enum class Justification { kPrediction, kRetrodiction };

const char *to_string(Justification j);

/// Value of a proposition inferred with certainty from the pre or post state.
struct ForcedValue {
    std::string label;
    Bit bit;
    Justification justification;
    bool operator==(const ForcedValue &) const = default;
};

/// Total 0/1 assignment over a scenario's projectors, in scenario order.
struct ValueAssignment {
    std::vector<std::string> labels;
    std::vector<Bit> bits;

    /// Throws std::out_of_range on an unknown label.
    Bit at(std::string_view label) const;
    bool operator==(const ValueAssignment &) const = default;
};

struct CheckResult {
    std::string name;
    bool pass;
    double deviation;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    /// First failing check, if any.
    const CheckResult *first_failure() const;
};

/**
 * Checks every scenario invariant and reports each as a named pass/fail entry
 * with its measured deviation:
 *
 *  - "dimension": all states live in `dim`, dim >= 2
 *  - "labels": nonempty and unique
 *  - "states normalized": largest |norm - 1|
 *  - "postselection possible": |<post|pre>| > tol
 *  - per context: "context[i] resolves", "context[i] resolution of identity"
 *    (deviation is the spectral norm of sum(P) - I, so a dropped member shows
 *    up as deviation 1)
 *  - per exclusive pair: "exclusive (a,b)" with deviation max|P_a P_b|
 *
 * Dangling labels become failed checks, never exceptions.
 */
ValidationReport validate(const PrePostScenario &s, double tol = kTolCheck);

}  // namespace nchv
