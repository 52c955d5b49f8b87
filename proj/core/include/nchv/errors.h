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

#include <stdexcept>
#include <string>

namespace nchv {

/// Vector/operator dimensions do not line up.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value violates a domain type invariant (non-unit state, NaN amplitude, ...).
struct InvalidValue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the documented domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Geometry that cannot support the requested construction (rank deficiency,
/// vanishing pre/post overlap, boundary angles).
struct DegenerateConfiguration : std::runtime_error {
    explicit DegenerateConfiguration(const std::string &what)
        : std::runtime_error("degenerate configuration: " + what) {}
};

/// Malformed or semantically invalid scenario file.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Prediction and retrodiction force different bits on one projector.
struct SelectionInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The ABL ratio is 0/0: measuring the projector would make the postselection impossible.
struct UndefinedAbl : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration was asked to cover too many projectors.
struct TooManyProjectors : std::length_error {
    using std::length_error::length_error;
};

/// A contradiction trace was requested for a satisfiable scenario.
struct NoContradiction : std::runtime_error {
    NoContradiction() : std::runtime_error("no contradiction exists") {}
};

/// Iterative refinement hit its iteration cap before reaching the requested tolerance.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nchv
