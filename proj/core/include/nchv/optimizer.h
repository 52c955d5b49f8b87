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
 * Deterministic grid-plus-shrinking-refinement searches for the largest
 * selection probability compatible with each construction.
 *
 * A search lays a `grid`-point lattice (cell centers) over the current box,
 * keeps the best point (ties broken toward the lexicographically smallest
 * parameters, previous best included so iterations never lose ground),
 * shrinks the box to two cells around it and repeats until every side is
 * shorter than `refine_tol`.
 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nchv {

struct SearchOptions {
    int grid = 64;             ///< lattice points per axis, >= 16
    double refine_tol = 1e-9;  ///< stop once the box is smaller than this
    int max_iterations = 60;
    unsigned threads = 1;
    /// Feasibility threshold on |<delta+|delta->| (Cabello family only).
    double exclusivity_tol = 1e-9;
};

struct OptimizationResult {
    std::vector<std::pair<std::string, double>> parameters;
    double objective = 0.0;
    std::uint64_t evaluations = 0;
    int grid_resolution = 0;
    double refine_tolerance = 0.0;
    double exclusivity_tol = 0.0;  ///< 0 when not applicable
    int iterations = 0;
    double final_box = 0.0;
    std::vector<double> history;  ///< best objective after each iteration

    double parameter(const std::string &name) const;
};

/// Maximizes |<eta2|eta1>|^2 of the Hardy scenario over (theta_a, theta_b) in (0, pi/2)^2.
/// Throws DomainError on bad options, ConvergenceFailure at the iteration cap.
OptimizationResult maximize_hardy(const SearchOptions &options = {});

/// Result of locating the most exclusive delta pair for a fixed c.
struct FamilyFeasibility {
    double p;              ///< argmin |<delta+|delta->| (a root when the minimum is negative)
    double delta_overlap;  ///< |<delta+|delta->| at p
    bool feasible;         ///< delta_overlap < exclusivity_tol
    std::uint64_t evaluations;
};

/**
 * For fixed c, scans p on a `p_grid`-point lattice, then bisects on the sign of
 * the derivative of the signed overlap Re<delta+|delta-> to locate its minimum.
 * A negative minimum means two roots exist and the upper one is returned.
 */
FamilyFeasibility solve_family_feasibility(double c, double exclusivity_tol = 1e-9, int p_grid = 64);

/// Maximizes c^2 over the Cabello family subject to feasibility of the delta pair.
OptimizationResult maximize_cabello_family(const SearchOptions &options = {});

}  // namespace nchv
