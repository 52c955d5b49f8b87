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
 * Builders for the two-qubit scenarios and their generalizations.
 *
 * Two-qubit states use the product basis order
 *     (A(x)B, A(x)B_perp, A_perp(x)B, A_perp(x)B_perp),
 * i.e. index = 2*first + second with A = B = |0> and A_perp = B_perp = |1>.
 */

#pragma once

#include <cstdint>

#include "nchv/scenario.h"

namespace nchv {

/// Two spin-1/2 particles preselected in A(x)B and postselected in a(x)B, with
/// a = (A - sqrt(8) A_perp)/3. Seven propositions alpha, beta+-, gamma+-,
/// delta+-, two four-member contexts sharing alpha, and the exclusive pair
/// (delta+, delta-). Selection probability 1/9.
PrePostScenario cabello_scenario();

/// Member of the real two-parameter family that generalizes the unentangled
/// construction. The scenario always satisfies every orthogonality relation
/// except possibly the exclusivity of (delta+, delta-).
struct CandidateConstruction {
    PrePostScenario scenario;
    double c;              ///< <a|A>
    double p;              ///< beta mixing coefficient
    double delta_overlap;  ///< |<delta+|delta->|
    /// Re<delta+|delta->; smooth in (c, p) because both delta states are
    /// phase-fixed to a positive first coordinate.
    double delta_overlap_signed;
};

/**
 * With s = sqrt(1-c^2), q = sqrt(1-p^2):
 *   pre = (1,0,0,0), post = (c,0,-s,0), alpha = (0,0,0,1),
 *   beta+- = (0,p,+-q,0), gamma+- ~ (s, -+cq/p, c, 0),
 *   delta+- = orthocomplement of {alpha, beta+-, gamma+-}.
 * Throws DomainError unless 0 < c < 1 and 0 < p < 1.
 */
CandidateConstruction cabello_family(double c, double p);

/**
 * Hardy's entangled-preselection scenario for a = cos(ta) A + sin(ta) A_perp,
 * b = cos(tb) B + sin(tb) B_perp. The preselected state is the unit vector
 * orthogonal to A(x)B, a(x)B_perp and A_perp(x)b; the postselected state is a(x)b.
 *
 * Throws DegenerateConfiguration for angles outside the open quadrant, for a
 * rank-deficient constraint set, or when |<post|pre>| < kTolCheck.
 */
PrePostScenario hardy_scenario(double theta_a, double theta_b);

/// |<post|pre>|^2 of the Hardy scenario, or 0 where hardy_scenario would throw.
double hardy_selection_probability(double theta_a, double theta_b);

/// Random single-qubit scenario with `n_contexts` bases {u_k, u_k_perp}.
/// Pre and post are random and non-orthogonal; output is a function of `seed`.
/// Throws DomainError when n_contexts < 1.
PrePostScenario single_qubit_scenario(int n_contexts, std::uint64_t seed);

}  // namespace nchv
