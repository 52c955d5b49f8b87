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

#include <string_view>
#include <vector>

#include "nchv/scenario.h"

namespace nchv {

/// |<post|pre>|^2.
double selection_probability(const PrePostScenario &s);

/**
 * Values inferable with certainty at the intermediate time: a prediction from
 * the preselected state is tried first, then a retrodiction from the
 * postselected one. Sorted by label.
 *
 * Throws SelectionInconsistency when both apply and disagree.
 */
std::vector<ForcedValue> forced_values(const PrePostScenario &s, double tol = kTolCheck);

/// Two-outcome ABL probability for `label` given the pre/post selection:
/// N1 / (N1 + N0) with N1 = |<post|P|pre>|^2, N0 = |<post|(I-P)|pre>|^2.
/// Throws std::out_of_range on an unknown label, UndefinedAbl when N1 + N0 < tol.
double abl_probability(const PrePostScenario &s, std::string_view label, double tol = kTolCheck);

}  // namespace nchv
