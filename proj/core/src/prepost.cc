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

#include "nchv/prepost.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "nchv/errors.h"

namespace nchv {

double selection_probability(const PrePostScenario &s) {
    return std::norm(inner(s.post, s.pre));
}

std::vector<ForcedValue> forced_values(const PrePostScenario &s, double tol) {
    std::vector<ForcedValue> out;
    for (const auto &p : s.projectors) {
        auto predicted = certain_value(p.op(), s.pre, tol);
        auto retrodicted = certain_value(p.op(), s.post, tol);
        if (predicted && retrodicted && *predicted != *retrodicted) {
            throw SelectionInconsistency("'" + p.label() + "' is predicted " + std::to_string(to_int(*predicted)) +
                                         " but retrodicted " + std::to_string(to_int(*retrodicted)));
        }
        if (predicted) {
            out.push_back({p.label(), *predicted, Justification::kPrediction});
        } else if (retrodicted) {
            out.push_back({p.label(), *retrodicted, Justification::kRetrodiction});
        }
    }
    std::sort(out.begin(), out.end(), [](const ForcedValue &a, const ForcedValue &b) { return a.label < b.label; });
    return out;
}

double abl_probability(const PrePostScenario &s, std::string_view label, double tol) {
    const Operator &p = s.at(label).op();
    Amplitude total = inner(s.post, s.pre);
    Amplitude yes = inner(s.post.amplitudes(), apply(p, s.pre));
    double n1 = std::norm(yes);
    double n0 = std::norm(total - yes);  // <post|(I-P)|pre>
    if (n1 + n0 < tol) {
        throw UndefinedAbl("ABL probability for '" + std::string(label) +
                           "' is undefined: the measurement would make the postselection impossible");
    }
    return n1 / (n1 + n0);
}

}  // namespace nchv
