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

#include <map>
#include <random>

#include "gtest/gtest.h"
#include "nchv/constructions.h"
#include "nchv/errors.h"
#include "nchv/prepost.h"
#include "oracles.h"

using namespace nchv;

namespace {

// Label-only scenario: the states are placeholders since enumeration never looks at them.
PrePostScenario abstract_scenario(int n) {
    PrePostScenario s{2, StateVector::basis(2, 0), StateVector::basis(2, 0), {}, {}, {}, {}};
    for (int i = 0; i < n; ++i) {
        s.projectors.emplace_back("p" + std::to_string(i), StateVector::basis(2, 0));
    }
    return s;
}

PrePostScenario random_abstract(std::mt19937_64 &rng, int n) {
    auto s = abstract_scenario(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> count(1, 3);
    int contexts = count(rng);
    for (int c = 0; c < contexts; ++c) {
        Context ctx;
        int size = 1 + pick(rng) % 4;
        for (int k = 0; k < size; ++k) {
            auto label = "p" + std::to_string(pick(rng));
            if (std::find(ctx.members.begin(), ctx.members.end(), label) == ctx.members.end()) {
                ctx.members.push_back(label);
            }
        }
        s.contexts.push_back(ctx);
    }
    int pairs = pick(rng) % 3;
    for (int k = 0; k < pairs; ++k) {
        int a = pick(rng), b = pick(rng);
        if (a != b) {
            s.exclusive_pairs.push_back({"p" + std::to_string(a), "p" + std::to_string(b)});
        }
    }
    return s;
}

std::vector<ForcedValue> random_forced(std::mt19937_64 &rng, int n) {
    std::vector<ForcedValue> out;
    std::bernoulli_distribution keep(0.2), one(0.3);
    for (int i = 0; i < n; ++i) {
        if (keep(rng)) {
            out.push_back({"p" + std::to_string(i), one(rng) ? Bit::kOne : Bit::kZero, Justification::kPrediction});
        }
    }
    return out;
}

std::map<std::string, int> forced_map(const std::vector<ForcedValue> &fv) {
    std::map<std::string, int> out;
    for (const auto &f : fv) {
        out[f.label] = to_int(f.bit);
    }
    return out;
}

std::vector<std::vector<int>> as_bits(const SatisfiabilityReport &r) {
    std::vector<std::vector<int>> out;
    for (const auto &w : r.witnesses) {
        std::vector<int> bits;
        for (Bit b : w.bits) {
            bits.push_back(to_int(b));
        }
        out.push_back(bits);
    }
    return out;
}

bool admissible(const PrePostScenario &s, const ValueAssignment &w, const std::vector<ForcedValue> &forced) {
    for (const auto &f : forced) {
        if (w.at(f.label) != f.bit) {
            return false;
        }
    }
    for (const auto &ctx : s.contexts) {
        int ones = 0;
        for (const auto &m : ctx.members) {
            ones += to_int(w.at(m));
        }
        if (ones != 1) {
            return false;
        }
    }
    for (const auto &p : s.exclusive_pairs) {
        if (w.at(p.first) == Bit::kOne && w.at(p.second) == Bit::kOne) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(enumerate, cabello_is_unsat_over_all_assignments) {
    auto s = cabello_scenario();
    auto r = enumerate_assignments(s, forced_values(s));
    EXPECT_EQ(r.status, SatStatus::kUnsat);
    EXPECT_EQ(r.assignments_examined, 128u);
    EXPECT_TRUE(r.witnesses.empty());
    ASSERT_TRUE(r.conflict.has_value());
    EXPECT_EQ(r.conflict->outcome, TraceOutcome::kConflict);
}

TEST(enumerate, cabello_without_retrodictions_is_sat) {
    auto s = cabello_scenario();
    std::vector<ForcedValue> predictions;
    for (const auto &f : forced_values(s)) {
        if (f.justification == Justification::kPrediction) {
            predictions.push_back(f);
        }
    }
    auto r = enumerate_assignments(s, predictions);
    EXPECT_EQ(r.status, SatStatus::kSat);
    EXPECT_FALSE(r.witnesses.empty());
    EXPECT_FALSE(r.conflict.has_value());
}

TEST(enumerate, cabello_forced_set_is_minimal) {
    auto s = cabello_scenario();
    auto forced = forced_values(s);
    ASSERT_EQ(forced.size(), 5u);
    for (std::size_t drop = 0; drop < forced.size(); ++drop) {
        auto fewer = forced;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
        auto r = enumerate_assignments(s, fewer);
        EXPECT_EQ(r.status, SatStatus::kSat) << "without " << forced[drop].label;
        for (const auto &w : r.witnesses) {
            EXPECT_TRUE(admissible(s, w, fewer));
        }
    }
}

TEST(enumerate, single_qubit_context_has_two_witnesses) {
    auto s = single_qubit_scenario(1, 5);
    auto r = enumerate_assignments(s, {});
    EXPECT_EQ(r.status, SatStatus::kSat);
    EXPECT_EQ(as_bits(r), (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
    EXPECT_EQ(r.assignments_examined, 4u);
}

TEST(enumerate, matches_brute_force_oracle) {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 10;
        auto s = random_abstract(rng, n);
        auto forced = random_forced(rng, n);
        auto r = enumerate_assignments(s, forced);
        auto expected = oracle::brute_force_witnesses(s, forced_map(forced));
        ASSERT_EQ(as_bits(r), expected) << "trial " << trial;
        EXPECT_EQ(r.status, expected.empty() ? SatStatus::kUnsat : SatStatus::kSat);
        EXPECT_EQ(r.assignments_examined, std::uint64_t{1} << n);
    }
}

TEST(enumerate, contradictory_forced_values_admit_nothing) {
    auto s = abstract_scenario(2);
    s.contexts.push_back({{"p0", "p1"}});
    std::vector<ForcedValue> forced{{"p0", Bit::kOne, Justification::kPrediction},
                                    {"p0", Bit::kZero, Justification::kRetrodiction}};
    EXPECT_EQ(enumerate_assignments(s, forced).status, SatStatus::kUnsat);
}

TEST(enumerate, single_qubit_scenarios_are_sat) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto s = single_qubit_scenario(1 + static_cast<int>(seed % 8), seed);
        auto r = enumerate_assignments(s, forced_values(s));
        ASSERT_EQ(r.status, SatStatus::kSat) << seed;
        for (const auto &w : r.witnesses) {
            EXPECT_TRUE(admissible(s, w, forced_values(s)));
        }
    }
}

TEST(enumerate, thread_count_does_not_change_the_result) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 14 + trial;
        auto s = random_abstract(rng, n);
        auto forced = random_forced(rng, n);
        auto one = enumerate_assignments(s, forced, 1);
        for (unsigned threads : {2u, 3u, 8u}) {
            auto many = enumerate_assignments(s, forced, threads);
            EXPECT_EQ(many.status, one.status);
            EXPECT_EQ(many.assignments_examined, one.assignments_examined);
            EXPECT_EQ(many.witnesses, one.witnesses);
        }
    }
}

TEST(enumerate, size_limit_and_unknown_labels) {
    auto big = abstract_scenario(25);
    EXPECT_THROW(enumerate_assignments(big, {}), TooManyProjectors);
    auto s = abstract_scenario(3);
    s.contexts.push_back({{"p0", "ghost"}});
    EXPECT_THROW(enumerate_assignments(s, {}), InvalidValue);
    auto t = abstract_scenario(3);
    EXPECT_THROW(enumerate_assignments(t, {{"ghost", Bit::kOne, Justification::kPrediction}}), InvalidValue);
}

TEST(trace, cabello_three_steps) {
    auto trace = contradiction_trace(cabello_scenario());
    EXPECT_EQ(trace.outcome, TraceOutcome::kConflict);
    EXPECT_EQ(trace.given.size(), 5u);
    ASSERT_EQ(trace.steps.size(), 3u);
    EXPECT_EQ(trace.steps[0].describe(), "alpha=0, beta+=0, gamma+=0 => delta+=1 [SumRule]");
    EXPECT_EQ(trace.steps[1].describe(), "alpha=0, beta-=0, gamma-=0 => delta-=1 [SumRule]");
    EXPECT_EQ(trace.steps[2].describe(), "delta+=1, delta-=1 => CONFLICT [Exclusivity]");
    EXPECT_TRUE(trace.steps[2].conflict);
    EXPECT_EQ(trace.steps[0].premises[2].origin, Rule::kRetrodiction);
}

TEST(trace, hardy_three_steps) {
    auto trace = contradiction_trace(hardy_scenario(0.904557, 0.904557));
    EXPECT_EQ(trace.outcome, TraceOutcome::kConflict);
    ASSERT_EQ(trace.steps.size(), 3u);
    EXPECT_EQ(trace.steps[0].describe(), "alpha_hat=0, beta_hat+=0, gamma_hat+=0 => delta_hat+=1 [SumRule]");
    EXPECT_EQ(trace.steps[1].describe(), "alpha_hat=0, beta_hat-=0, gamma_hat-=0 => delta_hat-=1 [SumRule]");
    EXPECT_EQ(trace.steps[2].describe(), "delta_hat+=1, delta_hat-=1 => CONFLICT [Exclusivity]");
}

TEST(trace, satisfiable_scenarios_have_no_contradiction) {
    EXPECT_THROW(contradiction_trace(single_qubit_scenario(3, 1)), NoContradiction);
}

TEST(trace, odd_cycle_is_unsat_without_unit_certificate) {
    // Three two-member contexts on a triangle: exactly one true per edge is impossible.
    auto s = abstract_scenario(3);
    s.contexts = {{{"p0", "p1"}}, {{"p1", "p2"}}, {{"p0", "p2"}}};
    auto r = enumerate_assignments(s, {});
    EXPECT_EQ(r.status, SatStatus::kUnsat);
    ASSERT_TRUE(r.conflict.has_value());
    EXPECT_EQ(r.conflict->outcome, TraceOutcome::kNoUnitCertificate);
    EXPECT_TRUE(r.conflict->steps.empty());
}

TEST(trace, conflict_implies_unsat) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 9;
        auto s = random_abstract(rng, n);
        auto forced = random_forced(rng, n);
        auto trace = propagate(s, forced);
        auto r = enumerate_assignments(s, forced);
        if (trace.outcome == TraceOutcome::kConflict) {
            EXPECT_EQ(r.status, SatStatus::kUnsat) << trial;
        }
        // Every derived value holds in every witness.
        for (const auto &step : trace.steps) {
            if (step.conflict) {
                continue;
            }
            for (const auto &w : r.witnesses) {
                EXPECT_EQ(w.at(step.label), step.bit) << trial;
            }
        }
    }
}
