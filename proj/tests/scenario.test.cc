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

#include "nchv/scenario.h"

#include <cmath>

#include "gtest/gtest.h"
#include "json.hpp"
#include "nchv/constructions.h"
#include "nchv/errors.h"
#include "nchv/scenario_io.h"

using namespace nchv;

namespace {

const CheckResult *find_check(const ValidationReport &r, const std::string &name) {
    for (const auto &c : r.checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

void expect_same_report(const ValidationReport &a, const ValidationReport &b) {
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        EXPECT_EQ(a.checks[i].name, b.checks[i].name);
        EXPECT_EQ(a.checks[i].pass, b.checks[i].pass);
        EXPECT_EQ(a.checks[i].deviation, b.checks[i].deviation);
        EXPECT_EQ(a.checks[i].detail, b.checks[i].detail);
    }
}

}  // namespace

TEST(validate, cabello_passes_every_check) {
    auto report = validate(cabello_scenario());
    EXPECT_TRUE(report.ok());
    EXPECT_NE(find_check(report, "postselection possible"), nullptr);
    EXPECT_NE(find_check(report, "context[1] resolution of identity"), nullptr);
    EXPECT_NE(find_check(report, "exclusive (delta+,delta-)"), nullptr);
}

TEST(validate, orthogonal_postselection_fails) {
    auto s = cabello_scenario();
    s.post = StateVector::basis(4, 2);
    auto report = validate(s);
    EXPECT_FALSE(report.ok());
    const auto *c = find_check(report, "postselection possible");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->pass);
    EXPECT_EQ(c->deviation, 0.0);
}

TEST(validate, dropped_context_member_shows_unit_deviation) {
    auto s = cabello_scenario();
    s.contexts[0].members.pop_back();  // delta+
    auto report = validate(s);
    EXPECT_FALSE(report.ok());
    const auto *c = find_check(report, "context[0] resolution of identity");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->pass);
    EXPECT_NEAR(c->deviation, 1.0, 1e-12);
}

TEST(validate, dangling_labels_are_failures_not_exceptions) {
    auto s = cabello_scenario();
    s.contexts[1].members[2] = "nope";
    s.exclusive_pairs.push_back({"delta+", "ghost"});
    ValidationReport report;
    ASSERT_NO_THROW(report = validate(s));
    EXPECT_FALSE(find_check(report, "context[1] resolves")->pass);
    EXPECT_FALSE(find_check(report, "exclusive (delta+,ghost)")->pass);
}

TEST(validate, non_exclusive_pair_fails) {
    auto s = cabello_scenario();
    s.exclusive_pairs.push_back({"delta+", "gamma-"});
    auto report = validate(s);
    const auto *c = find_check(report, "exclusive (delta+,gamma-)");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->pass);
    EXPECT_GT(c->deviation, 0.01);
}

TEST(validate, duplicate_labels_fail) {
    auto s = cabello_scenario();
    s.projectors.emplace_back("alpha", StateVector::basis(4, 0));
    EXPECT_FALSE(find_check(validate(s), "labels")->pass);
}

TEST(validate, is_deterministic) {
    auto s = hardy_scenario(0.6, 0.9);
    expect_same_report(validate(s), validate(s));
}

TEST(validate, accepted_scenarios_have_complete_context_probabilities) {
    std::vector<PrePostScenario> corpus{cabello_scenario(), hardy_scenario(0.3, 1.2), single_qubit_scenario(6, 11),
                                        cabello_family(1.0 / 3.0, 0.5).scenario};
    for (const auto &s : corpus) {
        ASSERT_TRUE(validate(s).ok()) << s.metadata.at("name");
        for (const auto &ctx : s.contexts) {
            double total = 0.0;
            for (const auto &m : ctx.members) {
                total += inner(s.pre.amplitudes(), apply(s.at(m).op(), s.pre)).real();
            }
            EXPECT_NEAR(total, 1.0, 1e-9);
        }
    }
}

TEST(scenario_io, round_trip_preserves_validation_report) {
    auto s = cabello_scenario();
    auto reloaded = load(save(s));
    expect_same_report(validate(s), validate(reloaded));
    EXPECT_EQ(reloaded.pre, s.pre);
    EXPECT_EQ(reloaded.post, s.post);
    ASSERT_EQ(reloaded.projectors.size(), s.projectors.size());
    for (std::size_t i = 0; i < s.projectors.size(); ++i) {
        EXPECT_EQ(reloaded.projectors[i].label(), s.projectors[i].label());
        EXPECT_EQ(reloaded.projectors[i].state(), s.projectors[i].state());
    }
    EXPECT_EQ(reloaded.contexts, s.contexts);
    EXPECT_EQ(reloaded.exclusive_pairs, s.exclusive_pairs);
    EXPECT_EQ(reloaded.metadata, s.metadata);
}

TEST(scenario_io, save_load_save_is_byte_idempotent_on_constructions) {
    std::vector<PrePostScenario> corpus{cabello_scenario(), hardy_scenario(0.904, 0.31), hardy_scenario(1e-3, 1.5),
                                        single_qubit_scenario(10, 42)};
    for (double c : {0.05, 1.0 / 3.0, 0.77}) {
        for (double p : {0.01, 0.5, 0.93}) {
            corpus.push_back(cabello_family(c, p).scenario);
        }
    }
    for (const auto &s : corpus) {
        std::string first = save(s);
        EXPECT_EQ(save(load(first)), first);
    }
}

namespace {

std::string load_error(const std::string &text, const LoadOptions &opts = {}) {
    try {
        load(text, opts);
    } catch (const ParseError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(scenario_io, wrong_amplitude_count_names_the_state) {
    auto j = nlohmann::json::parse(save(cabello_scenario()));
    j["projectors"][0]["state"].erase(3);
    auto msg = load_error(j.dump());
    EXPECT_NE(msg.find("projectors[0] 'alpha'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("3 amplitudes, expected 4"), std::string::npos) << msg;
}

TEST(scenario_io, duplicate_label_is_rejected) {
    auto j = nlohmann::json::parse(save(cabello_scenario()));
    j["projectors"][1]["label"] = "alpha";
    auto msg = load_error(j.dump());
    EXPECT_NE(msg.find("duplicate label \"alpha\""), std::string::npos) << msg;
}

TEST(scenario_io, unknown_fields_strict_and_lax) {
    auto j = nlohmann::json::parse(save(cabello_scenario()));
    j["comment"] = "hand edited";
    j["projectors"][2]["color"] = "red";
    auto msg = load_error(j.dump());
    EXPECT_NE(msg.find("unknown field"), std::string::npos) << msg;

    LoadOptions lax;
    lax.lax = true;
    auto s = load(j.dump(), lax);
    EXPECT_TRUE(validate(s).ok());
    EXPECT_EQ(save(s), save(cabello_scenario()));
}

TEST(scenario_io, truncated_text_reports_byte_offset) {
    auto text = save(cabello_scenario());
    auto msg = load_error(text.substr(0, text.size() / 2));
    EXPECT_EQ(msg.rfind("syntax error at byte ", 0), 0u) << msg;
}

TEST(scenario_io, malformed_structures_are_parse_errors) {
    auto base = nlohmann::json::parse(save(cabello_scenario()));
    std::vector<nlohmann::json> bad;
    {
        auto j = base;
        j.erase("pre");
        bad.push_back(j);
    }
    {
        auto j = base;
        j["dim"] = 1;
        bad.push_back(j);
    }
    {
        auto j = base;
        j["post"][0] = 1.0;
        bad.push_back(j);
    }
    {
        auto j = base;
        j["exclusive_pairs"][0].push_back("alpha");
        bad.push_back(j);
    }
    {
        auto j = base;
        j["metadata"]["name"] = 3;
        bad.push_back(j);
    }
    {
        auto j = base;
        j["pre"][0] = {2.0, 0.0};  // no longer unit norm
        bad.push_back(j);
    }
    bad.push_back(nlohmann::json::array());
    for (const auto &j : bad) {
        EXPECT_THROW(load(j.dump()), ParseError) << j.dump().substr(0, 80);
    }
}

TEST(scenario_io, missing_file_is_an_io_error) {
    EXPECT_THROW(load_file("/nonexistent/definitely/not/here.json"), std::runtime_error);
}

TEST(scenario_io, key_order_is_irrelevant_on_input) {
    auto j = nlohmann::ordered_json::parse(save(cabello_scenario()));
    nlohmann::ordered_json reversed;
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    for (auto k = keys.rbegin(); k != keys.rend(); ++k) {
        reversed[*k] = j[*k];
    }
    EXPECT_EQ(save(load(reversed.dump())), save(cabello_scenario()));
}
