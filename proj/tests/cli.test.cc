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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.h"
#include "gtest/gtest.h"
#include "nchv/constructions.h"
#include "nchv/errors.h"
#include "nchv/scenario_io.h"
#include "report.h"

using namespace nchv;
using namespace nchv::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "nchv");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("nchv-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string &name) const { return path_ / name; }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class ScopedEnv {
public:
    ScopedEnv(const char *name, const char *value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }

private:
    const char *name_;
};

}  // namespace

TEST(cli_verify, cabello_exits_zero) {
    auto o = invoke({"verify", "cabello"});
    EXPECT_EQ(o.code, kExitOk) << o.err;
    EXPECT_NE(o.out.find("overall: PASS"), std::string::npos);
    EXPECT_NE(o.out.find("step 3: delta+=1, delta-=1 => CONFLICT [Exclusivity]"), std::string::npos);
}

TEST(cli_verify, cabello_json_matches_golden_file) {
    auto o = invoke({"verify", "cabello", "--json"});
    ASSERT_EQ(o.code, kExitOk);
    EXPECT_EQ(o.out, slurp(fs::path(NCHV_GOLDEN_DIR) / "verify_cabello.json"));
}

TEST(cli_verify, hardy_optimal_exits_zero) {
    auto o = invoke({"verify", "hardy", "--optimal", "--json"});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    auto r = parse_report_json(o.out);
    EXPECT_TRUE(r.overall());
}

TEST(cli_verify, hardy_explicit_angles) {
    auto o = invoke({"verify", "hardy", "--theta-a", "0.9", "--theta-b", "0.9"});
    EXPECT_EQ(o.code, kExitOk) << o.out;
}

TEST(cli_verify, degenerate_hardy_angles_are_usage_errors) {
    auto o = invoke({"verify", "hardy", "--theta-a", "0", "--theta-b", "0.5"});
    EXPECT_EQ(o.code, kExitUsage);
    EXPECT_NE(o.err.find("degenerate configuration"), std::string::npos) << o.err;
}

TEST(cli_verify, unknown_target_is_a_usage_error) {
    EXPECT_EQ(invoke({"verify", "mermin"}).code, kExitUsage);
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
}

TEST(cli_verify, export_then_verify_from_file) {
    TempDir dir;
    auto path = dir / "cabello.json";
    auto first = invoke({"verify", "cabello", "--json", "--export", path.string()});
    ASSERT_EQ(first.code, kExitOk);
    ASSERT_TRUE(fs::exists(path));
    EXPECT_EQ(save(load_file(path)), slurp(path));
    auto second = invoke({"verify", "cabello", "--json", "--from", path.string()});
    ASSERT_EQ(second.code, kExitOk) << second.err;
    auto a = parse_report_json(first.out);
    auto b = parse_report_json(second.out);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        EXPECT_EQ(a.checks[i].name, b.checks[i].name);
        EXPECT_EQ(a.checks[i].pass, b.checks[i].pass);
        EXPECT_EQ(a.checks[i].actual, b.checks[i].actual);
    }
}

TEST(cli_check, exported_cabello_is_unsat_and_exits_zero) {
    TempDir dir;
    auto path = dir / "cabello.json";
    save_file(cabello_scenario(), path);
    auto o = invoke({"check", path.string()});
    EXPECT_EQ(o.code, kExitOk) << o.err;
    EXPECT_NE(o.out.find("UNSAT"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("CONFLICT"), std::string::npos);
}

TEST(cli_check, single_qubit_lists_witnesses) {
    TempDir dir;
    auto path = dir / "qubit.json";
    save_file(single_qubit_scenario(1, 4), path);
    auto o = invoke({"check", path.string(), "--json"});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    auto r = parse_report_json(o.out);
    std::size_t witnesses = 0;
    for (const auto &n : r.notes) {
        witnesses += n.rfind("witness", 0) == 0 ? 1 : 0;
    }
    EXPECT_EQ(witnesses, 2u) << o.out;
}

TEST(cli_check, bad_files) {
    TempDir dir;
    auto path = dir / "truncated.json";
    auto text = save(cabello_scenario());
    std::ofstream(path) << text.substr(0, text.size() / 3);
    auto o = invoke({"check", path.string()});
    EXPECT_EQ(o.code, kExitIo);
    EXPECT_NE(o.err.find("syntax error at byte"), std::string::npos) << o.err;

    EXPECT_EQ(invoke({"check", (dir / "missing.json").string()}).code, kExitIo);

    auto invalid = cabello_scenario();
    invalid.contexts[0].members.pop_back();
    auto bad_path = dir / "invalid.json";
    save_file(invalid, bad_path);
    EXPECT_EQ(invoke({"check", bad_path.string()}).code, kExitUsage);
}

TEST(cli_check, unknown_fields_need_lax) {
    TempDir dir;
    auto path = dir / "extra.json";
    auto text = save(cabello_scenario());
    text.insert(text.find('{') + 1, "\n  \"comment\": \"x\",");
    std::ofstream(path) << text;
    EXPECT_EQ(invoke({"check", path.string()}).code, kExitIo);
    EXPECT_EQ(invoke({"check", path.string(), "--lax"}).code, kExitOk);
}

TEST(cli_optimize, hardy_and_family_exit_zero) {
    auto h = invoke({"optimize", "hardy", "--json"});
    EXPECT_EQ(h.code, kExitOk) << h.err;
    auto f = invoke({"optimize", "cabello-family", "--json"});
    EXPECT_EQ(f.code, kExitOk) << f.err;
    EXPECT_TRUE(parse_report_json(f.out).overall());
}

TEST(cli_optimize, output_is_independent_of_threads) {
    auto one = invoke({"optimize", "hardy", "--json", "--threads", "1"});
    auto four = invoke({"optimize", "hardy", "--json", "--threads", "4"});
    ASSERT_EQ(one.code, kExitOk);
    EXPECT_EQ(one.out, four.out);
}

TEST(cli_optimize, bad_options) {
    EXPECT_EQ(invoke({"optimize", "hardy", "--grid", "8"}).code, kExitUsage);
    EXPECT_EQ(invoke({"optimize", "hardy", "--max-iterations", "2"}).code, kExitNumeric);
    EXPECT_EQ(invoke({"optimize", "bell"}).code, kExitUsage);
}

TEST(cli_env, qpp_tol_is_honoured) {
    {
        ScopedEnv env("QPP_TOL", "not-a-number");
        EXPECT_EQ(invoke({"verify", "cabello"}).code, kExitUsage);
    }
    {
        ScopedEnv env("QPP_TOL", "-1");
        EXPECT_EQ(invoke({"verify", "cabello"}).code, kExitUsage);
    }
    {
        ScopedEnv env("QPP_TOL", "1e-6");
        EXPECT_EQ(invoke({"verify", "cabello"}).code, kExitOk);
    }
}

TEST(report, json_round_trip) {
    Report r;
    r.command = "unit";
    r.checks.push_back({"a", "1", "1.0000000000000002", 2.220446049250313e-16, true});
    r.checks.push_back({"b", "x", "y", 1.0, false});
    r.metrics.push_back({"m", 0.1});
    r.notes.push_back("hello");
    auto back = parse_report_json(render_json(r));
    EXPECT_EQ(back.command, r.command);
    EXPECT_EQ(back.artifact_version, kArtifactVersion);
    ASSERT_EQ(back.checks.size(), 2u);
    EXPECT_EQ(back.checks[0].deviation, r.checks[0].deviation);
    EXPECT_FALSE(back.overall());
    EXPECT_EQ(render_json(back), render_json(r));
    EXPECT_NE(render_text(r).find("overall: FAIL"), std::string::npos);
}

TEST(report, tampered_overall_is_rejected) {
    Report r;
    r.command = "unit";
    r.checks.push_back({"b", "x", "y", 1.0, false});
    auto text = render_json(r);
    text.replace(text.find("\"fail\""), 6, "\"pass\"");
    EXPECT_THROW(parse_report_json(text), ParseError);
    EXPECT_THROW(parse_report_json("{"), ParseError);
}
