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

#include "nchv/scenario_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nchv/errors.h"

namespace nchv {

namespace {

using nlohmann::json;

json encode_state(const StateVector &s) {
    json out = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        out.push_back(json::array({s[i].real(), s[i].imag()}));
    }
    return out;
}

[[noreturn]] void fail(const std::string &where, const std::string &what) {
    throw ParseError(where + ": " + what);
}

const json &require(const json &obj, const char *key, const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

void reject_unknown(const json &obj, std::initializer_list<const char *> known, const std::string &where,
                    const LoadOptions &options) {
    if (options.lax) {
        return;
    }
    for (const auto &[key, value] : obj.items()) {
        bool found = false;
        for (const char *k : known) {
            found = found || key == k;
        }
        if (!found) {
            fail(where, "unknown field \"" + key + "\"");
        }
    }
}

StateVector decode_state(const json &j, std::size_t dim, const std::string &where, const LoadOptions &options) {
    if (!j.is_array()) {
        fail(where, "state must be an array of [re, im] pairs");
    }
    if (j.size() != dim) {
        fail(where, "state has " + std::to_string(j.size()) + " amplitudes, expected " + std::to_string(dim));
    }
    std::vector<Amplitude> amps;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto &c = j[i];
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
            fail(where + "[" + std::to_string(i) + "]", "amplitude must be [re, im]");
        }
        amps.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    try {
        return StateVector::from_amplitudes(amps, options.tol);
    } catch (const InvalidValue &e) {
        fail(where, e.what());
    }
}

std::string label_pair_where(const char *field, std::size_t i) {
    return std::string(field) + "[" + std::to_string(i) + "]";
}

std::vector<std::string> decode_labels(const json &j, const std::string &where) {
    if (!j.is_array()) {
        fail(where, "expected an array of labels");
    }
    std::vector<std::string> out;
    for (const auto &x : j) {
        if (!x.is_string()) {
            fail(where, "labels must be strings");
        }
        out.push_back(x.get<std::string>());
    }
    return out;
}

PrePostScenario decode(const json &root, const LoadOptions &options) {
    if (!root.is_object()) {
        fail("<root>", "expected a JSON object");
    }
    reject_unknown(root, {"dim", "pre", "post", "projectors", "contexts", "exclusive_pairs", "metadata"}, "<root>",
                   options);

    const json &jdim = require(root, "dim", "<root>");
    if (!jdim.is_number_unsigned() || jdim.get<std::size_t>() < 2) {
        fail("dim", "must be an integer >= 2");
    }
    auto dim = jdim.get<std::size_t>();

    StateVector pre = decode_state(require(root, "pre", "<root>"), dim, "pre", options);
    StateVector post = decode_state(require(root, "post", "<root>"), dim, "post", options);

    std::vector<LabeledProjector> projectors;
    std::set<std::string> labels;
    const json &jprojs = require(root, "projectors", "<root>");
    if (!jprojs.is_array()) {
        fail("projectors", "expected an array");
    }
    for (std::size_t i = 0; i < jprojs.size(); ++i) {
        const json &jp = jprojs[i];
        std::string where = "projectors[" + std::to_string(i) + "]";
        if (!jp.is_object()) {
            fail(where, "expected an object");
        }
        reject_unknown(jp, {"label", "state"}, where, options);
        const json &jl = require(jp, "label", where);
        if (!jl.is_string() || jl.get<std::string>().empty()) {
            fail(where, "label must be a nonempty string");
        }
        auto label = jl.get<std::string>();
        if (!labels.insert(label).second) {
            fail(where, "duplicate label \"" + label + "\"");
        }
        where += " '" + label + "'";
        projectors.emplace_back(label, decode_state(require(jp, "state", where), dim, where, options));
    }

    std::vector<Context> contexts;
    if (auto it = root.find("contexts"); it != root.end()) {
        if (!it->is_array()) {
            fail("contexts", "expected an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            contexts.push_back({decode_labels((*it)[i], label_pair_where("contexts", i))});
        }
    }

    std::vector<ExclusivePair> pairs;
    if (auto it = root.find("exclusive_pairs"); it != root.end()) {
        if (!it->is_array()) {
            fail("exclusive_pairs", "expected an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            auto where = label_pair_where("exclusive_pairs", i);
            auto ls = decode_labels((*it)[i], where);
            if (ls.size() != 2) {
                fail(where, "exclusive pair must have exactly two labels");
            }
            pairs.push_back({ls[0], ls[1]});
        }
    }

    std::map<std::string, std::string> metadata;
    if (auto it = root.find("metadata"); it != root.end()) {
        if (!it->is_object()) {
            fail("metadata", "expected an object");
        }
        for (const auto &[key, value] : it->items()) {
            if (!value.is_string()) {
                fail("metadata." + key, "metadata values must be strings");
            }
            metadata[key] = value.get<std::string>();
        }
    }

    return PrePostScenario{dim,
                           std::move(pre),
                           std::move(post),
                           std::move(projectors),
                           std::move(contexts),
                           std::move(pairs),
                           std::move(metadata)};
}

}  // namespace

std::string save(const PrePostScenario &s) {
    json root;
    root["dim"] = s.dim;
    root["pre"] = encode_state(s.pre);
    root["post"] = encode_state(s.post);
    root["projectors"] = json::array();
    for (const auto &p : s.projectors) {
        root["projectors"].push_back({{"label", p.label()}, {"state", encode_state(p.state())}});
    }
    root["contexts"] = json::array();
    for (const auto &c : s.contexts) {
        root["contexts"].push_back(c.members);
    }
    root["exclusive_pairs"] = json::array();
    for (const auto &p : s.exclusive_pairs) {
        root["exclusive_pairs"].push_back({p.first, p.second});
    }
    root["metadata"] = json::object();
    for (const auto &[k, v] : s.metadata) {
        root["metadata"][k] = v;
    }
    return root.dump(2) + "\n";
}

PrePostScenario load(std::string_view text, const LoadOptions &options) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("syntax error at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    return decode(root, options);
}

void save_file(const PrePostScenario &s, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << save(s);
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

PrePostScenario load_file(const std::filesystem::path &path, const LoadOptions &options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load(buf.str(), options);
}

}  // namespace nchv
