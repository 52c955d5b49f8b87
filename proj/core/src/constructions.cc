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

#include "nchv/constructions.h"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "nchv/errors.h"

namespace nchv {

namespace {

Vector qubit(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

// Single-particle reference basis.
const Vector kUp = qubit(1.0, 0.0);
const Vector kDown = qubit(0.0, 1.0);

std::string shortest(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

StateVector unit(const Vector &v) {
    return StateVector::from_vector(v);
}

/// Two four-member contexts sharing the first label, plus the exclusive pair
/// formed by the two context-specific last members.
void add_double_context(PrePostScenario &s, const std::string &shared, const std::array<std::string, 3> &plus,
                        const std::array<std::string, 3> &minus) {
    s.contexts.push_back({{shared, plus[0], plus[1], plus[2]}});
    s.contexts.push_back({{shared, minus[0], minus[1], minus[2]}});
    s.exclusive_pairs.push_back({plus[2], minus[2]});
}

}  // namespace

PrePostScenario cabello_scenario() {
    const double r3 = std::sqrt(3.0);
    const double r8 = std::sqrt(8.0);

    const Vector &A = kUp, &A_perp = kDown, &B = kUp, &B_perp = kDown;
    const Vector a = (A - r8 * A_perp) / 3.0;

    PrePostScenario s{4, unit(tensor(A, B)), unit(tensor(a, B)), {}, {}, {}, {}};

    s.projectors.emplace_back("alpha", unit(tensor(A_perp, B_perp)));
    for (int sign : {+1, -1}) {
        std::string suffix = sign > 0 ? "+" : "-";
        s.projectors.emplace_back("beta" + suffix, unit((tensor(A, B_perp) + sign * r3 * tensor(A_perp, B)) / 2.0));
    }
    for (int sign : {+1, -1}) {
        std::string suffix = sign > 0 ? "+" : "-";
        s.projectors.emplace_back(
            "gamma" + suffix,
            unit((r8 * tensor(A, B) + tensor(A_perp, B) - sign * r3 * tensor(A, B_perp)) / (2.0 * r3)));
    }
    for (int sign : {+1, -1}) {
        std::string suffix = sign > 0 ? "+" : "-";
        s.projectors.emplace_back(
            "delta" + suffix,
            unit((std::sqrt(6.0) * tensor(A, B_perp) + sign * (2.0 * tensor(A, B) - std::sqrt(2.0) * tensor(A_perp, B))) /
                 (2.0 * r3)));
    }
    add_double_context(s, "alpha", {"beta+", "gamma+", "delta+"}, {"beta-", "gamma-", "delta-"});
    s.metadata["name"] = "cabello";
    s.metadata["description"] =
        "two spin-1/2 particles preselected in A(x)B and postselected in a(x)B, <a|A> = 1/3";
    return s;
}

CandidateConstruction cabello_family(double c, double p) {
    if (!(c > 0.0 && c < 1.0) || !(p > 0.0 && p < 1.0)) {
        throw DomainError("cabello_family requires 0 < c < 1 and 0 < p < 1 (got c=" + std::to_string(c) +
                          ", p=" + std::to_string(p) + ")");
    }
    const double s = std::sqrt(1.0 - c * c);
    const double q = std::sqrt(1.0 - p * p);

    auto real4 = [](double x0, double x1, double x2, double x3) {
        Vector v(4);
        v << x0, x1, x2, x3;
        return v;
    };

    PrePostScenario sc{4, unit(real4(1, 0, 0, 0)), unit(real4(c, 0, -s, 0)), {}, {}, {}, {}};
    StateVector alpha = unit(real4(0, 0, 0, 1));
    StateVector beta_p = unit(real4(0, p, q, 0));
    StateVector beta_m = unit(real4(0, p, -q, 0));
    StateVector gamma_p = StateVector::normalized(real4(s, -c * q / p, c, 0));
    StateVector gamma_m = StateVector::normalized(real4(s, c * q / p, c, 0));
    std::array<StateVector, 3> plus_set{alpha, beta_p, gamma_p};
    std::array<StateVector, 3> minus_set{alpha, beta_m, gamma_m};
    StateVector delta_p = orthocomplement_state(plus_set);
    StateVector delta_m = orthocomplement_state(minus_set);

    sc.projectors.emplace_back("alpha", alpha);
    sc.projectors.emplace_back("beta+", beta_p);
    sc.projectors.emplace_back("beta-", beta_m);
    sc.projectors.emplace_back("gamma+", gamma_p);
    sc.projectors.emplace_back("gamma-", gamma_m);
    sc.projectors.emplace_back("delta+", delta_p);
    sc.projectors.emplace_back("delta-", delta_m);
    add_double_context(sc, "alpha", {"beta+", "gamma+", "delta+"}, {"beta-", "gamma-", "delta-"});
    sc.metadata["name"] = "cabello-family";
    sc.metadata["c"] = shortest(c);
    sc.metadata["p"] = shortest(p);

    Amplitude overlap = inner(delta_p, delta_m);
    return CandidateConstruction{std::move(sc), c, p, std::abs(overlap), overlap.real()};
}

namespace {

struct HardyStates {
    std::array<StateVector, 7> props;  // alpha, beta+, beta-, gamma+, gamma-, delta+, delta-
    StateVector pre;
    StateVector post;
};

HardyStates hardy_states(double theta_a, double theta_b) {
    constexpr double kQuarter = std::numbers::pi / 2.0;
    if (!(theta_a > 0.0 && theta_a < kQuarter) || !(theta_b > 0.0 && theta_b < kQuarter)) {
        throw DegenerateConfiguration("Hardy angles must lie in the open interval (0, pi/2)");
    }
    const Vector &A = kUp, &A_perp = kDown, &B = kUp, &B_perp = kDown;
    const Vector a = qubit(std::cos(theta_a), std::sin(theta_a));
    const Vector a_perp = qubit(-std::sin(theta_a), std::cos(theta_a));
    const Vector b = qubit(std::cos(theta_b), std::sin(theta_b));
    const Vector b_perp = qubit(-std::sin(theta_b), std::cos(theta_b));

    std::array<StateVector, 7> props{
        unit(tensor(A, B)),          unit(tensor(a, B_perp)),      unit(tensor(A_perp, b)),
        unit(tensor(a_perp, B_perp)), unit(tensor(A_perp, b_perp)), unit(tensor(A_perp, B)),
        unit(tensor(A, B_perp)),
    };
    std::array<StateVector, 3> constraints{props[0], props[1], props[2]};
    StateVector pre = orthocomplement_state(constraints);
    StateVector post = unit(tensor(a, b));
    if (std::abs(inner(post, pre)) < kTolCheck) {
        throw DegenerateConfiguration("pre- and postselected states are orthogonal");
    }
    return {props, pre, post};
}

}  // namespace

PrePostScenario hardy_scenario(double theta_a, double theta_b) {
    HardyStates hs = hardy_states(theta_a, theta_b);
    PrePostScenario s{4, hs.pre, hs.post, {}, {}, {}, {}};
    const std::array<const char *, 7> labels{"alpha_hat",  "beta_hat+",  "beta_hat-", "gamma_hat+",
                                             "gamma_hat-", "delta_hat+", "delta_hat-"};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        s.projectors.emplace_back(labels[i], hs.props[i]);
    }
    add_double_context(s, "alpha_hat", {"beta_hat+", "gamma_hat+", "delta_hat+"},
                       {"beta_hat-", "gamma_hat-", "delta_hat-"});
    s.metadata["name"] = "hardy";
    s.metadata["theta_a"] = shortest(theta_a);
    s.metadata["theta_b"] = shortest(theta_b);
    return s;
}

double hardy_selection_probability(double theta_a, double theta_b) {
    try {
        HardyStates hs = hardy_states(theta_a, theta_b);
        return std::norm(inner(hs.post, hs.pre));
    } catch (const DegenerateConfiguration &) {
        return 0.0;
    }
}

PrePostScenario single_qubit_scenario(int n_contexts, std::uint64_t seed) {
    if (n_contexts < 1) {
        throw DomainError("single_qubit_scenario needs at least one context");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    auto random_state = [&] {
        Vector v(2);
        v << Amplitude(gauss(rng), gauss(rng)), Amplitude(gauss(rng), gauss(rng));
        return StateVector::normalized(v);
    };

    StateVector pre = random_state();
    StateVector post = random_state();
    while (std::abs(inner(post, pre)) < 1e-3) {
        post = random_state();
    }
    PrePostScenario s{2, pre, post, {}, {}, {}, {}};
    for (int k = 0; k < n_contexts; ++k) {
        StateVector u = random_state();
        Vector perp(2);
        perp << -std::conj(u[1]), std::conj(u[0]);
        std::string label = "u" + std::to_string(k);
        s.projectors.emplace_back(label, u);
        s.projectors.emplace_back(label + "_perp", StateVector::normalized(perp));
        s.contexts.push_back({{label, label + "_perp"}});
    }
    s.metadata["name"] = "single-qubit";
    s.metadata["seed"] = std::to_string(seed);
    return s;
}

}  // namespace nchv
