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

#include "nchv/optimizer.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "nchv/constructions.h"
#include "nchv/errors.h"

namespace nchv {

double OptimizationResult::parameter(const std::string &name) const {
    for (const auto &[k, v] : parameters) {
        if (k == name) {
            return v;
        }
    }
    throw std::out_of_range("no parameter named '" + name + "'");
}

namespace {

struct Evaluation {
    double value;
    std::uint64_t cost;
};

using Objective = std::function<Evaluation(const std::vector<double> &)>;

struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    double widest() const {
        double w = 0.0;
        for (std::size_t d = 0; d < lo.size(); ++d) {
            w = std::max(w, hi[d] - lo[d]);
        }
        return w;
    }
};

void check_options(const SearchOptions &o) {
    if (o.grid < 16) {
        throw DomainError("grid must be >= 16, got " + std::to_string(o.grid));
    }
    if (!(o.refine_tol > 0.0)) {
        throw DomainError("refine tolerance must be positive");
    }
    if (o.max_iterations < 1) {
        throw DomainError("iteration cap must be >= 1");
    }
}

/// Point `flat` of the grid^d cell-center lattice over `box`.
std::vector<double> lattice_point(const Box &box, int grid, std::size_t flat) {
    std::vector<double> x(box.lo.size());
    for (std::size_t d = x.size(); d-- > 0;) {
        auto k = static_cast<double>(flat % static_cast<std::size_t>(grid));
        flat /= static_cast<std::size_t>(grid);
        x[d] = box.lo[d] + (k + 0.5) * (box.hi[d] - box.lo[d]) / grid;
    }
    return x;
}

bool better(double value, const std::vector<double> &x, double best, const std::vector<double> &best_x) {
    if (value != best) {
        return value > best;
    }
    return x < best_x;
}

OptimizationResult grid_refine(const Box &domain, const Objective &objective, const SearchOptions &o) {
    check_options(o);
    const std::size_t dims = domain.lo.size();
    std::size_t points = 1;
    for (std::size_t d = 0; d < dims; ++d) {
        points *= static_cast<std::size_t>(o.grid);
    }

    OptimizationResult result;
    result.grid_resolution = o.grid;
    result.refine_tolerance = o.refine_tol;

    Box box = domain;
    double best = -1.0;
    std::vector<double> best_x;
    std::vector<double> values(points);
    std::vector<std::uint64_t> costs(points);

    while (true) {
        if (result.iterations >= o.max_iterations) {
            throw ConvergenceFailure("refinement did not reach box size " + std::to_string(o.refine_tol) +
                                     " within " + std::to_string(o.max_iterations) + " iterations (box " +
                                     std::to_string(box.widest()) + ")");
        }
        unsigned threads = std::max(1u, std::min<unsigned>(o.threads, 64));
        auto sweep = [&](unsigned t) {
            std::size_t lo = points * t / threads;
            std::size_t hi = points * (t + 1) / threads;
            for (std::size_t i = lo; i < hi; ++i) {
                Evaluation e = objective(lattice_point(box, o.grid, i));
                values[i] = e.value;
                costs[i] = e.cost;
            }
        };
        if (threads == 1) {
            sweep(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back(sweep, t);
            }
        }
        for (std::size_t i = 0; i < points; ++i) {
            result.evaluations += costs[i];
            auto x = lattice_point(box, o.grid, i);
            if (best_x.empty() || better(values[i], x, best, best_x)) {
                best = values[i];
                best_x = std::move(x);
            }
        }
        ++result.iterations;
        result.history.push_back(best);

        for (std::size_t d = 0; d < dims; ++d) {
            double cell = (box.hi[d] - box.lo[d]) / o.grid;
            box.lo[d] = std::max(domain.lo[d], best_x[d] - cell);
            box.hi[d] = std::min(domain.hi[d], best_x[d] + cell);
        }
        if (box.widest() < o.refine_tol) {
            break;
        }
    }
    result.objective = best;
    result.final_box = box.widest();
    for (double x : best_x) {
        result.parameters.emplace_back("", x);
    }
    return result;
}

}  // namespace

OptimizationResult maximize_hardy(const SearchOptions &options) {
    Box domain{{0.0, 0.0}, {std::numbers::pi / 2.0, std::numbers::pi / 2.0}};
    auto result = grid_refine(
        domain,
        [](const std::vector<double> &x) { return Evaluation{hardy_selection_probability(x[0], x[1]), 1}; },
        options);
    result.parameters[0].first = "theta_a";
    result.parameters[1].first = "theta_b";
    return result;
}

FamilyFeasibility solve_family_feasibility(double c, double exclusivity_tol, int p_grid) {
    if (!(c > 0.0 && c < 1.0)) {
        throw DomainError("feasibility requires 0 < c < 1");
    }
    if (p_grid < 3) {
        throw DomainError("p grid needs at least three points");
    }
    std::uint64_t evals = 0;
    auto overlap = [&](double p) {
        ++evals;
        return cabello_family(c, p).delta_overlap_signed;
    };

    std::vector<double> ps(static_cast<std::size_t>(p_grid));
    std::vector<double> ds(ps.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        ps[i] = (static_cast<double>(i) + 0.5) / p_grid;
        ds[i] = overlap(ps[i]);
        if (ds[i] < ds[j]) {
            j = i;
        }
    }

    // Bisect on the sign of the central-difference slope inside the bracketing cells.
    double lo = j > 0 ? ps[j - 1] : ps[j] / 2.0;
    double hi = j + 1 < ps.size() ? ps[j + 1] : (ps[j] + 1.0) / 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        double h = std::min({1e-6, mid / 2.0, (1.0 - mid) / 2.0});
        if (overlap(mid + h) - overlap(mid - h) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    double p = 0.5 * (lo + hi);
    double d = overlap(p);

    if (d < -exclusivity_tol) {
        // Two roots straddle the minimum; take the one above it.
        double left = p;
        double right = 1.0 - 1e-12;
        for (std::size_t i = j + 1; i < ps.size(); ++i) {
            if (ds[i] > 0.0) {
                right = ps[i];
                break;
            }
        }
        for (int it = 0; it < 200 && right - left > 1e-16; ++it) {
            double mid = 0.5 * (left + right);
            if (overlap(mid) < 0.0) {
                left = mid;
            } else {
                right = mid;
            }
        }
        p = 0.5 * (left + right);
        d = overlap(p);
    }
    return FamilyFeasibility{p, std::abs(d), std::abs(d) < exclusivity_tol, evals};
}

OptimizationResult maximize_cabello_family(const SearchOptions &options) {
    const double tol = options.exclusivity_tol;
    const int p_grid = options.grid;
    Box domain{{0.0}, {1.0}};
    auto result = grid_refine(
        domain,
        [tol, p_grid](const std::vector<double> &x) {
            FamilyFeasibility f = solve_family_feasibility(x[0], tol, p_grid);
            return Evaluation{f.feasible ? x[0] * x[0] : 0.0, f.evaluations};
        },
        options);
    double c = result.parameters[0].second;
    FamilyFeasibility f = solve_family_feasibility(c, tol, p_grid);
    result.evaluations += f.evaluations;
    result.parameters = {{"c", c}, {"p", f.p}};
    result.exclusivity_tol = tol;
    return result;
}

}  // namespace nchv
