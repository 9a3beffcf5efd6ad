#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patchlab/design.hpp"
#include "patchlab/numeric.hpp"
#include "patchlab/types.hpp"

namespace patchlab {

/// Area scores are normalized by the benchmark ground plane (400 mm^2).
inline constexpr double kReferenceGroundArea = 400e-6;  // m^2

/// Small design space: discrete laminate permittivities, a continuous height
/// interval, and the resonance target.
struct SearchSpace {
    std::vector<double> eps_r_choices;
    double h_min;  ///< m
    double h_max;  ///< m
    double f0_target;  ///< Hz
    std::optional<double> max_footprint;  ///< m^2, ground-plane area cap
};

/// Scalarization weights; non-negative and not all zero. Lower objective wins.
struct Weights {
    double bandwidth = 1.0;
    double area = 0.0;
};

struct Candidate {
    Substrate substrate;
    DesignResult design;
    double objective;
    std::map<std::string, double> metrics;
};

namespace detail {

inline void check_weights(const Weights& w) {
    if (w.bandwidth < 0.0 || w.area < 0.0 || (w.bandwidth == 0.0 && w.area == 0.0)) {
        throw std::invalid_argument("weights must be non-negative and not all zero");
    }
}

inline void check_space(const SearchSpace& space) {
    if (space.eps_r_choices.empty()) {
        throw std::invalid_argument("search space has no permittivity choices");
    }
    if (!(space.h_min > 0.0) || !(space.h_min <= space.h_max)) {
        throw std::invalid_argument("search space height interval is invalid");
    }
}

}  // namespace detail

/// Scores one substrate against the target: objective =
/// w_bw * (-B) + w_area * (ground_side^2 / reference area). Deterministic;
/// every metric re-derives from the closed-form design chain.
inline Candidate evaluate(const Substrate& substrate, double f0_target, const Weights& weights) {
    detail::check_weights(weights);
    DesignResult design = synthesize(f0_target, substrate);
    const double footprint = design.ground_side * design.ground_side;
    const double objective = weights.bandwidth * (-design.fractional_bandwidth) +
                             weights.area * (footprint / kReferenceGroundArea);
    std::map<std::string, double> metrics{
        {"fractional_bandwidth", design.fractional_bandwidth},
        {"footprint_m2", footprint},
        {"w_over_l", design.geometry.w / design.geometry.l},
    };
    return Candidate{substrate, std::move(design), objective, std::move(metrics)};
}

/// Enumerates the eps_r choices against a uniform n_h-point height grid and
/// returns candidates sorted ascending by objective (ties: smaller h, then
/// smaller eps_r). Candidates over the footprint cap are dropped.
inline std::vector<Candidate> grid_search(const SearchSpace& space, const Weights& weights,
                                          int n_h) {
    detail::check_space(space);
    detail::check_weights(weights);
    if (n_h < 2) {
        throw std::invalid_argument("grid_search: need at least 2 height samples");
    }
    std::vector<Candidate> candidates;
    const double dh = (space.h_max - space.h_min) / (n_h - 1);
    for (double eps_r : space.eps_r_choices) {
        for (int i = 0; i < n_h; ++i) {
            const double h = (i == n_h - 1) ? space.h_max : space.h_min + i * dh;
            Candidate c = evaluate(Substrate(eps_r, h), space.f0_target, weights);
            if (space.max_footprint && c.metrics.at("footprint_m2") > *space.max_footprint) {
                continue;
            }
            candidates.push_back(std::move(c));
        }
    }
    if (candidates.empty()) {
        throw std::domain_error("grid_search: no feasible candidate in the space");
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                         if (a.objective != b.objective) return a.objective < b.objective;
                         if (a.substrate.h != b.substrate.h) return a.substrate.h < b.substrate.h;
                         return a.substrate.eps_r < b.substrate.eps_r;
                     });
    return candidates;
}

/// Golden-section refinement of the height inside [h_lo, h_hi] for the best
/// permittivity choice (selected at the bracket midpoint). Returns the
/// candidate at the final bracket midpoint.
inline Candidate refine_h(const SearchSpace& space, const Weights& weights, double h_lo,
                          double h_hi, double tol) {
    detail::check_space(space);
    detail::check_weights(weights);
    if (!(tol > 0.0)) {
        throw std::invalid_argument("refine_h: tol must be positive");
    }
    if (!(h_lo >= space.h_min && h_hi <= space.h_max && h_lo <= h_hi)) {
        throw std::invalid_argument("refine_h: bracket must lie inside the height range");
    }
    const double mid = 0.5 * (h_lo + h_hi);
    double best_eps = space.eps_r_choices.front();
    double best_obj = evaluate(Substrate(best_eps, mid), space.f0_target, weights).objective;
    for (double eps_r : space.eps_r_choices) {
        const double obj = evaluate(Substrate(eps_r, mid), space.f0_target, weights).objective;
        if (obj < best_obj || (obj == best_obj && eps_r < best_eps)) {
            best_obj = obj;
            best_eps = eps_r;
        }
    }
    if (h_hi - h_lo < tol) {
        return evaluate(Substrate(best_eps, mid), space.f0_target, weights);
    }
    const double h_star = golden_section_minimize(
        [&](double h) {
            return evaluate(Substrate(best_eps, h), space.f0_target, weights).objective;
        },
        h_lo, h_hi, tol);
    return evaluate(Substrate(best_eps, h_star), space.f0_target, weights);
}

}  // namespace patchlab
