#pragma once

#include <random>
#include <vector>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/problems.hpp"

namespace moead {

using Rng = std::mt19937_64;

struct VariationParams {
    double de_f = 0.5;     ///< DE scale factor, [0.1, 1]
    double eta_m = 20.0;   ///< polynomial mutation distribution index, [1, 100]
    double pm_prob = 0.1;  ///< per-variable mutation probability, [0, 1]
    double delta = 0.9;    ///< neighborhood mating probability, [0.1, 1]
};

/// With probability delta the neighborhood of subproblem i, otherwise all
/// population indices.
std::vector<int> select_pool(int i, const WeightSet& weights, double delta, Rng& rng);

/// Draws the two DE donor indices b != c from the pool, excluding i.
/// Throws std::invalid_argument when fewer than two donors remain.
std::pair<int, int> draw_donors(int i, const std::vector<int>& pool, Rng& rng);

/// v = x_i + F * (x_b - x_c).
Vector de_combine(const Vector& xi, const Vector& xb, const Vector& xc, double F);

/// DE rand/1 anchored at x_i: draw_donors followed by de_combine.
Vector de_mutation(const std::vector<Vector>& population, int i, const std::vector<int>& pool,
                   double F, Rng& rng);

/// Standard polynomial mutation, each variable perturbed with probability
/// pm_prob; the result respects the bounds.
Vector polynomial_mutation(Vector x, const std::vector<Bounds>& bounds, double eta_m,
                           double pm_prob, Rng& rng);

/// Clips each coordinate into [lower, upper].
Vector repair_bounds(Vector x, const std::vector<Bounds>& bounds);

}  // namespace moead
