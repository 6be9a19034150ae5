#include "moead/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moead {

std::vector<int> select_pool(int i, const WeightSet& weights, double delta, Rng& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) < delta) return weights.neighborhoods.at(i);
    std::vector<int> all(weights.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

std::pair<int, int> draw_donors(int i, const std::vector<int>& pool, Rng& rng) {
    std::vector<int> donors;
    donors.reserve(pool.size());
    for (int idx : pool) {
        if (idx != i) donors.push_back(idx);
    }
    if (donors.size() < 2) throw std::invalid_argument("de_mutation: pool too small");

    std::uniform_int_distribution<std::size_t> pick_b(0, donors.size() - 1);
    const std::size_t bi = pick_b(rng);
    std::uniform_int_distribution<std::size_t> pick_c(0, donors.size() - 2);
    std::size_t ci = pick_c(rng);
    if (ci >= bi) ++ci;
    return {donors[bi], donors[ci]};
}

Vector de_combine(const Vector& xi, const Vector& xb, const Vector& xc, double F) {
    Vector v(xi.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = xi[k] + F * (xb[k] - xc[k]);
    return v;
}

Vector de_mutation(const std::vector<Vector>& population, int i, const std::vector<int>& pool,
                   double F, Rng& rng) {
    const auto [b, c] = draw_donors(i, pool, rng);
    return de_combine(population[i], population[b], population[c], F);
}

Vector polynomial_mutation(Vector x, const std::vector<Bounds>& bounds, double eta_m,
                           double pm_prob, Rng& rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (uniform(rng) >= pm_prob) continue;
        const double lo = bounds[k].lower;
        const double hi = bounds[k].upper;
        const double range = hi - lo;
        const double u = uniform(rng);
        const double mpow = 1.0 / (eta_m + 1.0);
        double dq;
        if (u < 0.5) {
            const double d1 = (x[k] - lo) / range;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta_m + 1.0);
            dq = std::pow(val, mpow) - 1.0;
        } else {
            const double d2 = (hi - x[k]) / range;
            const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta_m + 1.0);
            dq = 1.0 - std::pow(val, mpow);
        }
        x[k] = std::clamp(x[k] + dq * range, lo, hi);
    }
    return x;
}

Vector repair_bounds(Vector x, const std::vector<Bounds>& bounds) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = std::clamp(x[k], bounds[k].lower, bounds[k].upper);
    }
    return x;
}

}  // namespace moead
