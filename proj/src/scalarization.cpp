#include "moead/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moead {

void IdealPoint::update(const Vector& f_scaled) {
    if (z_.empty()) z_.assign(f_scaled.size(), std::numeric_limits<double>::infinity());
    if (f_scaled.size() != z_.size()) {
        throw std::invalid_argument("IdealPoint::update: length mismatch");
    }
    for (std::size_t j = 0; j < z_.size(); ++j) z_[j] = std::min(z_[j], f_scaled[j]);
}

double weighted_tchebycheff(const Vector& f_scaled, const Vector& lambda, const Vector& z) {
    if (f_scaled.size() != lambda.size() || f_scaled.size() != z.size()) {
        throw std::invalid_argument("weighted_tchebycheff: length mismatch");
    }
    double best = 0.0;
    for (std::size_t j = 0; j < f_scaled.size(); ++j) {
        best = std::max(best, lambda[j] * std::abs(f_scaled[j] - z[j]));
    }
    return best;
}

double adjusted_weighted_tchebycheff(const Vector& f_scaled, const Vector& lambda,
                                     const Vector& z) {
    if (f_scaled.size() != lambda.size() || f_scaled.size() != z.size()) {
        throw std::invalid_argument("adjusted_weighted_tchebycheff: length mismatch");
    }
    constexpr double eps = 1e-6;
    Vector adjusted(lambda.size());
    double total = 0.0;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        adjusted[j] = 1.0 / std::max(lambda[j], eps);
        total += adjusted[j];
    }
    for (double& w : adjusted) w /= total;
    return weighted_tchebycheff(f_scaled, adjusted, z);
}

double aggregate(Aggregation kind, const Vector& f_scaled, const Vector& lambda,
                 const Vector& z) {
    return kind == Aggregation::WT ? weighted_tchebycheff(f_scaled, lambda, z)
                                   : adjusted_weighted_tchebycheff(f_scaled, lambda, z);
}

double penalized(double g_agg, unsigned generation, double violation,
                 const PenaltySchedule& sched) {
    const double factor = std::pow(sched.c * static_cast<double>(generation), sched.alpha);
    return g_agg + factor * violation;
}

Aggregation aggregation_from_string(const std::string& s) {
    if (s == "wt") return Aggregation::WT;
    if (s == "awt") return Aggregation::AWT;
    throw std::invalid_argument("unknown aggregation: " + s);
}

std::string to_string(Aggregation a) {
    return a == Aggregation::WT ? "wt" : "awt";
}

}  // namespace moead
