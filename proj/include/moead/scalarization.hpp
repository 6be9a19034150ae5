#pragma once

#include <string>

#include "moead/core.hpp"

namespace moead {

enum class Aggregation { WT, AWT };

/// Dynamic penalty constants: penalty term (c * t)^alpha * v at generation t.
struct PenaltySchedule {
    double c = 5.0;
    double alpha = 2.0;
};

/// Running component-wise minimum of scaled objective vectors.
class IdealPoint {
public:
    IdealPoint() = default;
    explicit IdealPoint(std::size_t m)
        : z_(m, std::numeric_limits<double>::infinity()) {}

    void update(const Vector& f_scaled);
    const Vector& z() const { return z_; }

private:
    Vector z_;
};

/// Weighted Tchebycheff: max_j lambda_j * |f_j - z_j|.
double weighted_tchebycheff(const Vector& f_scaled, const Vector& lambda, const Vector& z);

/// Weighted Tchebycheff with reciprocal-normalized weights
/// lambda'_j = (1/max(lambda_j, eps)) / sum_k (1/max(lambda_k, eps)).
double adjusted_weighted_tchebycheff(const Vector& f_scaled, const Vector& lambda,
                                     const Vector& z);

double aggregate(Aggregation kind, const Vector& f_scaled, const Vector& lambda, const Vector& z);

/// g_agg + (c * t)^alpha * v.
double penalized(double g_agg, unsigned generation, double violation,
                 const PenaltySchedule& sched = {});

Aggregation aggregation_from_string(const std::string& s);
std::string to_string(Aggregation a);

}  // namespace moead
