#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "moead/core.hpp"
#include "moead/problems.hpp"

namespace moead {

/// Hypervolume dominated by a minimization front relative to a reference
/// point. Points not strictly below the reference in every coordinate are
/// dropped. Exact sweep for m = 2, exact slicing for m = 3, Monte Carlo
/// (1e6 samples) for m >= 4. Empty front gives 0.
double hypervolume(const std::vector<Vector>& front, const Vector& ref);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate with standard error; independent of the exact path.
McEstimate hypervolume_mc(const std::vector<Vector>& front, const Vector& ref,
                          std::size_t samples = 1000000, std::uint64_t seed = 987654321);

/// hv / 1.1^m, the fraction of the maximum attainable value when objectives
/// lie in [0,1]^m and the reference point is 1.1 per objective.
double hv_ratio(double hv, std::size_t m);

Vector default_reference(std::size_t m);  ///< 1.1 repeated m times

struct AnytimeCurve {
    std::vector<std::pair<std::uint64_t, double>> checkpoints;
    double auc = 0.0;  ///< sum of checkpoint hypervolume values
};

/// Hypervolume of the cumulative archive at every `stride` evaluations.
/// The archive at checkpoint e is the nondominated filter of all archive
/// records with eval_index <= e; objectives are scaled by the final
/// archive's bounds so that one curve is comparable along its length.
AnytimeCurve anytime_hv(const RunLog& log, const Vector& ref, std::uint64_t budget,
                        std::uint64_t stride = 1000);

/// Mean over dimensions of the per-dimension sample variance of
/// bound-normalized decision variables. Fewer than two points give 0.
double population_variance(const std::vector<Vector>& xs, const std::vector<Bounds>& bounds);

/// Number of archive members on the Pareto front. With an analytic front the
/// test is Euclidean distance <= 1e-3 in the front's normalized objective
/// space; otherwise members must survive the nondominated filter over the
/// pooled union of all compared archives (pool required in that case).
std::size_t count_pf(const ParetoSet& archive, const ProblemSpec& problem,
                     std::span<const Solution> pool = {});

}  // namespace moead
