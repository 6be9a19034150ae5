#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/operators.hpp"
#include "moead/problems.hpp"
#include "moead/scalarization.hpp"

namespace moead {

enum class UpdateStrategy { Best, Restricted };

struct ResourceAllocation {
    bool partial = false;
    double fraction = 1.0;  ///< fraction of subproblems updated per generation, (0, 1]
};

struct RestartPolicy {
    bool enabled = false;
    std::uint64_t every = 20000;  ///< evaluations between population regenerations
};

/// One point in the component search space: fully determines an algorithm
/// instance once paired with a problem.
struct AlgoConfig {
    std::string name = "config";
    DecompKind decomp = DecompKind::Sld;
    std::size_t pop_size = 100;
    Aggregation aggregation = Aggregation::WT;
    UpdateStrategy update = UpdateStrategy::Best;
    int nr = 2;               ///< max replacements per candidate, [1, 20]
    int tr = 20;              ///< restricted-update neighborhood size, [4, 20], <= T
    std::size_t T = 20;       ///< neighborhood size, <= pop_size
    double delta = 0.9;       ///< neighborhood mating probability
    double de_f = 0.5;
    double pm_eta = 20.0;
    double pm_prob = 0.1;
    ResourceAllocation ra;
    RestartPolicy restart;
    std::uint64_t budget = 20000;
    std::uint64_t seed = 1;

    VariationParams variation() const { return {de_f, pm_eta, pm_prob, delta}; }
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const AlgoConfig& config);

struct RunResult {
    RunLog log;
    ParetoSet archive;                  ///< final UEA, feasible members only
    std::vector<Solution> population;   ///< final population, one per subproblem
    Vector scale_min, scale_max;        ///< last iteration's scaling bounds
    std::uint64_t evaluations = 0;
    std::uint32_t generations = 0;
};

/// Executes the full generational loop: init, per-iteration scaling,
/// candidate generation (DE then polynomial mutation then repair), penalized
/// update, archive maintenance, optional partial update and restarts.
/// Deterministic for a fixed seed.
RunResult run(const AlgoConfig& config, const ProblemSpec& problem, std::uint32_t run_id = 0);

/// Replaces the incumbents of the up-to-nr subproblems where the candidate
/// yields the largest strict penalized-aggregation improvement. Returns the
/// replaced subproblem indices.
std::vector<int> update_best(const Solution& candidate, std::vector<Solution>& population,
                             const WeightSet& weights, const IdealPoint& z, Aggregation agg,
                             int nr, unsigned generation, const PenaltySchedule& sched = {});

/// As update_best, but only incumbents among the tr nearest neighbors of the
/// origin subproblem may be replaced.
std::vector<int> update_restricted(const Solution& candidate, int origin,
                                   std::vector<Solution>& population, const WeightSet& weights,
                                   const IdealPoint& z, Aggregation agg, int nr, int tr,
                                   unsigned generation, const PenaltySchedule& sched = {});

std::string to_string(DecompKind k);
std::string to_string(UpdateStrategy u);
DecompKind decomp_from_string(const std::string& s);
UpdateStrategy update_from_string(const std::string& s);

}  // namespace moead
