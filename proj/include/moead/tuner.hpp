#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moead/config_io.hpp"
#include "moead/engine.hpp"
#include "moead/operators.hpp"

namespace moead::tuner {

struct Condition {
    std::string param;
    std::string equals;
};

struct Parameter {
    enum class Kind { Categorical, Real, Integer };

    std::string name;
    Kind kind = Kind::Categorical;
    std::vector<std::string> values;  // categorical
    double lo = 0.0, hi = 0.0;        // numeric interval
    std::optional<Condition> condition;
};

/// Declarative configuration space with conditional parameters. Every
/// AlgoConfig field is covered by exactly one parameter; inactive
/// conditional parameters carry the sentinel "-".
struct ParamSpace {
    std::vector<Parameter> parameters;

    const Parameter* find(const std::string& name) const;
    void validate() const;  ///< throws on unknown/cyclic conditions or missing coverage
};

/// The component search space: decomposition generator, population size,
/// aggregation, update strategy, neighborhood, operators, RA and restart.
ParamSpace default_space();

ParamSpace space_from_doc(const KvDoc& doc);
KvDoc space_to_doc(const ParamSpace& space);

/// Named parameter values of a config; inactive conditionals map to "-".
std::map<std::string, std::string> params_of(const AlgoConfig& config);

/// Inverse of params_of; budget and seed are taken from `base`.
AlgoConfig config_from_params(const std::map<std::string, std::string>& values,
                              const AlgoConfig& base);

/// Independent uniform draw per parameter, conditions respected.
AlgoConfig sample_config(const ParamSpace& space, Rng& rng);

struct Instance {
    std::string problem;
    std::uint64_t seed = 0;
};

struct RaceOptions {
    std::size_t budget_runs = 200;   ///< total algorithm runs the race may spend
    std::size_t elites = 7;          ///< stop eliminating at this many survivors
    double alpha = 0.05;
    std::uint64_t run_budget = 5000; ///< evaluations per run
    std::uint64_t stride = 1000;     ///< anytime checkpoint stride
    std::size_t min_instances = 5;   ///< instances before the first statistical test
};

struct RaceResult {
    struct Standing {
        std::size_t entrant = 0;
        double mean_rank = 0.0;
    };
    std::vector<Standing> ranking;  ///< survivors, best mean rank first
    std::vector<std::pair<std::size_t, std::size_t>> eliminated;  ///< (entrant, round)
    std::vector<std::vector<double>> scores;  ///< entrant x instance, NaN when not run
    std::size_t runs_used = 0;
    std::size_t instances_used = 0;
};

/// Iterated elimination race. Scores are anytime-hypervolume AUC (higher is
/// better); after each instance a Friedman test across the surviving
/// configurations gates pairwise sign tests against the incumbent best.
/// Throws std::invalid_argument when the budget cannot cover one instance.
RaceResult race(const std::vector<AlgoConfig>& entrants, const std::vector<Instance>& instances,
                const RaceOptions& options = {});

struct TuneOptions {
    RaceOptions race;
    std::size_t iterations = 2;
    std::size_t entrants_per_iteration = 8;
    std::uint64_t seed = 1;
};

struct TuneResult {
    AlgoConfig best;
    std::vector<RaceResult> races;
    std::vector<std::vector<AlgoConfig>> entrants;  ///< per race
};

/// Iterated racing: each iteration races a fresh set of entrants built from
/// the previous survivors plus Gaussian perturbations of them (sigma = 10%
/// of each numeric range, clipped).
TuneResult tune(const ParamSpace& space, const std::vector<Instance>& instances,
                const TuneOptions& options = {});

struct AblationStep {
    std::string parameter;
    std::string from_value;
    std::string to_value;
    double score = 0.0;
    AlgoConfig config;  ///< configuration after the flip
};

struct AblateOptions {
    std::uint64_t run_budget = 5000;
    std::uint64_t stride = 1000;
};

/// Greedy path from source to target changing one parameter at a time,
/// always adopting the flip with the best mean score over the instances.
/// Dependent parameters (tr, ra_frac, restart_evals) ride along with their
/// controlling parameter.
std::vector<AblationStep> ablate(const AlgoConfig& source, const AlgoConfig& target,
                                 const std::vector<Instance>& instances,
                                 const AblateOptions& options = {});

/// The base configuration tuned for this framework plus its seven
/// single-component variants (decomposition, aggregation, update,
/// neighborhood, operators, no-restart, no-ra).
AlgoConfig auto_moead_base(std::uint64_t budget = 20000, std::uint64_t seed = 1);
std::vector<std::pair<std::string, AlgoConfig>> make_variants(const AlgoConfig& base);

}  // namespace moead::tuner
