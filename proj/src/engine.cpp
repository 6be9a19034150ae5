#include "moead/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moead {

void validate(const AlgoConfig& config) {
    if (config.pop_size < 4) throw std::invalid_argument("config: pop_size must be >= 4");
    if (config.T < 1 || config.T > config.pop_size) {
        throw std::invalid_argument("config: T must be in [1, pop_size]");
    }
    if (config.nr < 1) throw std::invalid_argument("config: nr must be >= 1");
    if (config.update == UpdateStrategy::Restricted &&
        (config.tr < 1 || static_cast<std::size_t>(config.tr) > config.T)) {
        throw std::invalid_argument("config: tr must be in [1, T]");
    }
    if (config.delta < 0.1 || config.delta > 1.0) {
        throw std::invalid_argument("config: delta must be in [0.1, 1]");
    }
    if (config.de_f < 0.1 || config.de_f > 1.0) {
        throw std::invalid_argument("config: de_F must be in [0.1, 1]");
    }
    if (config.pm_eta < 1.0 || config.pm_eta > 100.0) {
        throw std::invalid_argument("config: pm_eta must be in [1, 100]");
    }
    if (config.pm_prob < 0.0 || config.pm_prob > 1.0) {
        throw std::invalid_argument("config: pm_prob must be in [0, 1]");
    }
    if (config.ra.partial && (config.ra.fraction <= 0.0 || config.ra.fraction > 1.0)) {
        throw std::invalid_argument("config: RA fraction must be in (0, 1]");
    }
    if (config.restart.enabled && config.restart.every == 0) {
        throw std::invalid_argument("config: restart period must be positive");
    }
    if (config.budget < config.pop_size) {
        throw std::invalid_argument("config: budget must cover population initialization");
    }
}

namespace {

struct ScaleBounds {
    Vector lo, hi;

    Vector apply(const Vector& f) const {
        Vector out(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double range = hi[j] - lo[j];
            out[j] = range > 0.0 ? (f[j] - lo[j]) / range : 0.0;
        }
        return out;
    }
};

ScaleBounds scaling_bounds(const std::vector<Solution>& population, const ParetoSet& archive) {
    const std::size_t m = population.front().f.size();
    ScaleBounds b;
    b.lo.assign(m, std::numeric_limits<double>::infinity());
    b.hi.assign(m, -std::numeric_limits<double>::infinity());
    auto absorb = [&](const Vector& f) {
        for (std::size_t j = 0; j < m; ++j) {
            b.lo[j] = std::min(b.lo[j], f[j]);
            b.hi[j] = std::max(b.hi[j], f[j]);
        }
    };
    for (const auto& s : population) absorb(s.f);
    for (const auto& s : archive.members()) absorb(s.f);
    return b;
}

std::vector<int> apply_replacements(const Solution& candidate, std::vector<Solution>& population,
                                    const WeightSet& weights, const IdealPoint& z,
                                    Aggregation agg, int nr, unsigned generation,
                                    const PenaltySchedule& sched,
                                    const std::vector<int>& eligible) {
    std::vector<std::pair<double, int>> gains;
    gains.reserve(eligible.size());
    for (int j : eligible) {
        const Vector& lambda = weights.vectors[j];
        const double incumbent =
            penalized(aggregate(agg, population[j].f_scaled, lambda, z.z()), generation,
                      population[j].violation, sched);
        const double challenger =
            penalized(aggregate(agg, candidate.f_scaled, lambda, z.z()), generation,
                      candidate.violation, sched);
        const double gain = incumbent - challenger;
        if (gain > 0.0) gains.emplace_back(gain, j);
    }
    std::sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<int> replaced;
    const std::size_t cap = std::min<std::size_t>(gains.size(), static_cast<std::size_t>(nr));
    for (std::size_t k = 0; k < cap; ++k) {
        const int j = gains[k].second;
        population[j] = candidate;
        replaced.push_back(j);
    }
    return replaced;
}

}  // namespace

std::vector<int> update_best(const Solution& candidate, std::vector<Solution>& population,
                             const WeightSet& weights, const IdealPoint& z, Aggregation agg,
                             int nr, unsigned generation, const PenaltySchedule& sched) {
    std::vector<int> all(population.size());
    for (std::size_t j = 0; j < population.size(); ++j) all[j] = static_cast<int>(j);
    return apply_replacements(candidate, population, weights, z, agg, nr, generation, sched, all);
}

std::vector<int> update_restricted(const Solution& candidate, int origin,
                                   std::vector<Solution>& population, const WeightSet& weights,
                                   const IdealPoint& z, Aggregation agg, int nr, int tr,
                                   unsigned generation, const PenaltySchedule& sched) {
    const auto& hood = weights.neighborhoods.at(origin);
    if (static_cast<std::size_t>(tr) > hood.size()) {
        throw std::invalid_argument("update_restricted: tr exceeds neighborhood size");
    }
    std::vector<int> eligible(hood.begin(), hood.begin() + tr);
    return apply_replacements(candidate, population, weights, z, agg, nr, generation, sched,
                              eligible);
}

namespace {

class RunContext {
public:
    RunContext(const AlgoConfig& config, const ProblemSpec& problem, std::uint32_t run_id)
        : config_(config),
          problem_(problem),
          run_id_(run_id),
          rng_(config.seed),
          sched_{},
          z_(problem.objectives()) {}

    RunResult execute() {
        initialize();
        while (evals_ < config_.budget) {
            ++generation_;
            bounds_ = scaling_bounds(population_, archive_);
            rescale_population();
            const auto subset = pick_update_subset();
            for (int i : subset) {
                if (evals_ >= config_.budget) break;
                generate_and_update(i);
            }
            maybe_restart();
            log_generation_front();
        }
        RunResult result;
        result.log = std::move(log_);
        result.archive = std::move(archive_);
        result.population = std::move(population_);
        result.scale_min = bounds_.lo;
        result.scale_max = bounds_.hi;
        result.evaluations = evals_;
        result.generations = generation_;
        return result;
    }

private:
    Vector random_point() {
        Vector x(problem_.dim());
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        for (std::size_t k = 0; k < x.size(); ++k) {
            const auto& b = problem_.bounds()[k];
            x[k] = b.lower + uniform(rng_) * (b.upper - b.lower);
        }
        return x;
    }

    Solution evaluate(Vector x) {
        const Evaluation ev = problem_.evaluate(x);
        ++evals_;
        Solution s;
        s.x = std::move(x);
        s.f = ev.f;
        s.violation = total_violation(ev.g);
        s.eval_index = evals_;
        s.run_id = run_id_;
        return s;
    }

    void archive_insert(const Solution& s) {
        if (!s.feasible()) return;
        if (!archive_.insert(s)) return;
        RunLogRecord r;
        r.run_id = run_id_;
        r.generation = generation_;
        r.eval_index = s.eval_index;
        r.subproblem_id = kArchiveEntry;
        r.x = s.x;
        r.f = s.f;
        r.violation = s.violation;
        r.feasible = true;
        log_.records.push_back(std::move(r));
    }

    void initialize() {
        const std::size_t n = config_.pop_size;
        next_restart_ = config_.restart.every;
        weights_ = make_weight_set(config_.decomp, problem_.objectives(), n, config_.T,
                                   config_.seed);
        population_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) population_.push_back(evaluate(random_point()));
        for (const auto& s : population_) archive_insert(s);
        bounds_ = scaling_bounds(population_, archive_);
        rescale_population();
        log_generation_front();
    }

    void rescale_population() {
        for (auto& s : population_) {
            s.f_scaled = bounds_.apply(s.f);
            z_.update(s.f_scaled);
        }
    }

    std::vector<int> pick_update_subset() {
        std::vector<int> all(population_.size());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<int>(j);
        if (!config_.ra.partial) return all;
        const auto count = static_cast<std::size_t>(
            std::ceil(config_.ra.fraction * static_cast<double>(population_.size())));
        std::vector<int> subset;
        subset.reserve(count);
        std::sample(all.begin(), all.end(), std::back_inserter(subset), count, rng_);
        return subset;
    }

    void generate_and_update(int i) {
        std::vector<int> pool = select_pool(i, weights_, config_.delta, rng_);
        std::size_t donors = 0;
        for (int idx : pool) {
            if (idx != i) ++donors;
        }
        if (donors < 2) {
            pool.resize(population_.size());
            for (std::size_t j = 0; j < pool.size(); ++j) pool[j] = static_cast<int>(j);
        }
        const auto [b, c] = draw_donors(i, pool, rng_);
        Vector y = de_combine(population_[i].x, population_[b].x, population_[c].x, config_.de_f);
        y = polynomial_mutation(std::move(y), problem_.bounds(), config_.pm_eta, config_.pm_prob,
                                rng_);
        y = repair_bounds(std::move(y), problem_.bounds());

        Solution candidate = evaluate(std::move(y));
        candidate.f_scaled = bounds_.apply(candidate.f);
        z_.update(candidate.f_scaled);

        if (config_.update == UpdateStrategy::Best) {
            update_best(candidate, population_, weights_, z_, config_.aggregation, config_.nr,
                        generation_, sched_);
        } else {
            update_restricted(candidate, i, population_, weights_, z_, config_.aggregation,
                              config_.nr, config_.tr, generation_, sched_);
        }
        archive_insert(candidate);
    }

    void maybe_restart() {
        if (!config_.restart.enabled) return;
        if (evals_ < next_restart_) return;
        if (evals_ >= config_.budget) return;
        if (config_.budget - evals_ < config_.pop_size) return;
        for (auto& slot : population_) {
            Solution fresh = evaluate(random_point());
            fresh.f_scaled = bounds_.apply(fresh.f);
            z_.update(fresh.f_scaled);
            archive_insert(fresh);
            slot = std::move(fresh);
        }
        while (next_restart_ <= evals_) next_restart_ += config_.restart.every;
    }

    void log_generation_front() {
        // A population member is logged when no other member dominates it and
        // no earlier member carries the same objective vector.
        const std::size_t n = population_.size();
        for (std::size_t j = 0; j < n; ++j) {
            bool keep = true;
            for (std::size_t k = 0; k < n && keep; ++k) {
                if (k == j) continue;
                if (dominates(population_[k].f, population_[j].f)) keep = false;
                if (population_[k].f == population_[j].f &&
                    (population_[k].eval_index < population_[j].eval_index ||
                     (population_[k].eval_index == population_[j].eval_index && k < j))) {
                    keep = false;
                }
            }
            if (!keep) continue;
            RunLogRecord r;
            r.run_id = run_id_;
            r.generation = generation_;
            r.eval_index = evals_;
            r.subproblem_id = static_cast<std::int32_t>(j);
            r.x = population_[j].x;
            r.f = population_[j].f;
            r.violation = population_[j].violation;
            r.feasible = population_[j].feasible();
            log_.records.push_back(std::move(r));
        }
    }

    const AlgoConfig& config_;
    const ProblemSpec& problem_;
    std::uint32_t run_id_;
    Rng rng_;
    PenaltySchedule sched_;
    WeightSet weights_;
    std::vector<Solution> population_;
    ParetoSet archive_;
    IdealPoint z_;
    ScaleBounds bounds_;
    RunLog log_;
    std::uint64_t evals_ = 0;
    std::uint32_t generation_ = 0;
    std::uint64_t next_restart_ = 0;
};

}  // namespace

RunResult run(const AlgoConfig& config, const ProblemSpec& problem, std::uint32_t run_id) {
    validate(config);
    RunContext ctx(config, problem, run_id);
    return ctx.execute();
}

std::string to_string(DecompKind k) {
    return k == DecompKind::Sld ? "sld" : "sobol";
}

std::string to_string(UpdateStrategy u) {
    return u == UpdateStrategy::Best ? "best" : "restricted";
}

DecompKind decomp_from_string(const std::string& s) {
    if (s == "sld") return DecompKind::Sld;
    if (s == "sobol") return DecompKind::Sobol;
    throw std::invalid_argument("unknown decomposition: " + s);
}

UpdateStrategy update_from_string(const std::string& s) {
    if (s == "best") return UpdateStrategy::Best;
    if (s == "restricted") return UpdateStrategy::Restricted;
    throw std::invalid_argument("unknown update strategy: " + s);
}

}  // namespace moead
