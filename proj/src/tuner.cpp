#include "moead/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "moead/metrics.hpp"
#include "moead/problems.hpp"

namespace moead::tuner {

namespace {

constexpr const char* kInactive = "-";

}  // namespace

const Parameter* ParamSpace::find(const std::string& name) const {
    for (const auto& p : parameters) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

void ParamSpace::validate() const {
    std::set<std::string> names;
    for (const auto& p : parameters) {
        if (!names.insert(p.name).second) {
            throw std::invalid_argument("space: duplicate parameter " + p.name);
        }
    }
    for (const auto& p : parameters) {
        if (!p.condition) continue;
        const Parameter* parent = find(p.condition->param);
        if (parent == nullptr) {
            throw std::invalid_argument("space: condition of " + p.name + " references unknown parameter");
        }
        if (parent->condition) {
            throw std::invalid_argument("space: chained conditions are not supported");
        }
    }
}

ParamSpace default_space() {
    ParamSpace space;
    auto cat = [](std::string name, std::vector<std::string> values,
                  std::optional<Condition> cond = std::nullopt) {
        Parameter p;
        p.name = std::move(name);
        p.kind = Parameter::Kind::Categorical;
        p.values = std::move(values);
        p.condition = std::move(cond);
        return p;
    };
    auto num = [](std::string name, Parameter::Kind kind, double lo, double hi,
                  std::optional<Condition> cond = std::nullopt) {
        Parameter p;
        p.name = std::move(name);
        p.kind = kind;
        p.lo = lo;
        p.hi = hi;
        p.condition = std::move(cond);
        return p;
    };
    space.parameters.push_back(cat("decomp", {"sld", "sobol"}));
    space.parameters.push_back(cat("pop_size", {"100", "500"}));
    space.parameters.push_back(cat("aggregation", {"wt", "awt"}));
    space.parameters.push_back(cat("update", {"best", "restricted"}));
    space.parameters.push_back(num("nr", Parameter::Kind::Integer, 1, 20));
    space.parameters.push_back(
        num("tr", Parameter::Kind::Integer, 4, 20, Condition{"update", "restricted"}));
    space.parameters.push_back(num("T", Parameter::Kind::Integer, 10, 100));
    space.parameters.push_back(num("delta", Parameter::Kind::Real, 0.1, 1.0));
    space.parameters.push_back(num("de_F", Parameter::Kind::Real, 0.1, 1.0));
    space.parameters.push_back(num("pm_eta", Parameter::Kind::Real, 1.0, 100.0));
    space.parameters.push_back(num("pm_prob", Parameter::Kind::Real, 0.0, 1.0));
    space.parameters.push_back(cat("ra", {"off", "partial"}));
    space.parameters.push_back(
        cat("ra_frac", {"0.1", "0.15", "0.2", "0.25"}, Condition{"ra", "partial"}));
    space.parameters.push_back(cat("restart", {"off", "every"}));
    space.parameters.push_back(
        cat("restart_evals", {"20000"}, Condition{"restart", "every"}));
    space.validate();
    return space;
}

ParamSpace space_from_doc(const KvDoc& doc) {
    if (doc.format() != "space") throw std::runtime_error("not a space file");
    ParamSpace space;
    for (const auto& name : doc.section_names()) {
        if (name.rfind("param ", 0) != 0) continue;
        Parameter p;
        p.name = name.substr(6);
        const std::string type = doc.require(name, "type");
        if (type == "categorical") {
            p.kind = Parameter::Kind::Categorical;
            p.values = split_list(doc.require(name, "values"));
            if (p.values.empty()) throw std::runtime_error("space: empty values for " + p.name);
        } else if (type == "real" || type == "int") {
            p.kind = type == "real" ? Parameter::Kind::Real : Parameter::Kind::Integer;
            p.lo = std::stod(doc.require(name, "min"));
            p.hi = std::stod(doc.require(name, "max"));
            if (!(p.lo <= p.hi)) throw std::runtime_error("space: min > max for " + p.name);
        } else {
            throw std::runtime_error("space: unknown parameter type " + type);
        }
        if (const std::string* cond = doc.find(name, "condition")) {
            const std::size_t eq = cond->find("==");
            if (eq == std::string::npos) {
                throw std::runtime_error("space: condition must be '<param> == <value>'");
            }
            Condition c;
            c.param = cond->substr(0, eq);
            c.equals = cond->substr(eq + 2);
            while (!c.param.empty() && c.param.back() == ' ') c.param.pop_back();
            while (!c.equals.empty() && c.equals.front() == ' ') c.equals.erase(c.equals.begin());
            p.condition = c;
        }
        space.parameters.push_back(std::move(p));
    }
    space.validate();
    return space;
}

KvDoc space_to_doc(const ParamSpace& space) {
    KvDoc doc;
    auto& file = doc.add_section("file");
    file.emplace_back("format", "space");
    file.emplace_back("version", "1");
    for (const auto& p : space.parameters) {
        auto& s = doc.add_section("param " + p.name);
        if (p.kind == Parameter::Kind::Categorical) {
            s.emplace_back("type", "categorical");
            std::string values;
            for (const auto& v : p.values) {
                if (!values.empty()) values += ", ";
                values += v;
            }
            s.emplace_back("values", values);
        } else {
            s.emplace_back("type", p.kind == Parameter::Kind::Real ? "real" : "int");
            s.emplace_back("min", format_double(p.lo));
            s.emplace_back("max", format_double(p.hi));
        }
        if (p.condition) {
            s.emplace_back("condition", p.condition->param + " == " + p.condition->equals);
        }
    }
    return doc;
}

std::map<std::string, std::string> params_of(const AlgoConfig& config) {
    std::map<std::string, std::string> v;
    v["decomp"] = to_string(config.decomp);
    v["pop_size"] = std::to_string(config.pop_size);
    v["aggregation"] = to_string(config.aggregation);
    v["update"] = to_string(config.update);
    v["nr"] = std::to_string(config.nr);
    v["tr"] = config.update == UpdateStrategy::Restricted ? std::to_string(config.tr) : kInactive;
    v["T"] = std::to_string(config.T);
    v["delta"] = format_double(config.delta);
    v["de_F"] = format_double(config.de_f);
    v["pm_eta"] = format_double(config.pm_eta);
    v["pm_prob"] = format_double(config.pm_prob);
    v["ra"] = config.ra.partial ? "partial" : "off";
    v["ra_frac"] = config.ra.partial ? format_double(config.ra.fraction) : kInactive;
    v["restart"] = config.restart.enabled ? "every" : "off";
    v["restart_evals"] =
        config.restart.enabled ? std::to_string(config.restart.every) : kInactive;
    return v;
}

AlgoConfig config_from_params(const std::map<std::string, std::string>& values,
                              const AlgoConfig& base) {
    AlgoConfig c = base;
    c.decomp = decomp_from_string(values.at("decomp"));
    c.pop_size = std::stoul(values.at("pop_size"));
    c.aggregation = aggregation_from_string(values.at("aggregation"));
    c.update = update_from_string(values.at("update"));
    c.nr = std::stoi(values.at("nr"));
    if (c.update == UpdateStrategy::Restricted) c.tr = std::stoi(values.at("tr"));
    c.T = std::stoul(values.at("T"));
    c.delta = std::stod(values.at("delta"));
    c.de_f = std::stod(values.at("de_F"));
    c.pm_eta = std::stod(values.at("pm_eta"));
    c.pm_prob = std::stod(values.at("pm_prob"));
    c.ra.partial = values.at("ra") == "partial";
    c.ra.fraction = c.ra.partial ? std::stod(values.at("ra_frac")) : 1.0;
    c.restart.enabled = values.at("restart") == "every";
    if (c.restart.enabled) c.restart.every = std::stoull(values.at("restart_evals"));
    return c;
}

AlgoConfig sample_config(const ParamSpace& space, Rng& rng) {
    std::map<std::string, std::string> values;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    // Unconditional parameters first so conditions can be resolved.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& p : space.parameters) {
            if ((pass == 0) != !p.condition) continue;
            if (p.condition) {
                const auto it = values.find(p.condition->param);
                if (it == values.end() || it->second != p.condition->equals) {
                    values[p.name] = kInactive;
                    continue;
                }
            }
            switch (p.kind) {
                case Parameter::Kind::Categorical: {
                    std::uniform_int_distribution<std::size_t> pick(0, p.values.size() - 1);
                    values[p.name] = p.values[pick(rng)];
                    break;
                }
                case Parameter::Kind::Real:
                    values[p.name] = format_double(p.lo + uniform(rng) * (p.hi - p.lo));
                    break;
                case Parameter::Kind::Integer: {
                    std::uniform_int_distribution<long> pick(static_cast<long>(p.lo),
                                                             static_cast<long>(p.hi));
                    values[p.name] = std::to_string(pick(rng));
                    break;
                }
            }
        }
    }
    AlgoConfig base;
    AlgoConfig config = config_from_params(values, base);
    config.name = "sampled";
    // T may not exceed the sampled population size.
    config.T = std::min(config.T, config.pop_size);
    if (config.update == UpdateStrategy::Restricted) {
        config.tr = std::min<int>(config.tr, static_cast<int>(config.T));
    }
    return config;
}

namespace {

double score_run(const AlgoConfig& config, const Instance& instance, std::uint64_t run_budget,
                 std::uint64_t stride) {
    AlgoConfig c = config;
    c.seed = instance.seed;
    c.budget = run_budget;
    const ProblemSpec& problem = problem_by_name(instance.problem);
    const RunResult result = run(c, problem);
    const AnytimeCurve curve =
        anytime_hv(result.log, default_reference(problem.objectives()), run_budget, stride);
    return curve.auc;
}

/// Regularized upper incomplete gamma Q(a, x), for chi-squared tail
/// probabilities.
double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 1.0;
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        // series for P(a, x)
        double sum = 1.0 / a;
        double term = sum;
        for (int n = 1; n < 200; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) break;
        }
        const double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        return 1.0 - p;
    }
    // continued fraction for Q(a, x)
    double b = x + 1.0 - a;
    double c = 1e300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 200; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Friedman rank test p-value across k configurations over n instances.
double friedman_p(const std::vector<std::vector<double>>& scores,
                  const std::vector<std::size_t>& alive, std::size_t instances) {
    const std::size_t k = alive.size();
    const std::size_t n = instances;
    if (k < 2 || n < 2) return 1.0;
    std::vector<double> rank_sum(k, 0.0);
    std::vector<std::pair<double, std::size_t>> column(k);
    for (std::size_t inst = 0; inst < n; ++inst) {
        for (std::size_t c = 0; c < k; ++c) {
            // higher score = better = lower rank
            column[c] = {-scores[alive[c]][inst], c};
        }
        std::sort(column.begin(), column.end());
        std::size_t i = 0;
        while (i < k) {
            std::size_t j = i;
            while (j + 1 < k && column[j + 1].first == column[i].first) ++j;
            const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
            for (std::size_t t = i; t <= j; ++t) rank_sum[column[t].second] += avg_rank;
            i = j + 1;
        }
    }
    double sum_sq = 0.0;
    for (double r : rank_sum) sum_sq += r * r;
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double stat = 12.0 / (nd * kd * (kd + 1.0)) * sum_sq - 3.0 * nd * (kd + 1.0);
    return gamma_q((kd - 1.0) / 2.0, std::max(stat, 0.0) / 2.0);
}

/// One-sided sign test: probability of >= wins successes in n fair trials.
double sign_test_p(std::size_t wins, std::size_t n) {
    if (n == 0) return 1.0;
    double p = 0.0;
    double coeff = 1.0;  // C(n, 0)
    // accumulate C(n, k) / 2^n for k = wins..n via symmetry from the top
    for (std::size_t k = 0; k <= n; ++k) {
        if (k >= wins) p += coeff;
        coeff = coeff * static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    return p / std::pow(2.0, static_cast<double>(n));
}

std::vector<double> mean_ranks(const std::vector<std::vector<double>>& scores,
                               const std::vector<std::size_t>& alive, std::size_t instances) {
    const std::size_t k = alive.size();
    std::vector<double> rank_sum(k, 0.0);
    std::vector<std::pair<double, std::size_t>> column(k);
    for (std::size_t inst = 0; inst < instances; ++inst) {
        for (std::size_t c = 0; c < k; ++c) column[c] = {-scores[alive[c]][inst], c};
        std::sort(column.begin(), column.end());
        std::size_t i = 0;
        while (i < k) {
            std::size_t j = i;
            while (j + 1 < k && column[j + 1].first == column[i].first) ++j;
            const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
            for (std::size_t t = i; t <= j; ++t) rank_sum[column[t].second] += avg_rank;
            i = j + 1;
        }
    }
    for (double& r : rank_sum) r /= static_cast<double>(instances);
    return rank_sum;
}

}  // namespace

RaceResult race(const std::vector<AlgoConfig>& entrants, const std::vector<Instance>& instances,
                const RaceOptions& options) {
    if (entrants.size() < 2) throw std::invalid_argument("race: need at least 2 entrants");
    if (options.budget_runs < entrants.size()) {
        throw std::invalid_argument("race: budget smaller than the number of entrants");
    }
    RaceResult result;
    result.scores.assign(entrants.size(),
                         std::vector<double>(instances.size(),
                                             std::numeric_limits<double>::quiet_NaN()));
    std::vector<std::size_t> alive(entrants.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    std::size_t round = 0;
    for (std::size_t inst = 0; inst < instances.size(); ++inst) {
        if (result.runs_used + alive.size() > options.budget_runs) break;
        ++round;
        for (std::size_t c : alive) {
            result.scores[c][inst] =
                score_run(entrants[c], instances[inst], options.run_budget, options.stride);
            ++result.runs_used;
        }
        result.instances_used = inst + 1;

        if (alive.size() <= options.elites) continue;
        if (result.instances_used < options.min_instances) continue;

        const double p_overall = friedman_p(result.scores, alive, result.instances_used);
        if (p_overall > options.alpha) continue;

        const auto ranks = mean_ranks(result.scores, alive, result.instances_used);
        std::size_t best_pos = 0;
        for (std::size_t c = 1; c < alive.size(); ++c) {
            if (ranks[c] < ranks[best_pos]) best_pos = c;
        }
        const std::size_t best = alive[best_pos];

        std::vector<std::size_t> survivors;
        std::size_t dropped = 0;
        for (std::size_t c = 0; c < alive.size(); ++c) {
            const std::size_t entrant = alive[c];
            if (entrant == best) {
                survivors.push_back(entrant);
                continue;
            }
            std::size_t wins = 0, ties = 0;
            for (std::size_t i = 0; i < result.instances_used; ++i) {
                const double a = result.scores[best][i];
                const double b = result.scores[entrant][i];
                if (a > b) ++wins;
                if (a == b) ++ties;
            }
            const std::size_t n = result.instances_used - ties;
            if (alive.size() - dropped > options.elites && sign_test_p(wins, n) <= options.alpha) {
                result.eliminated.emplace_back(entrant, round);
                ++dropped;
            } else {
                survivors.push_back(entrant);
            }
        }
        alive = survivors;
        if (alive.size() <= options.elites) break;
    }

    const auto ranks = mean_ranks(result.scores, alive, result.instances_used);
    std::vector<std::size_t> order(alive.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
        return alive[a] < alive[b];
    });
    for (std::size_t i : order) result.ranking.push_back({alive[i], ranks[i]});
    return result;
}

TuneResult tune(const ParamSpace& space, const std::vector<Instance>& instances,
                const TuneOptions& options) {
    Rng rng(options.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    TuneResult result;
    std::vector<AlgoConfig> survivors;

    const std::size_t iterations = std::max<std::size_t>(1, options.iterations);
    const std::size_t budget_per_iter = options.race.budget_runs / iterations;

    for (std::size_t iter = 0; iter < iterations; ++iter) {
        std::vector<AlgoConfig> entrants = survivors;
        std::size_t counter = 0;
        while (entrants.size() < options.entrants_per_iteration) {
            AlgoConfig c;
            if (survivors.empty()) {
                c = sample_config(space, rng);
            } else {
                // Perturb a survivor: numeric parameters get clipped Gaussian
                // noise (sigma = 10% of range), categorical ones occasionally
                // resample.
                const AlgoConfig& parent = survivors[counter % survivors.size()];
                auto values = params_of(parent);
                std::normal_distribution<double> gauss(0.0, 1.0);
                for (const auto& p : space.parameters) {
                    auto it = values.find(p.name);
                    if (it == values.end() || it->second == kInactive) continue;
                    if (p.kind == Parameter::Kind::Categorical) {
                        if (uniform(rng) < 0.2) {
                            std::uniform_int_distribution<std::size_t> pick(0, p.values.size() - 1);
                            it->second = p.values[pick(rng)];
                        }
                        continue;
                    }
                    const double range = p.hi - p.lo;
                    double value = std::stod(it->second) + gauss(rng) * 0.1 * range;
                    value = std::clamp(value, p.lo, p.hi);
                    it->second = p.kind == Parameter::Kind::Integer
                                     ? std::to_string(static_cast<long>(std::llround(value)))
                                     : format_double(value);
                }
                // Re-resolve conditionals against the perturbed controllers.
                for (const auto& p : space.parameters) {
                    if (!p.condition) continue;
                    const bool active = values[p.condition->param] == p.condition->equals;
                    if (!active) {
                        values[p.name] = kInactive;
                    } else if (values[p.name] == kInactive) {
                        if (p.kind == Parameter::Kind::Categorical) {
                            std::uniform_int_distribution<std::size_t> pick(0, p.values.size() - 1);
                            values[p.name] = p.values[pick(rng)];
                        } else {
                            values[p.name] =
                                p.kind == Parameter::Kind::Integer
                                    ? std::to_string(static_cast<long>(std::llround(
                                          p.lo + uniform(rng) * (p.hi - p.lo))))
                                    : format_double(p.lo + uniform(rng) * (p.hi - p.lo));
                        }
                    }
                }
                c = config_from_params(values, parent);
                c.T = std::min(c.T, c.pop_size);
                if (c.update == UpdateStrategy::Restricted) {
                    c.tr = std::min<int>(c.tr, static_cast<int>(c.T));
                }
            }
            c.name = "t" + std::to_string(iter) + "c" + std::to_string(counter);
            entrants.push_back(std::move(c));
            ++counter;
        }

        RaceOptions ro = options.race;
        ro.budget_runs = budget_per_iter;
        const RaceResult rr = race(entrants, instances, ro);

        survivors.clear();
        for (const auto& s : rr.ranking) {
            survivors.push_back(entrants[s.entrant]);
            if (survivors.size() >= std::max<std::size_t>(1, options.race.elites / 2)) break;
        }
        result.entrants.push_back(entrants);
        result.races.push_back(rr);
    }

    const RaceResult& last = result.races.back();
    result.best = result.entrants.back()[last.ranking.front().entrant];
    result.best.name = "tuned";
    return result;
}

std::vector<AblationStep> ablate(const AlgoConfig& source, const AlgoConfig& target,
                                 const std::vector<Instance>& instances,
                                 const AblateOptions& options) {
    if (params_of(source) == params_of(target)) {
        throw std::invalid_argument("ablate: source and target are identical");
    }
    // Dependents ride along with their controller and never flip on their own
    // while the controller still differs.
    const std::map<std::string, std::string> controller_of = {
        {"tr", "update"}, {"ra_frac", "ra"}, {"restart_evals", "restart"}};

    auto flip = [&](const AlgoConfig& current, const std::string& param) {
        auto values = params_of(current);
        const auto target_values = params_of(target);
        values[param] = target_values.at(param);
        for (const auto& [dep, ctrl] : controller_of) {
            if (ctrl == param) values[dep] = target_values.at(dep);
        }
        return config_from_params(values, current);
    };

    auto diff_params = [&](const AlgoConfig& current) {
        std::vector<std::string> diff;
        const auto a = params_of(current);
        const auto b = params_of(target);
        for (const auto& [name, value] : a) {
            if (value == b.at(name)) continue;
            const auto ctrl = controller_of.find(name);
            if (ctrl != controller_of.end() && a.at(ctrl->second) != b.at(ctrl->second)) {
                continue;  // rides along with its controller
            }
            diff.push_back(name);
        }
        std::sort(diff.begin(), diff.end());
        return diff;
    };

    auto mean_score = [&](const AlgoConfig& c) {
        double total = 0.0;
        for (const auto& instance : instances) {
            total += score_run(c, instance, options.run_budget, options.stride);
        }
        return total / static_cast<double>(instances.size());
    };

    std::vector<AblationStep> path;
    AlgoConfig current = source;
    auto remaining = diff_params(current);
    while (!remaining.empty()) {
        AblationStep best_step;
        double best_score = -std::numeric_limits<double>::infinity();
        for (const auto& param : remaining) {
            AlgoConfig flipped = flip(current, param);
            flipped.name = current.name + "+" + param;
            const double score = mean_score(flipped);
            if (score > best_score) {
                best_score = score;
                best_step.parameter = param;
                best_step.from_value = params_of(current).at(param);
                best_step.to_value = params_of(target).at(param);
                best_step.score = score;
                best_step.config = std::move(flipped);
            }
        }
        current = best_step.config;
        path.push_back(std::move(best_step));
        remaining = diff_params(current);
    }
    return path;
}

AlgoConfig auto_moead_base(std::uint64_t budget, std::uint64_t seed) {
    AlgoConfig base;
    base.name = "auto";
    base.decomp = DecompKind::Sobol;
    base.pop_size = 100;
    base.aggregation = Aggregation::AWT;
    base.update = UpdateStrategy::Best;
    base.nr = 9;
    base.T = 22;
    base.delta = 0.9822;
    base.de_f = 0.4908;
    base.pm_eta = 80.9844;
    base.pm_prob = 0.4556;
    base.ra.partial = true;
    base.ra.fraction = 0.05;
    base.restart.enabled = true;
    base.restart.every = 20000;
    base.budget = budget;
    base.seed = seed;
    return base;
}

std::vector<std::pair<std::string, AlgoConfig>> make_variants(const AlgoConfig& base) {
    std::vector<std::pair<std::string, AlgoConfig>> variants;

    AlgoConfig decomposition = base;
    decomposition.name = "decomposition";
    decomposition.decomp = DecompKind::Sld;
    decomposition.pop_size = 300;
    variants.emplace_back("decomposition", decomposition);

    AlgoConfig aggregation = base;
    aggregation.name = "aggregation";
    aggregation.aggregation = Aggregation::WT;
    variants.emplace_back("aggregation", aggregation);

    AlgoConfig update = base;
    update.name = "update";
    update.update = UpdateStrategy::Restricted;
    update.nr = 2;
    update.tr = 20;
    variants.emplace_back("update", update);

    AlgoConfig neighborhood = base;
    neighborhood.name = "neighborhood";
    neighborhood.T = 20;
    neighborhood.delta = 0.9;
    variants.emplace_back("neighborhood", neighborhood);

    AlgoConfig operators = base;
    operators.name = "operators";
    operators.de_f = 0.5;
    operators.pm_eta = 20.0;
    operators.pm_prob = 0.3;
    variants.emplace_back("operators", operators);

    AlgoConfig no_restart = base;
    no_restart.name = "no-restart";
    no_restart.restart.enabled = false;
    variants.emplace_back("no-restart", no_restart);

    AlgoConfig no_ra = base;
    no_ra.name = "no-ra";
    no_ra.ra.partial = false;
    no_ra.ra.fraction = 1.0;
    variants.emplace_back("no-ra", no_ra);

    return variants;
}

}  // namespace moead::tuner
