#include "moead/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "moead/problems.hpp"

namespace moead {

ExperimentPlan plan_from_doc(const KvDoc& doc) {
    if (doc.format() != "plan") throw std::runtime_error("not a plan file");
    ExperimentPlan plan;
    plan.problems = split_list(doc.require("plan", "problems"));
    if (const std::string* v = doc.find("plan", "suite")) plan.suite = *v;
    if (const std::string* v = doc.find("plan", "configs")) plan.config_files = split_list(*v);
    if (const std::string* v = doc.find("plan", "base")) plan.base_name = *v;
    if (const std::string* v = doc.find("plan", "repetitions")) {
        plan.repetitions = static_cast<unsigned>(std::stoul(*v));
    }
    if (const std::string* v = doc.find("plan", "budget")) plan.budget = std::stoull(*v);
    if (const std::string* v = doc.find("plan", "checkpoint")) plan.checkpoint = std::stoull(*v);
    if (const std::string* v = doc.find("plan", "master_seed")) plan.master_seed = std::stoull(*v);
    if (const std::string* v = doc.find("plan", "out")) plan.out_dir = *v;
    if (plan.problems.empty()) throw std::runtime_error("plan: no problems listed");
    if (plan.repetitions < 1) throw std::runtime_error("plan: repetitions must be >= 1");
    if (plan.suite != "table4" && plan.suite != "files") {
        throw std::runtime_error("plan: unknown suite '" + plan.suite + "'");
    }
    if (plan.suite == "files" && plan.config_files.empty()) {
        throw std::runtime_error("plan: suite 'files' needs a configs list");
    }
    return plan;
}

KvDoc plan_to_doc(const ExperimentPlan& plan) {
    KvDoc doc;
    auto& file = doc.add_section("file");
    file.emplace_back("format", "plan");
    file.emplace_back("version", "1");
    auto& p = doc.add_section("plan");
    std::string problems;
    for (const auto& name : plan.problems) {
        if (!problems.empty()) problems += ", ";
        problems += name;
    }
    p.emplace_back("problems", problems);
    p.emplace_back("suite", plan.suite);
    if (!plan.config_files.empty()) {
        std::string configs;
        for (const auto& path : plan.config_files) {
            if (!configs.empty()) configs += ", ";
            configs += path;
        }
        p.emplace_back("configs", configs);
    }
    p.emplace_back("base", plan.base_name);
    p.emplace_back("repetitions", std::to_string(plan.repetitions));
    p.emplace_back("budget", std::to_string(plan.budget));
    p.emplace_back("checkpoint", std::to_string(plan.checkpoint));
    p.emplace_back("master_seed", std::to_string(plan.master_seed));
    p.emplace_back("out", plan.out_dir);
    return doc;
}

ExperimentPlan load_plan_file(const std::filesystem::path& path) {
    return plan_from_doc(KvDoc::parse_file(path));
}

std::uint64_t repetition_seed(std::uint64_t master_seed, const std::string& problem,
                              const std::string& config_name, unsigned repetition) {
    // FNV-1a, fixed constants: stable across platforms and plan ordering.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x7c;
        h *= 1099511628211ull;
    };
    mix(std::to_string(master_seed));
    mix(problem);
    mix(config_name);
    mix(std::to_string(repetition));
    return h == 0 ? 1 : h;
}

std::vector<AlgoConfig> plan_configs(const ExperimentPlan& plan) {
    std::vector<AlgoConfig> configs;
    if (plan.suite == "table4") {
        AlgoConfig base = tuner::auto_moead_base(plan.budget);
        base.name = plan.base_name;
        configs.push_back(base);
        for (auto& [name, config] : tuner::make_variants(base)) configs.push_back(config);
    } else {
        for (const auto& path : plan.config_files) {
            AlgoConfig c = load_config_file(path);
            c.budget = plan.budget;
            configs.push_back(std::move(c));
        }
    }
    for (const auto& c : configs) validate(c);
    for (const auto& name : plan.problems) problem_by_name(name);  // reject unknown names early
    return configs;
}

std::vector<RunSpec> expand_plan(const ExperimentPlan& plan,
                                 const std::filesystem::path& out_dir) {
    const auto configs = plan_configs(plan);
    std::vector<RunSpec> specs;
    for (const auto& problem : plan.problems) {
        for (const auto& config : configs) {
            for (unsigned rep = 0; rep < plan.repetitions; ++rep) {
                RunSpec spec;
                spec.problem = problem;
                spec.config = config;
                spec.config.seed = repetition_seed(plan.master_seed, problem, config.name, rep);
                spec.repetition = rep;
                const std::string stem =
                    problem + "__" + config.name + "__r" + std::to_string(rep);
                spec.log_path = out_dir / (stem + ".log");
                spec.meta_path = out_dir / (stem + ".meta");
                specs.push_back(std::move(spec));
            }
        }
    }
    return specs;
}

RunMeta meta_from_doc(const KvDoc& doc) {
    if (doc.format() != "runmeta") throw std::runtime_error("not a run metadata file");
    RunMeta meta;
    meta.problem = doc.require("run", "problem");
    meta.repetition = static_cast<unsigned>(std::stoul(doc.require("run", "repetition")));
    meta.evaluations = std::stoull(doc.require("run", "evaluations"));
    meta.generations = static_cast<std::uint32_t>(std::stoul(doc.require("run", "generations")));
    meta.final_population_variance = std::stod(doc.require("run", "final_population_variance"));
    meta.config = config_from_doc([&] {
        KvDoc sub;
        auto& file = sub.add_section("file");
        file.emplace_back("format", "config");
        file.emplace_back("version", "1");
        auto& c = sub.add_section("config");
        c = *doc.section("config");
        return sub;
    }());
    meta.config_name = meta.config.name;
    return meta;
}

KvDoc meta_to_doc(const RunMeta& meta) {
    KvDoc doc;
    auto& file = doc.add_section("file");
    file.emplace_back("format", "runmeta");
    file.emplace_back("version", "1");
    auto& r = doc.add_section("run");
    r.emplace_back("problem", meta.problem);
    r.emplace_back("repetition", std::to_string(meta.repetition));
    r.emplace_back("evaluations", std::to_string(meta.evaluations));
    r.emplace_back("generations", std::to_string(meta.generations));
    r.emplace_back("final_population_variance", format_double(meta.final_population_variance));
    auto& c = doc.add_section("config");
    c = *config_to_doc(meta.config).section("config");
    auto& e = doc.add_section("engine");
    e.emplace_back("scaling_set", "population+archive");
    e.emplace_back("archive", "feasible nondominated, unbounded");
    e.emplace_back("repair", "clip");
    e.emplace_back("partial_selection", "uniform");
    e.emplace_back("sobol_map", "sorted-differences");
    e.emplace_back("sld_truncation", "lexicographic-prefix");
    return doc;
}

namespace {

void run_one(const RunSpec& spec) {
    const ProblemSpec& problem = problem_by_name(spec.problem);
    const RunResult result = run(spec.config, problem, spec.repetition);
    write_run_log_file(spec.log_path, result.log);

    RunMeta meta;
    meta.problem = spec.problem;
    meta.config_name = spec.config.name;
    meta.repetition = spec.repetition;
    meta.config = spec.config;
    meta.evaluations = result.evaluations;
    meta.generations = result.generations;
    std::vector<Vector> xs;
    xs.reserve(result.population.size());
    for (const auto& s : result.population) xs.push_back(s.x);
    meta.final_population_variance = population_variance(xs, problem.bounds());
    meta_to_doc(meta).save(spec.meta_path);
}

}  // namespace

std::size_t execute_plan(const ExperimentPlan& plan, const std::filesystem::path& out_dir,
                         unsigned workers) {
    std::filesystem::create_directories(out_dir);
    const auto specs = expand_plan(plan, out_dir);
    if (workers <= 1) {
        for (const auto& spec : specs) run_one(spec);
        return specs.size();
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::string first_error;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= specs.size()) return;
                try {
                    run_one(specs[i]);
                } catch (const std::exception& e) {
                    std::lock_guard lock(error_mutex);
                    if (first_error.empty()) first_error = e.what();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (!first_error.empty()) throw std::runtime_error(first_error);
    return specs.size();
}

std::vector<RunFile> discover_runs(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> meta_paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".meta") meta_paths.push_back(entry.path());
    }
    std::sort(meta_paths.begin(), meta_paths.end());
    std::vector<RunFile> runs;
    for (const auto& path : meta_paths) {
        RunFile rf;
        rf.meta = meta_from_doc(KvDoc::parse_file(path));
        rf.log_path = path;
        rf.log_path.replace_extension(".log");
        if (!std::filesystem::exists(rf.log_path)) {
            throw std::runtime_error("missing log for " + path.string());
        }
        runs.push_back(std::move(rf));
    }
    return runs;
}

MetricsDelta metrics_delta(const VariantMetrics& base, const VariantMetrics& variant) {
    MetricsDelta d;
    d.delta_hv = base.hv_mean - variant.hv_mean;
    d.delta_nodes = static_cast<double>(base.nodes) - static_cast<double>(variant.nodes);
    d.delta_variance = base.variance_mean - variant.variance_mean;
    return d;
}

namespace {

ParetoSet final_archive(const RunLog& log) {
    std::vector<Solution> entries;
    for (const auto& r : log.records) {
        if (r.subproblem_id != kArchiveEntry) continue;
        Solution s;
        s.x = r.x;
        s.f = r.f;
        s.violation = r.violation;
        s.eval_index = r.eval_index;
        s.run_id = r.run_id;
        entries.push_back(std::move(s));
    }
    return nondominated_filter(entries);
}

double scaled_final_hv(const ParetoSet& archive, const Vector& ref) {
    if (archive.empty()) return 0.0;
    std::vector<Vector> fs;
    fs.reserve(archive.size());
    for (const auto& s : archive.members()) fs.push_back(s.f);
    return hypervolume(scale_objectives(fs), ref);
}

}  // namespace

MetricsReport compute_metrics(const std::vector<RunFile>& runs, const MetricsOptions& options) {
    MetricsReport report;
    // group by (problem, variant)
    std::map<std::pair<std::string, std::string>, std::vector<const RunFile*>> groups;
    for (const auto& rf : runs) groups[{rf.meta.problem, rf.meta.config_name}].push_back(&rf);

    // pooled archives per problem, for #PF without an analytic front
    std::map<std::string, std::vector<Solution>> pools;
    std::map<std::pair<std::string, std::string>, ParetoSet> union_archives;
    std::map<std::pair<std::string, std::string>, std::vector<RunLog>> logs_by_group;

    for (const auto& [key, files] : groups) {
        std::vector<Solution> all;
        std::vector<RunLog> logs;
        for (const RunFile* rf : files) {
            RunLog log = read_run_log_file(rf->log_path);
            const ParetoSet archive = final_archive(log);
            all.insert(all.end(), archive.members().begin(), archive.members().end());
            logs.push_back(std::move(log));
        }
        ParetoSet merged = nondominated_filter(all);
        pools[key.first].insert(pools[key.first].end(), merged.members().begin(),
                                merged.members().end());
        union_archives[key] = std::move(merged);
        logs_by_group[key] = std::move(logs);
    }

    std::map<std::pair<std::string, std::string>, stn::StnGraph> graphs;

    for (const auto& [key, files] : groups) {
        const auto& [problem_name, variant] = key;
        const ProblemSpec& problem = problem_by_name(problem_name);
        const Vector ref = options.ref.empty() ? default_reference(problem.objectives())
                                               : options.ref;
        VariantMetrics row;
        row.problem = problem_name;
        row.variant = variant;
        row.runs = files.size();

        std::vector<double> hvs;
        AnytimeCurve mean_curve;
        const std::uint64_t budget = files.front()->meta.config.budget;
        const std::uint64_t stride = options.stride;
        for (std::size_t i = 0; i < files.size(); ++i) {
            const RunLog& log = logs_by_group[key][i];
            hvs.push_back(scaled_final_hv(final_archive(log), ref));
            const AnytimeCurve curve = anytime_hv(log, ref, budget, stride);
            if (mean_curve.checkpoints.empty()) {
                mean_curve = curve;
            } else {
                for (std::size_t k = 0; k < mean_curve.checkpoints.size() &&
                                        k < curve.checkpoints.size();
                     ++k) {
                    mean_curve.checkpoints[k].second += curve.checkpoints[k].second;
                }
                mean_curve.auc += curve.auc;
            }
            row.auc_mean += curve.auc;
            row.variance_mean += files[i]->meta.final_population_variance;
        }
        const double n = static_cast<double>(files.size());
        for (auto& [e, hv] : mean_curve.checkpoints) hv /= n;
        mean_curve.auc /= n;
        row.auc_mean /= n;
        row.variance_mean /= n;
        for (double hv : hvs) row.hv_mean += hv;
        row.hv_mean /= n;
        for (double hv : hvs) row.hv_sd += (hv - row.hv_mean) * (hv - row.hv_mean);
        row.hv_sd = files.size() > 1 ? std::sqrt(row.hv_sd / (n - 1.0)) : 0.0;
        row.hv_ratio = hv_ratio(row.hv_mean, problem.objectives());

        if (problem.has_pf_oracle()) {
            row.pf_count = count_pf(union_archives[key], problem);
        } else {
            row.pf_count = count_pf(union_archives[key], problem, pools[problem_name]);
        }

        const stn::StnGraph g = build_algorithm_stn(logs_by_group[key],
                                                    files.front()->meta.config, problem,
                                                    options.precision);
        const stn::StnMetrics gm = stn::stn_metrics(g);
        row.nodes = gm.nodes;
        row.edges = gm.edges;
        graphs[key] = g;

        report.rows.push_back(row);
        report.curves[key] = std::move(mean_curve);
    }

    if (options.base) {
        for (auto& row : report.rows) {
            const auto base_key = std::make_pair(row.problem, *options.base);
            const auto it = graphs.find(base_key);
            if (it == graphs.end()) {
                throw std::runtime_error("metrics: base config '" + *options.base +
                                         "' has no runs for problem " + row.problem);
            }
            if (row.variant == *options.base) continue;
            const stn::StnGraph merged =
                stn::merge(it->second, graphs.at({row.problem, row.variant}));
            row.shared = stn::stn_metrics(merged).shared;
        }
        std::map<std::string, const VariantMetrics*> base_rows;
        for (const auto& row : report.rows) {
            if (row.variant == *options.base) base_rows[row.problem] = &row;
        }
        for (const auto& row : report.rows) {
            if (row.variant == *options.base) continue;
            const auto it = base_rows.find(row.problem);
            if (it != base_rows.end()) {
                report.deltas[{row.problem, row.variant}] = metrics_delta(*it->second, row);
            }
        }
    }
    return report;
}

void write_metrics_csv(const std::filesystem::path& path, const MetricsReport& report,
                       const std::optional<std::string>& base) {
    std::ostringstream os;
    os << "problem,variant,run_id,hv,hv_ratio,hv_sd,auc,nodes,edges,shared,variance,pf_count";
    if (base) os << ",delta_hv,delta_nodes,delta_variance";
    os << '\n';
    for (const auto& row : report.rows) {
        os << row.problem << ',' << row.variant << ',' << row.runs << ','
           << format_double(row.hv_mean) << ',' << format_double(row.hv_ratio) << ','
           << format_double(row.hv_sd) << ',' << format_double(row.auc_mean) << ',' << row.nodes
           << ',' << row.edges << ',' << row.shared << ',' << format_double(row.variance_mean)
           << ',' << row.pf_count;
        if (base) {
            const auto it = report.deltas.find({row.problem, row.variant});
            if (it != report.deltas.end()) {
                os << ',' << format_double(it->second.delta_hv) << ','
                   << format_double(it->second.delta_nodes) << ','
                   << format_double(it->second.delta_variance);
            } else {
                os << ",0,0,0";
            }
        }
        os << '\n';
    }
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << os.str();
    }
    std::filesystem::rename(tmp, path);
}

void write_anytime_csv(const std::filesystem::path& dir, const MetricsReport& report) {
    for (const auto& [key, curve] : report.curves) {
        const auto path = dir / ("anytime_" + key.first + "_" + key.second + ".csv");
        std::ostringstream os;
        os << "eval,hv\n";
        for (const auto& [e, hv] : curve.checkpoints) {
            os << e << ',' << format_double(hv) << '\n';
        }
        const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open " + tmp.string());
            out << os.str();
        }
        std::filesystem::rename(tmp, path);
    }
}

stn::StnGraph build_algorithm_stn(const std::vector<RunLog>& logs, const AlgoConfig& config,
                                  const ProblemSpec& problem, int precision,
                                  const std::vector<int>& tracked) {
    const WeightSet weights = make_weight_set(config.decomp, problem.objectives(),
                                              config.pop_size, config.T, config.seed);
    std::vector<int> vector_ids = tracked;
    if (vector_ids.empty()) vector_ids = stn::default_tracked_vectors(weights);

    stn::BuildOptions options;
    options.aggregation = config.aggregation;
    options.origin = config.name;
    if (problem.has_pf_oracle()) {
        // Pareto membership by distance to the analytic front, matching count_pf.
        struct Membership {
            std::vector<Vector> normalized;
            Vector lo, hi;
        };
        auto member = std::make_shared<Membership>();
        const auto sample = problem.sample_pareto_front(16384);
        const std::size_t m = problem.objectives();
        member->lo.assign(m, std::numeric_limits<double>::infinity());
        member->hi.assign(m, -std::numeric_limits<double>::infinity());
        for (const auto& p : sample) {
            for (std::size_t j = 0; j < m; ++j) {
                member->lo[j] = std::min(member->lo[j], p[j]);
                member->hi[j] = std::max(member->hi[j], p[j]);
            }
        }
        member->normalized.reserve(sample.size());
        for (const auto& p : sample) {
            Vector q(m);
            for (std::size_t j = 0; j < m; ++j) {
                const double range = member->hi[j] - member->lo[j];
                q[j] = range > 0.0 ? (p[j] - member->lo[j]) / range : 0.0;
            }
            member->normalized.push_back(std::move(q));
        }
        options.is_pareto = [member, m](const RunLogRecord& r) {
            if (!r.feasible) return false;
            Vector q(m);
            for (std::size_t j = 0; j < m; ++j) {
                const double range = member->hi[j] - member->lo[j];
                q[j] = range > 0.0 ? (r.f[j] - member->lo[j]) / range : 0.0;
            }
            constexpr double eps2 = 1e-6;
            for (const auto& p : member->normalized) {
                double d2 = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    const double diff = q[j] - p[j];
                    d2 += diff * diff;
                    if (d2 > eps2) break;
                }
                if (d2 <= eps2) return true;
            }
            return false;
        };
    }

    std::vector<stn::StnGraph> per_vector;
    per_vector.reserve(vector_ids.size());
    for (int id : vector_ids) {
        per_vector.push_back(
            stn::build_vector_stn(logs, id, weights, problem.bounds(), precision, options));
    }
    return stn::merge_all(per_vector);
}

}  // namespace moead
