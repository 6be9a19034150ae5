#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "moead/config_io.hpp"
#include "moead/experiment.hpp"
#include "moead/metrics.hpp"
#include "moead/problems.hpp"
#include "moead/stn.hpp"
#include "moead/tuner.hpp"

namespace fs = std::filesystem;
using namespace moead;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct ParamSpaceWithSource {
    tuner::ParamSpace space;
    std::string source;
};

void save_text(const fs::path& path, const std::string& text) {
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + tmp.string());
        os << text;
    }
    fs::rename(tmp, path);
}

std::vector<tuner::Instance> make_instances(const std::vector<std::string>& problems,
                                            std::size_t per_problem, std::uint64_t seed) {
    std::vector<tuner::Instance> instances;
    for (std::size_t i = 0; i < per_problem; ++i) {
        for (const auto& p : problems) {
            instances.push_back({p, repetition_seed(seed, p, "instance", static_cast<unsigned>(i))});
        }
    }
    return instances;
}

int cmd_run(const std::string& plan_path, const std::string& out_override,
            std::uint64_t seed_override, bool seed_set, unsigned workers) {
    ExperimentPlan plan = load_plan_file(plan_path);
    if (seed_set) plan.master_seed = seed_override;
    const fs::path out = out_override.empty() ? fs::path(plan.out_dir) : fs::path(out_override);
    const std::size_t n = execute_plan(plan, out, workers);
    std::cout << "wrote " << n << " runs to " << out.string() << "\n";
    return 0;
}

int cmd_metrics(const std::string& dir, const std::string& base, int precision,
                std::uint64_t checkpoint, const std::string& out) {
    const auto runs = discover_runs(dir);
    if (runs.empty()) throw std::runtime_error("no runs found in " + dir);
    MetricsOptions options;
    options.precision = precision;
    options.stride = checkpoint;
    if (!base.empty()) options.base = base;
    const MetricsReport report = compute_metrics(runs, options);
    const fs::path out_dir = out.empty() ? fs::path(dir) : fs::path(out);
    fs::create_directories(out_dir);
    write_metrics_csv(out_dir / "metrics.csv", report, options.base);
    write_anytime_csv(out_dir, report);
    std::cout << "metrics for " << report.rows.size() << " (problem, variant) groups -> "
              << (out_dir / "metrics.csv").string() << "\n";
    return 0;
}

int cmd_stn(const std::string& dir, const std::string& base, const std::string& variant,
            int precision, const std::string& vectors_csv, const std::string& out) {
    const auto runs = discover_runs(dir);
    std::vector<RunLog> base_logs, variant_logs;
    const RunMeta* base_meta = nullptr;
    const RunMeta* variant_meta = nullptr;
    for (const auto& rf : runs) {
        if (rf.meta.config_name == base) {
            base_logs.push_back(read_run_log_file(rf.log_path));
            base_meta = &rf.meta;
        } else if (rf.meta.config_name == variant) {
            variant_logs.push_back(read_run_log_file(rf.log_path));
            variant_meta = &rf.meta;
        }
    }
    if (base_meta == nullptr || variant_meta == nullptr) {
        throw std::invalid_argument("stn: both config names need runs in " + dir);
    }
    if (base_meta->problem != variant_meta->problem) {
        throw std::invalid_argument("stn: configs were run on different problems");
    }
    const ProblemSpec& problem = problem_by_name(base_meta->problem);

    std::vector<int> tracked;
    for (const auto& tok : split_list(vectors_csv)) tracked.push_back(std::stoi(tok));

    const stn::StnGraph ga =
        build_algorithm_stn(base_logs, base_meta->config, problem, precision, tracked);
    const stn::StnGraph gb =
        build_algorithm_stn(variant_logs, variant_meta->config, problem, precision, tracked);
    const stn::StnGraph merged = stn::merge(ga, gb);

    const fs::path out_dir = out.empty() ? fs::path(dir) : fs::path(out);
    fs::create_directories(out_dir);
    const std::string stem = "stn_" + base_meta->problem + "_" + base + "_vs_" + variant;
    save_text(out_dir / (stem + ".dot"), stn::export_graph(merged, stn::GraphFormat::Dot));
    save_text(out_dir / (stem + ".graphml"),
              stn::export_graph(merged, stn::GraphFormat::GraphML));

    const stn::StnMetrics m = stn::stn_metrics(merged);
    std::ostringstream csv;
    csv << "problem,base,variant,nodes,edges,shared,pf_nodes\n";
    csv << base_meta->problem << ',' << base << ',' << variant << ',' << m.nodes << ','
        << m.edges << ',' << m.shared << ',' << m.pf_nodes << '\n';
    save_text(out_dir / (stem + ".csv"), csv.str());
    std::cout << stem << ": nodes=" << m.nodes << " edges=" << m.edges << " shared=" << m.shared
              << " pf_nodes=" << m.pf_nodes << "\n";
    return 0;
}

int cmd_tune(const std::string& space_path, const std::vector<std::string>& problems,
             std::size_t budget_runs, std::size_t elites, std::uint64_t run_budget,
             std::uint64_t seed, const std::string& out) {
    const ParamSpaceWithSource space = [&] {
        if (space_path.empty()) return ParamSpaceWithSource{tuner::default_space(), "builtin"};
        return ParamSpaceWithSource{tuner::space_from_doc(KvDoc::parse_file(space_path)),
                                    space_path};
    }();
    tuner::TuneOptions options;
    options.race.budget_runs = budget_runs;
    options.race.elites = elites;
    options.race.run_budget = run_budget;
    options.seed = seed;
    const auto instances = make_instances(problems, 8, seed);
    const tuner::TuneResult result = tuner::tune(space.space, instances, options);

    const fs::path out_dir = out.empty() ? fs::path(".") : fs::path(out);
    fs::create_directories(out_dir);
    AlgoConfig best = result.best;
    best.budget = 20000;
    save_config_file(out_dir / "best_config.txt", best);

    std::ostringstream report;
    report << "race,entrant,name,status,mean_rank\n";
    for (std::size_t r = 0; r < result.races.size(); ++r) {
        const auto& rr = result.races[r];
        for (const auto& standing : rr.ranking) {
            report << r << ',' << standing.entrant << ','
                   << result.entrants[r][standing.entrant].name << ",survived,"
                   << format_double(standing.mean_rank) << '\n';
        }
        for (const auto& [entrant, round] : rr.eliminated) {
            report << r << ',' << entrant << ',' << result.entrants[r][entrant].name
                   << ",eliminated round " << round << ",\n";
        }
    }
    save_text(out_dir / "race_report.csv", report.str());
    std::cout << "best configuration written to " << (out_dir / "best_config.txt").string()
              << "\n";
    return 0;
}

int cmd_ablate(const std::string& source_path, const std::string& target_path,
               const std::vector<std::string>& problems, std::uint64_t run_budget,
               std::uint64_t seed, const std::string& out) {
    const AlgoConfig source = load_config_file(source_path);
    const AlgoConfig target = load_config_file(target_path);
    tuner::AblateOptions options;
    options.run_budget = run_budget;
    const auto instances = make_instances(problems, 3, seed);
    const auto path = tuner::ablate(source, target, instances, options);

    const fs::path out_dir = out.empty() ? fs::path(".") : fs::path(out);
    fs::create_directories(out_dir);
    std::ostringstream csv;
    csv << "step,parameter,from,to,score\n";
    for (std::size_t i = 0; i < path.size(); ++i) {
        csv << i + 1 << ',' << path[i].parameter << ',' << path[i].from_value << ','
            << path[i].to_value << ',' << format_double(path[i].score) << '\n';
    }
    save_text(out_dir / "ablation.csv", csv.str());
    std::cout << "ablation path of length " << path.size() << " -> "
              << (out_dir / "ablation.csv").string() << "\n";
    return 0;
}

int cmd_variants(const std::string& out) {
    const AlgoConfig base = tuner::auto_moead_base();
    std::ostringstream os;
    os << config_to_doc(base).text();
    for (const auto& [name, config] : tuner::make_variants(base)) {
        os << '\n' << config_to_doc(config).text();
    }
    if (out.empty()) {
        std::cout << os.str();
    } else {
        save_text(out, os.str());
        std::cout << "variant suite written to " << out << "\n";
    }
    return 0;
}

struct ParamSpaceWithSource {
    tuner::ParamSpace space;
    std::string source;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"component-wise MOEA/D runner and behavior-analysis toolchain"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "execute an experiment plan");
    std::string plan_path, out_dir;
    std::uint64_t master_seed = 0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    bool seed_set = false;
    run_cmd->add_option("--plan", plan_path, "plan file")->required();
    run_cmd->add_option("--out", out_dir, "output directory (overrides the plan)");
    run_cmd->add_option("--seed", master_seed, "master seed (overrides the plan)")
        ->each([&](const std::string&) { seed_set = true; });
    run_cmd->add_option("--workers", workers, "parallel run workers");

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "aggregate metrics from run logs");
    std::string metrics_dir, metrics_base = "auto", metrics_out;
    int precision = 2;
    std::uint64_t checkpoint = 1000;
    metrics_cmd->add_option("dir", metrics_dir, "directory with .log/.meta files")->required();
    metrics_cmd->add_option("--base", metrics_base, "base config name for delta columns");
    metrics_cmd->add_option("--precision", precision, "STN location precision");
    metrics_cmd->add_option("--checkpoint", checkpoint, "anytime checkpoint stride");
    metrics_cmd->add_option("--out", metrics_out, "output directory");

    // stn
    auto* stn_cmd = app.add_subcommand("stn", "export the merged STN of two configs");
    std::string stn_dir, stn_base, stn_variant, stn_vectors, stn_out;
    int stn_precision = 2;
    stn_cmd->add_option("dir", stn_dir, "directory with .log/.meta files")->required();
    stn_cmd->add_option("--base", stn_base, "base config name")->required();
    stn_cmd->add_option("--variant", stn_variant, "variant config name")->required();
    stn_cmd->add_option("--precision", stn_precision, "location precision");
    stn_cmd->add_option("--vectors", stn_vectors, "tracked vector ids (default: extremes+center)");
    stn_cmd->add_option("--out", stn_out, "output directory");

    // tune
    auto* tune_cmd = app.add_subcommand("tune", "desk-scale iterated racing");
    std::string space_path, tune_out;
    std::vector<std::string> tune_problems{"zdt1"};
    std::size_t budget_runs = 200, elites = 7;
    std::uint64_t run_budget = 5000, tune_seed = 1;
    tune_cmd->add_option("--space", space_path, "parameter space file (default: built-in)");
    tune_cmd->add_option("--problems", tune_problems, "problems used as instances");
    tune_cmd->add_option("--budget", budget_runs, "total algorithm runs");
    tune_cmd->add_option("--elites", elites, "surviving configurations");
    tune_cmd->add_option("--run-budget", run_budget, "evaluations per run");
    tune_cmd->add_option("--seed", tune_seed, "tuner seed");
    tune_cmd->add_option("--out", tune_out, "output directory");

    // ablate
    auto* ablate_cmd = app.add_subcommand("ablate", "greedy one-parameter ablation path");
    std::string source_path, target_path, ablate_out;
    std::vector<std::string> ablate_problems{"zdt1"};
    std::uint64_t ablate_budget = 5000, ablate_seed = 1;
    ablate_cmd->add_option("--source", source_path, "source config file")->required();
    ablate_cmd->add_option("--target", target_path, "target config file")->required();
    ablate_cmd->add_option("--problems", ablate_problems, "problems used as instances");
    ablate_cmd->add_option("--run-budget", ablate_budget, "evaluations per run");
    ablate_cmd->add_option("--seed", ablate_seed, "instance seed");
    ablate_cmd->add_option("--out", ablate_out, "output directory");

    // variants
    auto* variants_cmd = app.add_subcommand("variants", "print the base config and its variants");
    std::string variants_out;
    variants_cmd->add_option("--out", variants_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(plan_path, out_dir, master_seed, seed_set, workers);
        if (metrics_cmd->parsed()) {
            return cmd_metrics(metrics_dir, metrics_base, precision, checkpoint, metrics_out);
        }
        if (stn_cmd->parsed()) {
            return cmd_stn(stn_dir, stn_base, stn_variant, stn_precision, stn_vectors, stn_out);
        }
        if (tune_cmd->parsed()) {
            return cmd_tune(space_path, tune_problems, budget_runs, elites, run_budget, tune_seed,
                            tune_out);
        }
        if (ablate_cmd->parsed()) {
            return cmd_ablate(source_path, target_path, ablate_problems, ablate_budget,
                              ablate_seed, ablate_out);
        }
        if (variants_cmd->parsed()) return cmd_variants(variants_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
