#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moead/config_io.hpp"
#include "moead/engine.hpp"
#include "moead/metrics.hpp"
#include "moead/stn.hpp"
#include "moead/tuner.hpp"

namespace moead {

/// What to run: problems x configurations x repetitions, with per-repetition
/// seeds derived from the master seed.
struct ExperimentPlan {
    std::vector<std::string> problems;
    std::string suite = "table4";            ///< "table4" or "files"
    std::vector<std::string> config_files;   ///< used when suite == "files"
    std::string base_name = "auto";
    unsigned repetitions = 10;
    std::uint64_t budget = 20000;
    std::uint64_t checkpoint = 1000;
    std::uint64_t master_seed = 1;
    std::string out_dir = "runs";
};

ExperimentPlan plan_from_doc(const KvDoc& doc);
KvDoc plan_to_doc(const ExperimentPlan& plan);
ExperimentPlan load_plan_file(const std::filesystem::path& path);

/// Stable 64-bit seed for (master seed, problem, config name, repetition);
/// independent of plan ordering.
std::uint64_t repetition_seed(std::uint64_t master_seed, const std::string& problem,
                              const std::string& config_name, unsigned repetition);

struct RunSpec {
    std::string problem;
    AlgoConfig config;
    unsigned repetition = 0;
    std::filesystem::path log_path;
    std::filesystem::path meta_path;
};

/// The configurations a plan races: the shipped base plus its variants, or
/// the configs loaded from files. Throws on unknown names before running.
std::vector<AlgoConfig> plan_configs(const ExperimentPlan& plan);
std::vector<RunSpec> expand_plan(const ExperimentPlan& plan,
                                 const std::filesystem::path& out_dir);

/// Runs every RunSpec (optionally across a worker pool) and writes the log
/// and metadata files atomically. Returns the number of runs executed.
std::size_t execute_plan(const ExperimentPlan& plan, const std::filesystem::path& out_dir,
                         unsigned workers = 1);

struct RunMeta {
    std::string problem;
    std::string config_name;
    unsigned repetition = 0;
    AlgoConfig config;
    std::uint64_t evaluations = 0;
    std::uint32_t generations = 0;
    double final_population_variance = 0.0;
};

RunMeta meta_from_doc(const KvDoc& doc);
KvDoc meta_to_doc(const RunMeta& meta);

/// All (meta, log path) pairs found under a directory, sorted by file name.
struct RunFile {
    RunMeta meta;
    std::filesystem::path log_path;
};
std::vector<RunFile> discover_runs(const std::filesystem::path& dir);

/// Per-(problem, variant) aggregate mirroring the analysis tables.
struct VariantMetrics {
    std::string problem;
    std::string variant;
    std::size_t runs = 0;
    double hv_mean = 0.0;
    double hv_sd = 0.0;
    double hv_ratio = 0.0;
    double auc_mean = 0.0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t shared = 0;  ///< nodes shared with the base algorithm's STN
    double variance_mean = 0.0;
    std::size_t pf_count = 0;
};

/// Difference rows, base minus variant.
struct MetricsDelta {
    double delta_hv = 0.0;
    double delta_nodes = 0.0;
    double delta_variance = 0.0;
};

MetricsDelta metrics_delta(const VariantMetrics& base, const VariantMetrics& variant);

struct MetricsOptions {
    int precision = 2;
    std::optional<std::string> base;  ///< variant name for deltas and shared counts
    Vector ref;                       ///< empty = 1.1 per objective
    std::uint64_t stride = 1000;      ///< anytime checkpoint stride
};

struct MetricsReport {
    std::vector<VariantMetrics> rows;
    std::map<std::pair<std::string, std::string>, MetricsDelta> deltas;  // (problem, variant)
    std::map<std::pair<std::string, std::string>, AnytimeCurve> curves;  // mean curve
};

MetricsReport compute_metrics(const std::vector<RunFile>& runs, const MetricsOptions& options);
void write_metrics_csv(const std::filesystem::path& path, const MetricsReport& report,
                       const std::optional<std::string>& base);
void write_anytime_csv(const std::filesystem::path& dir, const MetricsReport& report);

/// STN of one algorithm on one problem: per-vector trajectory graphs over
/// the tracked decomposition vectors, merged.
stn::StnGraph build_algorithm_stn(const std::vector<RunLog>& logs, const AlgoConfig& config,
                                  const ProblemSpec& problem, int precision,
                                  const std::vector<int>& tracked = {});

}  // namespace moead
