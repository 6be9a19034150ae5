#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/problems.hpp"
#include "moead/scalarization.hpp"

namespace moead::stn {

/// Quantized decision-space location: bound-normalized coordinates rounded
/// half-up to `precision` decimals.
struct Location {
    std::vector<std::int64_t> cells;

    auto operator<=>(const Location&) const = default;
};

Location map_location(const Vector& x, const std::vector<Bounds>& bounds, int precision);
std::string location_label(const Location& loc, int precision);

struct NodeInfo {
    std::uint64_t count = 0;
    bool start = false;
    bool end = false;
    bool pareto = false;
    std::set<std::string> origins;
};

struct EdgeInfo {
    std::uint64_t count = 0;
    std::set<std::string> origins;
};

struct StnGraph {
    int precision = 2;
    std::map<Location, NodeInfo> nodes;
    std::map<std::pair<Location, Location>, EdgeInfo> edges;
};

struct BuildOptions {
    Aggregation aggregation = Aggregation::WT;
    std::string origin = "algo";
    /// Flags a node as Pareto-optimal when any of its solutions satisfies this.
    std::function<bool(const RunLogRecord&)> is_pareto;
};

/// Trajectory graph of one decomposition vector aggregated over runs: per
/// generation the representative is the logged population-front solution
/// minimizing the unpenalized aggregation for that vector (infeasible
/// records are skipped whenever a feasible one exists); consecutive
/// representative locations form the edges, self-loops dropped.
StnGraph build_vector_stn(const std::vector<RunLog>& logs, int vector_id,
                          const WeightSet& weights, const std::vector<Bounds>& bounds,
                          int precision, const BuildOptions& options = {});

/// Graph union: node/edge supports united, counts summed, origins united.
/// Throws std::invalid_argument on precision mismatch.
StnGraph merge(const StnGraph& a, const StnGraph& b);
StnGraph merge_all(const std::vector<StnGraph>& graphs);

struct StnMetrics {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t shared = 0;    ///< nodes visited by more than one origin
    std::size_t pf_nodes = 0;  ///< nodes flagged Pareto-optimal
};

StnMetrics stn_metrics(const StnGraph& g);

enum class GraphFormat { Dot, GraphML };

/// Deterministic text export; parse_graph(export_graph(g)) == g.
std::string export_graph(const StnGraph& g, GraphFormat format);
StnGraph parse_graph(const std::string& text, GraphFormat format);

/// Default tracked vectors: the m extreme vectors plus the most central one.
std::vector<int> default_tracked_vectors(const WeightSet& weights);

}  // namespace moead::stn
