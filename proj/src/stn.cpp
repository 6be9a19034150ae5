#include "moead/stn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace moead::stn {

Location map_location(const Vector& x, const std::vector<Bounds>& bounds, int precision) {
    const double scale = std::pow(10.0, precision);
    Location loc;
    loc.cells.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double range = bounds[k].upper - bounds[k].lower;
        const double u = (x[k] - bounds[k].lower) / range;
        loc.cells.push_back(static_cast<std::int64_t>(std::floor(u * scale + 0.5)));
    }
    return loc;
}

std::string location_label(const Location& loc, int precision) {
    const double scale = std::pow(10.0, precision);
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(precision);
    for (std::size_t k = 0; k < loc.cells.size(); ++k) {
        if (k > 0) os << '_';
        os << static_cast<double>(loc.cells[k]) / scale;
    }
    return os.str();
}

namespace {

/// Per-generation representative: lowest unpenalized aggregation over the
/// generation's scaled front, feasible records preferred.
const RunLogRecord* pick_representative(const std::vector<const RunLogRecord*>& front,
                                        const Vector& lambda, Aggregation agg) {
    if (front.empty()) return nullptr;
    std::vector<const RunLogRecord*> pool;
    for (const auto* r : front) {
        if (r->feasible) pool.push_back(r);
    }
    if (pool.empty()) pool = front;

    const std::size_t m = lambda.size();
    Vector lo(m, std::numeric_limits<double>::infinity());
    Vector hi(m, -std::numeric_limits<double>::infinity());
    for (const auto* r : pool) {
        for (std::size_t j = 0; j < m; ++j) {
            lo[j] = std::min(lo[j], r->f[j]);
            hi[j] = std::max(hi[j], r->f[j]);
        }
    }
    const Vector z(m, 0.0);
    const RunLogRecord* best = nullptr;
    double best_value = std::numeric_limits<double>::infinity();
    Vector scaled(m);
    for (const auto* r : pool) {
        for (std::size_t j = 0; j < m; ++j) {
            const double range = hi[j] - lo[j];
            scaled[j] = range > 0.0 ? (r->f[j] - lo[j]) / range : 0.0;
        }
        const double value = aggregate(agg, scaled, lambda, z);
        if (value < best_value) {
            best_value = value;
            best = r;
        }
    }
    return best;
}

}  // namespace

StnGraph build_vector_stn(const std::vector<RunLog>& logs, int vector_id,
                          const WeightSet& weights, const std::vector<Bounds>& bounds,
                          int precision, const BuildOptions& options) {
    if (logs.empty()) throw std::invalid_argument("build_vector_stn: no logs");
    const Vector& lambda = weights.vectors.at(vector_id);

    StnGraph g;
    g.precision = precision;
    for (const auto& log : logs) {
        // generation -> population-front records, in log order
        std::map<std::uint32_t, std::vector<const RunLogRecord*>> fronts;
        for (const auto& r : log.records) {
            if (r.subproblem_id != kArchiveEntry) fronts[r.generation].push_back(&r);
        }
        Location previous;
        bool have_previous = false;
        for (const auto& [generation, front] : fronts) {
            const RunLogRecord* rep = pick_representative(front, lambda, options.aggregation);
            if (rep == nullptr) continue;
            const Location current = map_location(rep->x, bounds, precision);
            NodeInfo& node = g.nodes[current];
            node.count += 1;
            node.origins.insert(options.origin);
            if (options.is_pareto && options.is_pareto(*rep)) node.pareto = true;
            if (!have_previous) {
                node.start = true;
                have_previous = true;
            } else if (previous != current) {
                EdgeInfo& edge = g.edges[{previous, current}];
                edge.count += 1;
                edge.origins.insert(options.origin);
            }
            previous = current;
        }
        if (have_previous) g.nodes[previous].end = true;
    }
    return g;
}

StnGraph merge(const StnGraph& a, const StnGraph& b) {
    if (a.precision != b.precision) {
        throw std::invalid_argument("merge: precision mismatch");
    }
    StnGraph out = a;
    for (const auto& [loc, info] : b.nodes) {
        NodeInfo& node = out.nodes[loc];
        node.count += info.count;
        node.start = node.start || info.start;
        node.end = node.end || info.end;
        node.pareto = node.pareto || info.pareto;
        node.origins.insert(info.origins.begin(), info.origins.end());
    }
    for (const auto& [key, info] : b.edges) {
        EdgeInfo& edge = out.edges[key];
        edge.count += info.count;
        edge.origins.insert(info.origins.begin(), info.origins.end());
    }
    return out;
}

StnGraph merge_all(const std::vector<StnGraph>& graphs) {
    if (graphs.empty()) return {};
    StnGraph out = graphs.front();
    for (std::size_t i = 1; i < graphs.size(); ++i) out = merge(out, graphs[i]);
    return out;
}

StnMetrics stn_metrics(const StnGraph& g) {
    StnMetrics m;
    m.nodes = g.nodes.size();
    m.edges = g.edges.size();
    for (const auto& [loc, info] : g.nodes) {
        if (info.origins.size() >= 2) ++m.shared;
        if (info.pareto) ++m.pf_nodes;
    }
    return m;
}

std::vector<int> default_tracked_vectors(const WeightSet& weights) {
    const std::size_t m = weights.objectives();
    std::vector<int> tracked;
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < weights.size(); ++i) {
            if (weights.vectors[i][j] > weights.vectors[best][j]) best = i;
        }
        tracked.push_back(static_cast<int>(best));
    }
    const double center = 1.0 / static_cast<double>(m);
    std::size_t central = 0;
    double central_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double d2 = 0.0;
        for (double w : weights.vectors[i]) d2 += (w - center) * (w - center);
        if (d2 < central_d2) {
            central_d2 = d2;
            central = i;
        }
    }
    tracked.push_back(static_cast<int>(central));
    std::sort(tracked.begin(), tracked.end());
    tracked.erase(std::unique(tracked.begin(), tracked.end()), tracked.end());
    return tracked;
}

namespace {

std::string join_origins(const std::set<std::string>& origins) {
    std::string out;
    for (const auto& o : origins) {
        if (!out.empty()) out += ',';
        out += o;
    }
    return out;
}

std::set<std::string> split_origins(const std::string& s) {
    std::set<std::string> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        if (next > pos) out.insert(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

Location location_from_label(const std::string& label, int precision) {
    const double scale = std::pow(10.0, precision);
    Location loc;
    std::size_t pos = 0;
    while (pos <= label.size()) {
        std::size_t next = label.find('_', pos);
        if (next == std::string::npos) next = label.size();
        const double value = std::stod(label.substr(pos, next - pos));
        loc.cells.push_back(static_cast<std::int64_t>(std::llround(value * scale)));
        pos = next + 1;
        if (next == label.size()) break;
    }
    return loc;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string export_dot(const StnGraph& g) {
    std::ostringstream os;
    os << "digraph stn {\n";
    os << "  graph [precision=" << g.precision << "];\n";
    for (const auto& [loc, info] : g.nodes) {
        os << "  \"" << location_label(loc, g.precision) << "\" [count=" << info.count
           << ", start=" << (info.start ? 1 : 0) << ", end=" << (info.end ? 1 : 0)
           << ", pareto=" << (info.pareto ? 1 : 0)
           << ", shared=" << (info.origins.size() >= 2 ? 1 : 0) << ", origins=\""
           << join_origins(info.origins) << "\"];\n";
    }
    for (const auto& [key, info] : g.edges) {
        os << "  \"" << location_label(key.first, g.precision) << "\" -> \""
           << location_label(key.second, g.precision) << "\" [count=" << info.count
           << ", origins=\"" << join_origins(info.origins) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_graphml(const StnGraph& g) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    os << "  <key id=\"gp\" for=\"graph\" attr.name=\"precision\" attr.type=\"int\"/>\n";
    os << "  <key id=\"nl\" for=\"node\" attr.name=\"location\" attr.type=\"string\"/>\n";
    os << "  <key id=\"nc\" for=\"node\" attr.name=\"count\" attr.type=\"long\"/>\n";
    os << "  <key id=\"ns\" for=\"node\" attr.name=\"start\" attr.type=\"int\"/>\n";
    os << "  <key id=\"ne\" for=\"node\" attr.name=\"end\" attr.type=\"int\"/>\n";
    os << "  <key id=\"np\" for=\"node\" attr.name=\"pareto\" attr.type=\"int\"/>\n";
    os << "  <key id=\"nh\" for=\"node\" attr.name=\"shared\" attr.type=\"int\"/>\n";
    os << "  <key id=\"no\" for=\"node\" attr.name=\"origins\" attr.type=\"string\"/>\n";
    os << "  <key id=\"ec\" for=\"edge\" attr.name=\"count\" attr.type=\"long\"/>\n";
    os << "  <key id=\"eo\" for=\"edge\" attr.name=\"origins\" attr.type=\"string\"/>\n";
    os << "  <graph id=\"stn\" edgedefault=\"directed\">\n";
    os << "    <data key=\"gp\">" << g.precision << "</data>\n";
    std::map<Location, std::size_t> ids;
    std::size_t next_id = 0;
    for (const auto& [loc, info] : g.nodes) {
        ids[loc] = next_id;
        os << "    <node id=\"n" << next_id << "\">\n";
        os << "      <data key=\"nl\">" << xml_escape(location_label(loc, g.precision))
           << "</data>\n";
        os << "      <data key=\"nc\">" << info.count << "</data>\n";
        os << "      <data key=\"ns\">" << (info.start ? 1 : 0) << "</data>\n";
        os << "      <data key=\"ne\">" << (info.end ? 1 : 0) << "</data>\n";
        os << "      <data key=\"np\">" << (info.pareto ? 1 : 0) << "</data>\n";
        os << "      <data key=\"nh\">" << (info.origins.size() >= 2 ? 1 : 0) << "</data>\n";
        os << "      <data key=\"no\">" << xml_escape(join_origins(info.origins)) << "</data>\n";
        os << "    </node>\n";
        ++next_id;
    }
    for (const auto& [key, info] : g.edges) {
        os << "    <edge source=\"n" << ids.at(key.first) << "\" target=\"n"
           << ids.at(key.second) << "\">\n";
        os << "      <data key=\"ec\">" << info.count << "</data>\n";
        os << "      <data key=\"eo\">" << xml_escape(join_origins(info.origins)) << "</data>\n";
        os << "    </edge>\n";
    }
    os << "  </graph>\n";
    os << "</graphml>\n";
    return os.str();
}

std::string xml_unescape(const std::string& s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '&') {
            if (s.compare(i, 5, "&amp;") == 0) {
                out += '&';
                i += 5;
                continue;
            }
            if (s.compare(i, 4, "&lt;") == 0) {
                out += '<';
                i += 4;
                continue;
            }
            if (s.compare(i, 4, "&gt;") == 0) {
                out += '>';
                i += 4;
                continue;
            }
            if (s.compare(i, 6, "&quot;") == 0) {
                out += '"';
                i += 6;
                continue;
            }
        }
        out += s[i++];
    }
    return out;
}

// Minimal readers for the exact documents the exporters produce.

std::string attr_value(const std::string& line, const std::string& name) {
    const std::string token = name + "=";
    const std::size_t at = line.find(token);
    if (at == std::string::npos) throw std::runtime_error("graph parse: missing " + name);
    std::size_t begin = at + token.size();
    if (line[begin] == '"') {
        ++begin;
        const std::size_t end = line.find('"', begin);
        return line.substr(begin, end - begin);
    }
    std::size_t end = begin;
    while (end < line.size() && (std::isdigit(static_cast<unsigned char>(line[end])) || line[end] == '-')) {
        ++end;
    }
    return line.substr(begin, end - begin);
}

StnGraph parse_dot(const std::string& text) {
    StnGraph g;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find("graph [precision=") != std::string::npos) {
            g.precision = std::stoi(attr_value(line, "precision"));
            continue;
        }
        const std::size_t quote = line.find('"');
        if (quote == std::string::npos) continue;
        const std::size_t arrow = line.find("\" -> \"");
        if (arrow != std::string::npos) {
            const std::string src = line.substr(quote + 1, arrow - quote - 1);
            const std::size_t dst_begin = arrow + 6;
            const std::size_t dst_end = line.find('"', dst_begin);
            const std::string dst = line.substr(dst_begin, dst_end - dst_begin);
            EdgeInfo info;
            info.count = std::stoull(attr_value(line, "count"));
            info.origins = split_origins(attr_value(line, "origins"));
            g.edges[{location_from_label(src, g.precision),
                     location_from_label(dst, g.precision)}] = info;
        } else {
            const std::size_t label_end = line.find('"', quote + 1);
            const std::string label = line.substr(quote + 1, label_end - quote - 1);
            NodeInfo info;
            info.count = std::stoull(attr_value(line, "count"));
            info.start = attr_value(line, "start") == "1";
            info.end = attr_value(line, "end") == "1";
            info.pareto = attr_value(line, "pareto") == "1";
            info.origins = split_origins(attr_value(line, "origins"));
            g.nodes[location_from_label(label, g.precision)] = info;
        }
    }
    return g;
}

StnGraph parse_graphml(const std::string& text) {
    StnGraph g;
    std::istringstream is(text);
    std::string line;
    std::map<std::string, Location> by_id;
    std::string node_id;
    Location edge_src, edge_dst;
    bool in_node = false, in_edge = false;
    NodeInfo node;
    EdgeInfo edge;

    auto data_value = [](const std::string& l) {
        const std::size_t begin = l.find('>') + 1;
        const std::size_t end = l.rfind("</data>");
        return xml_unescape(l.substr(begin, end - begin));
    };
    std::string node_label;

    while (std::getline(is, line)) {
        if (line.find("<data key=\"gp\">") != std::string::npos) {
            g.precision = std::stoi(data_value(line));
        } else if (line.find("<node id=") != std::string::npos) {
            in_node = true;
            node = {};
            node_label.clear();
            node_id = attr_value(line, "id");
        } else if (line.find("</node>") != std::string::npos) {
            const Location loc = location_from_label(node_label, g.precision);
            by_id[node_id] = loc;
            g.nodes[loc] = node;
            in_node = false;
        } else if (line.find("<edge source=") != std::string::npos) {
            in_edge = true;
            edge = {};
            edge_src = by_id.at(attr_value(line, "source"));
            edge_dst = by_id.at(attr_value(line, "target"));
        } else if (line.find("</edge>") != std::string::npos) {
            g.edges[{edge_src, edge_dst}] = edge;
            in_edge = false;
        } else if (in_node && line.find("<data key=\"nl\">") != std::string::npos) {
            node_label = data_value(line);
        } else if (in_node && line.find("<data key=\"nc\">") != std::string::npos) {
            node.count = std::stoull(data_value(line));
        } else if (in_node && line.find("<data key=\"ns\">") != std::string::npos) {
            node.start = data_value(line) == "1";
        } else if (in_node && line.find("<data key=\"ne\">") != std::string::npos) {
            node.end = data_value(line) == "1";
        } else if (in_node && line.find("<data key=\"np\">") != std::string::npos) {
            node.pareto = data_value(line) == "1";
        } else if (in_node && line.find("<data key=\"no\">") != std::string::npos) {
            node.origins = split_origins(data_value(line));
        } else if (in_edge && line.find("<data key=\"ec\">") != std::string::npos) {
            edge.count = std::stoull(data_value(line));
        } else if (in_edge && line.find("<data key=\"eo\">") != std::string::npos) {
            edge.origins = split_origins(data_value(line));
        }
    }
    return g;
}

}  // namespace

std::string export_graph(const StnGraph& g, GraphFormat format) {
    return format == GraphFormat::Dot ? export_dot(g) : export_graphml(g);
}

StnGraph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::Dot ? parse_dot(text) : parse_graphml(text);
}

}  // namespace moead::stn
