#include "moead/core.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace moead {

bool dominates(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: objective vectors differ in length");
    }
    bool strictly_better = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) return false;
        if (a[j] < b[j]) strictly_better = true;
    }
    return strictly_better;
}

bool ParetoSet::insert(Solution s) {
    for (const auto& m : members_) {
        if (m.f == s.f || dominates(m.f, s.f)) return false;
    }
    std::erase_if(members_, [&](const Solution& m) { return dominates(s.f, m.f); });
    members_.push_back(std::move(s));
    return true;
}

ParetoSet nondominated_filter(std::span<const Solution> points) {
    ParetoSet out;
    std::vector<const Solution*> sorted;
    sorted.reserve(points.size());
    for (const auto& p : points) sorted.push_back(&p);
    // Earliest eval_index first so that duplicate objective vectors resolve
    // to the oldest solution.
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Solution* a, const Solution* b) { return a->eval_index < b->eval_index; });
    for (const Solution* p : sorted) out.insert(*p);
    return out;
}

namespace {

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void append_vector(std::string& out, const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ';';
        append_double(out, v[i]);
    }
}

Vector parse_vector(const std::string& field, std::size_t line_no) {
    Vector out;
    std::size_t pos = 0;
    while (pos < field.size()) {
        std::size_t next = field.find(';', pos);
        if (next == std::string::npos) next = field.size();
        const std::string token = field.substr(pos, next - pos);
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (end == token.c_str() || *end != '\0') {
            throw std::runtime_error("run log: bad numeric field at line " + std::to_string(line_no));
        }
        out.push_back(value);
        pos = next + 1;
    }
    return out;
}

constexpr const char* kHeader = "run_id,generation,eval_index,subproblem_id,x,f,v,feasible";

}  // namespace

void write_run_log(std::ostream& os, const RunLog& log) {
    os << kHeader << '\n';
    std::string line;
    for (const auto& r : log.records) {
        line.clear();
        line += std::to_string(r.run_id);
        line += ',';
        line += std::to_string(r.generation);
        line += ',';
        line += std::to_string(r.eval_index);
        line += ',';
        line += std::to_string(r.subproblem_id);
        line += ',';
        append_vector(line, r.x);
        line += ',';
        append_vector(line, r.f);
        line += ',';
        append_double(line, r.violation);
        line += ',';
        line += r.feasible ? '1' : '0';
        line += '\n';
        os << line;
    }
}

RunLog read_run_log(std::istream& is) {
    RunLog log;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(is, line)) throw std::runtime_error("run log: empty stream");
    ++line_no;
    if (line != kHeader) throw std::runtime_error("run log: unexpected header");
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t next = line.find(',', pos);
            if (next == std::string::npos) {
                fields.push_back(line.substr(pos));
                break;
            }
            fields.push_back(line.substr(pos, next - pos));
            pos = next + 1;
        }
        if (fields.size() != 8) {
            throw std::runtime_error("run log: expected 8 fields at line " + std::to_string(line_no));
        }
        RunLogRecord r;
        r.run_id = static_cast<std::uint32_t>(std::stoul(fields[0]));
        r.generation = static_cast<std::uint32_t>(std::stoul(fields[1]));
        r.eval_index = std::stoull(fields[2]);
        r.subproblem_id = static_cast<std::int32_t>(std::stol(fields[3]));
        r.x = parse_vector(fields[4], line_no);
        r.f = parse_vector(fields[5], line_no);
        r.violation = parse_vector(fields[6], line_no).at(0);
        r.feasible = fields[7] == "1";
        log.records.push_back(std::move(r));
    }
    return log;
}

void write_run_log_file(const std::filesystem::path& path, const RunLog& log) {
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + tmp.string());
        write_run_log(os, log);
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

RunLog read_run_log_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    return read_run_log(is);
}

}  // namespace moead
