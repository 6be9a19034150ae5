#include "moead/config_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace moead {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

KvDoc KvDoc::parse(std::istream& is) {
    KvDoc doc;
    std::string line;
    std::size_t line_no = 0;
    Entries* current = nullptr;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw std::runtime_error("line " + std::to_string(line_no) + ": unterminated section header");
            }
            current = &doc.add_section(trim(t.substr(1, t.size() - 2)));
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        if (current == nullptr) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": entry outside any section");
        }
        current->emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return doc;
}

KvDoc KvDoc::parse_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    try {
        return parse(is);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::string KvDoc::text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, entries] : sections_) {
        if (!first) os << '\n';
        first = false;
        os << '[' << name << "]\n";
        for (const auto& [key, value] : entries) os << key << " = " << value << '\n';
    }
    return os.str();
}

void KvDoc::save(const std::filesystem::path& path) const {
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + tmp.string());
        os << text();
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

KvDoc::Entries& KvDoc::add_section(const std::string& name) {
    sections_.emplace_back(name, Entries{});
    return sections_.back().second;
}

bool KvDoc::has_section(const std::string& name) const {
    return section(name) != nullptr;
}

const KvDoc::Entries* KvDoc::section(const std::string& name) const {
    for (const auto& [n, entries] : sections_) {
        if (n == name) return &entries;
    }
    return nullptr;
}

std::vector<std::string> KvDoc::section_names() const {
    std::vector<std::string> names;
    names.reserve(sections_.size());
    for (const auto& [n, _] : sections_) names.push_back(n);
    return names;
}

const std::string* KvDoc::find(const std::string& section_name, const std::string& key) const {
    const Entries* entries = section(section_name);
    if (entries == nullptr) return nullptr;
    for (const auto& [k, v] : *entries) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string KvDoc::require(const std::string& section_name, const std::string& key) const {
    const std::string* v = find(section_name, key);
    if (v == nullptr) {
        throw std::runtime_error("missing key '" + key + "' in section [" + section_name + "]");
    }
    return *v;
}

std::string KvDoc::format() const {
    const std::string fmt = require("file", "format");
    const std::string version = require("file", "version");
    if (version != "1") throw std::runtime_error("unsupported file version " + version);
    return fmt;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t next = csv.find(',', pos);
        if (next == std::string::npos) next = csv.size();
        const std::string item = trim(csv.substr(pos, next - pos));
        if (!item.empty()) out.push_back(item);
        pos = next + 1;
        if (next == csv.size()) break;
    }
    return out;
}

KvDoc config_to_doc(const AlgoConfig& config) {
    KvDoc doc;
    auto& file = doc.add_section("file");
    file.emplace_back("format", "config");
    file.emplace_back("version", "1");
    auto& c = doc.add_section("config");
    c.emplace_back("name", config.name);
    c.emplace_back("decomp", to_string(config.decomp));
    c.emplace_back("pop_size", std::to_string(config.pop_size));
    c.emplace_back("aggregation", to_string(config.aggregation));
    c.emplace_back("update", to_string(config.update));
    c.emplace_back("nr", std::to_string(config.nr));
    if (config.update == UpdateStrategy::Restricted) {
        c.emplace_back("tr", std::to_string(config.tr));
    }
    c.emplace_back("T", std::to_string(config.T));
    c.emplace_back("delta", format_double(config.delta));
    c.emplace_back("de_F", format_double(config.de_f));
    c.emplace_back("pm_eta", format_double(config.pm_eta));
    c.emplace_back("pm_prob", format_double(config.pm_prob));
    c.emplace_back("ra", config.ra.partial ? "partial" : "off");
    if (config.ra.partial) c.emplace_back("ra_frac", format_double(config.ra.fraction));
    c.emplace_back("restart", config.restart.enabled ? "every" : "off");
    if (config.restart.enabled) {
        c.emplace_back("restart_evals", std::to_string(config.restart.every));
    }
    c.emplace_back("budget", std::to_string(config.budget));
    c.emplace_back("seed", std::to_string(config.seed));
    return doc;
}

AlgoConfig config_from_doc(const KvDoc& doc) {
    if (doc.format() != "config") throw std::runtime_error("not a config file");
    AlgoConfig config;
    config.name = doc.require("config", "name");
    config.decomp = decomp_from_string(doc.require("config", "decomp"));
    config.pop_size = std::stoul(doc.require("config", "pop_size"));
    config.aggregation = aggregation_from_string(doc.require("config", "aggregation"));
    config.update = update_from_string(doc.require("config", "update"));
    config.nr = std::stoi(doc.require("config", "nr"));
    if (config.update == UpdateStrategy::Restricted) {
        config.tr = std::stoi(doc.require("config", "tr"));
    }
    config.T = std::stoul(doc.require("config", "T"));
    config.delta = std::stod(doc.require("config", "delta"));
    config.de_f = std::stod(doc.require("config", "de_F"));
    config.pm_eta = std::stod(doc.require("config", "pm_eta"));
    config.pm_prob = std::stod(doc.require("config", "pm_prob"));
    const std::string ra = doc.require("config", "ra");
    config.ra.partial = ra == "partial";
    if (config.ra.partial) {
        config.ra.fraction = std::stod(doc.require("config", "ra_frac"));
    } else if (ra != "off") {
        throw std::runtime_error("unknown ra mode: " + ra);
    }
    const std::string restart = doc.require("config", "restart");
    config.restart.enabled = restart == "every";
    if (config.restart.enabled) {
        config.restart.every = std::stoull(doc.require("config", "restart_evals"));
    } else if (restart != "off") {
        throw std::runtime_error("unknown restart mode: " + restart);
    }
    config.budget = std::stoull(doc.require("config", "budget"));
    config.seed = std::stoull(doc.require("config", "seed"));
    return config;
}

AlgoConfig load_config_file(const std::filesystem::path& path) {
    return config_from_doc(KvDoc::parse_file(path));
}

void save_config_file(const std::filesystem::path& path, const AlgoConfig& config) {
    config_to_doc(config).save(path);
}

}  // namespace moead
