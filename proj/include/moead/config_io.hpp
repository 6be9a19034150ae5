#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moead/engine.hpp"

namespace moead {

/// Flat sectioned key-value text: `[section]` headers, `key = value` lines,
/// `#` comments. Every document opens with a [file] section carrying
/// `format` and `version`. Order is preserved so emitted files are
/// deterministic and diff-friendly.
class KvDoc {
public:
    using Entries = std::vector<std::pair<std::string, std::string>>;

    /// Throws std::runtime_error with a line number on malformed input.
    static KvDoc parse(std::istream& is);
    static KvDoc parse_file(const std::filesystem::path& path);

    std::string text() const;
    void save(const std::filesystem::path& path) const;  // temp + rename

    Entries& add_section(const std::string& name);
    bool has_section(const std::string& name) const;
    const Entries* section(const std::string& name) const;
    std::vector<std::string> section_names() const;

    const std::string* find(const std::string& section, const std::string& key) const;
    std::string require(const std::string& section, const std::string& key) const;

    /// Declared format from the [file] section; throws if absent or if the
    /// version is unsupported.
    std::string format() const;

private:
    std::vector<std::pair<std::string, Entries>> sections_;
};

std::string format_double(double v);  ///< 17 significant digits, round-trip safe

std::vector<std::string> split_list(const std::string& csv);  ///< comma-separated, trimmed

KvDoc config_to_doc(const AlgoConfig& config);
AlgoConfig config_from_doc(const KvDoc& doc);
AlgoConfig load_config_file(const std::filesystem::path& path);
void save_config_file(const std::filesystem::path& path, const AlgoConfig& config);

}  // namespace moead
