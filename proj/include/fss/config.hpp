#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace fss {

// Minimal TOML-style reader: `key = value` lines, [section] headers
// (flattened to "section.key"), # comments, quoted strings, bare numbers
// and booleans. Covers dataset.toml and weights.toml; nothing more.
class TomlFile {
public:
    static TomlFile parse_file(const std::filesystem::path& path);
    static TomlFile parse(std::string_view text, std::string source);

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    // Looks up "key" and "section.key" for every section, bare key first.
    std::optional<std::string> find(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::int64_t get_int(const std::string& key) const;
    double get_double(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
    double get_double_or(const std::string& key, double fallback) const;

    const std::string& source() const { return source_; }

private:
    std::map<std::string, std::string> values_;
    std::string source_;
};

struct Window {
    int start = 0;
    int end = 0;
    int length() const { return end - start + 1; }
};

// Contents of dataset.toml: where the six CSV files live, the observation
// window, and the citation census date.
struct RunConfig {
    std::filesystem::path data_dir;
    Window window;
    std::string census_date;  // YYYY-MM-DD
    std::optional<std::filesystem::path> weights_file;

    std::filesystem::path config_path;

    static RunConfig load(const std::filesystem::path& config_path);

    std::filesystem::path file(const char* name) const { return data_dir / name; }
};

}  // namespace fss
