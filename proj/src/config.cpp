#include "fss/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fss/errors.hpp"
#include "fss/util.hpp"

namespace fss {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Strips an unquoted trailing comment.
std::string_view strip_comment(std::string_view s) {
    bool in_quote = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') in_quote = !in_quote;
        if (s[i] == '#' && !in_quote) return s.substr(0, i);
    }
    return s;
}

}  // namespace

TomlFile TomlFile::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MissingFileError(path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

TomlFile TomlFile::parse(std::string_view text, std::string source) {
    TomlFile out;
    out.source_ = std::move(source);

    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        line = trim(strip_comment(line));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(out.source_ + ":" + std::to_string(line_no) + ": malformed section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(out.source_ + ":" + std::to_string(line_no) + ": expected 'key = value'");
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(out.source_ + ":" + std::to_string(line_no) + ": empty key");

        std::string parsed;
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            // Basic strings; only \" and \\ escapes occur in our files.
            std::string_view body = value.substr(1, value.size() - 2);
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (body[i] == '\\' && i + 1 < body.size()) {
                    parsed += body[++i];
                } else {
                    parsed += body[i];
                }
            }
        } else {
            parsed = std::string(value);
        }

        std::string full = section.empty() ? key : section + "." + key;
        out.values_[full] = parsed;
    }
    return out;
}

std::optional<std::string> TomlFile::find(const std::string& key) const {
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    // Accept the key under any section: "dataset.directory" matches "directory".
    std::string suffix = "." + key;
    for (const auto& [k, v] : values_) {
        if (k.size() > suffix.size() && k.compare(k.size() - suffix.size(), suffix.size(), suffix) == 0) return v;
    }
    return std::nullopt;
}

std::string TomlFile::get_string(const std::string& key) const {
    auto v = find(key);
    if (!v) throw ConfigError(source_ + ": missing key '" + key + "'");
    return *v;
}

std::int64_t TomlFile::get_int(const std::string& key) const {
    auto v = find(key);
    if (!v) throw ConfigError(source_ + ": missing key '" + key + "'");
    long long out = 0;
    if (!parse_int(*v, out)) throw ConfigError(source_ + ": key '" + key + "' is not an integer: " + *v);
    return out;
}

double TomlFile::get_double(const std::string& key) const {
    auto v = find(key);
    if (!v) throw ConfigError(source_ + ": missing key '" + key + "'");
    double out = 0;
    if (!parse_double(*v, out)) throw ConfigError(source_ + ": key '" + key + "' is not a number: " + *v);
    return out;
}

std::string TomlFile::get_string_or(const std::string& key, const std::string& fallback) const {
    auto v = find(key);
    return v ? *v : fallback;
}

std::int64_t TomlFile::get_int_or(const std::string& key, std::int64_t fallback) const {
    return find(key) ? get_int(key) : fallback;
}

double TomlFile::get_double_or(const std::string& key, double fallback) const {
    return find(key) ? get_double(key) : fallback;
}

namespace {

bool valid_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& config_path) {
    TomlFile toml = TomlFile::parse_file(config_path);
    RunConfig cfg;
    cfg.config_path = config_path;

    std::filesystem::path base = config_path.parent_path();
    std::filesystem::path dir = toml.get_string("directory");
    cfg.data_dir = dir.is_absolute() ? dir : base / dir;

    cfg.window.start = static_cast<int>(toml.get_int("window_start"));
    cfg.window.end = static_cast<int>(toml.get_int("window_end"));
    if (cfg.window.start > cfg.window.end)
        throw ConfigError(toml.source() + ": window_start > window_end");

    cfg.census_date = toml.get_string("census_date");
    if (!valid_date(cfg.census_date))
        throw ConfigError(toml.source() + ": census_date must be YYYY-MM-DD, got '" + cfg.census_date + "'");

    if (auto w = toml.find("weights")) {
        std::filesystem::path wp = *w;
        cfg.weights_file = wp.is_absolute() ? wp : base / wp;
    }
    return cfg;
}

}  // namespace fss
