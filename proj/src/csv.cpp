#include "fss/csv.hpp"

#include <fstream>
#include <sstream>

#include "fss/errors.hpp"

namespace fss::csv {

std::vector<Row> parse(std::string_view text, const std::string& source_name) {
    std::vector<Row> rows;
    std::size_t line = 1;

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        Row row;
        row.line = line;
        std::string field;
        bool quoted = false;
        bool record_done = false;
        bool any_content = false;

        while (!record_done) {
            if (quoted) {
                if (i >= n)
                    throw SchemaError(source_name, row.line, "unterminated quoted field");
                char c = text[i++];
                if (c == '"') {
                    if (i < n && text[i] == '"') {
                        field += '"';
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    if (c == '\n') ++line;
                    field += c;
                }
                continue;
            }
            if (i >= n) {
                row.fields.push_back(std::move(field));
                record_done = true;
                break;
            }
            char c = text[i++];
            switch (c) {
                case '"':
                    if (!field.empty())
                        throw SchemaError(source_name, line, "quote inside unquoted field");
                    quoted = true;
                    any_content = true;
                    break;
                case ',':
                    row.fields.push_back(std::move(field));
                    field.clear();
                    any_content = true;
                    break;
                case '\r':
                    if (i < n && text[i] == '\n') ++i;
                    ++line;
                    row.fields.push_back(std::move(field));
                    record_done = true;
                    break;
                case '\n':
                    ++line;
                    row.fields.push_back(std::move(field));
                    record_done = true;
                    break;
                default:
                    field += c;
                    any_content = true;
                    break;
            }
        }

        // A lone trailing newline does not produce an empty record.
        if (row.fields.size() == 1 && row.fields[0].empty() && !any_content) continue;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Row> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError(path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.filename().string());
}

std::vector<Row> load_table(const std::filesystem::path& path, std::span<const std::string_view> header) {
    auto rows = read_file(path);
    const std::string name = path.filename().string();
    if (rows.empty()) throw SchemaError(name, 1, "empty file, header row required");

    const auto& got = rows.front().fields;
    bool header_ok = got.size() == header.size();
    for (std::size_t i = 0; header_ok && i < header.size(); ++i)
        if (got[i] != header[i]) header_ok = false;
    if (!header_ok) {
        std::string want;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) want += ',';
            want += header[i];
        }
        std::string have;
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (i) have += ',';
            have += got[i];
        }
        throw SchemaError(name, rows.front().line, "header mismatch: expected '" + want + "', got '" + have + "'");
    }

    rows.erase(rows.begin());
    for (const auto& row : rows)
        if (row.fields.size() != header.size())
            throw SchemaError(name, row.line,
                              "expected " + std::to_string(header.size()) + " columns, got " +
                                  std::to_string(row.fields.size()));
    return rows;
}

std::string escape(std::string_view field) {
    bool need = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!need) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out += '"';
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

}  // namespace fss::csv
