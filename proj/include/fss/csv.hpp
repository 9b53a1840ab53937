#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fss::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based physical line where the record starts
};

// RFC 4180: comma separator, optional double-quoted fields, "" escapes a
// quote, records may contain embedded newlines inside quotes. Accepts both
// LF and CRLF. Throws SchemaError on unbalanced quotes.
std::vector<Row> parse(std::string_view text, const std::string& source_name);

std::vector<Row> read_file(const std::filesystem::path& path);

// Reads a file, checks the exact header, returns data rows with the header
// stripped. Every row must have exactly header.size() fields.
std::vector<Row> load_table(const std::filesystem::path& path, std::span<const std::string_view> header);

std::string escape(std::string_view field);

void write_row(std::ostream& out, std::span<const std::string> fields);

}  // namespace fss::csv
