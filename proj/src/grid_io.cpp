#include "sma/grid_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace sma {

namespace {

long long parse_entry(std::string_view field, std::size_t row, std::size_t col) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
        throw ParseError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                         "): '" + std::string(field) + "' is not a signed decimal integer");
    }
    return value;
}

void reject_zeros(const SignedArray& a, bool allow_zero) {
    if (allow_zero) return;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c) == 0) {
                throw ParseError("cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                 ") is zero; this command requires zero-free grids");
            }
        }
    }
}

}  // namespace

std::string to_csv(const SignedArray& a) {
    std::string out;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c > 0) out.push_back(',');
            out += std::to_string(a(r, c));
        }
        out.push_back('\n');
    }
    return out;
}

std::string to_json(const SignedArray& a) {
    nlohmann::json doc;
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump();
}

SignedArray parse_csv(std::string_view text, bool allow_zero) {
    std::vector<std::vector<long long>> rows;
    std::size_t line_start = 0;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        line_start = line_end + 1;
        if (line.empty() && line_start >= text.size()) break;  // trailing newline

        std::vector<long long> row;
        std::size_t field_start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', field_start);
            const std::string_view field =
                line.substr(field_start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - field_start);
            row.push_back(parse_entry(field, rows.size() + 1, row.size() + 1));
            if (comma == std::string_view::npos) break;
            field_start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("row " + std::to_string(rows.size() + 1) + " has " +
                             std::to_string(row.size()) + " fields, expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty grid");
    SignedArray a = SignedArray::from_rows(rows);
    reject_zeros(a, allow_zero);
    return a;
}

SignedArray parse_json(std::string_view text, bool allow_zero) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries")) {
        throw ParseError("JSON grid needs an object with rows, cols and entries");
    }
    if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned() ||
        !doc["entries"].is_array()) {
        throw ParseError("JSON grid: rows/cols must be non-negative integers, entries an array");
    }
    const auto rows = doc["rows"].get<std::size_t>();
    const auto cols = doc["cols"].get<std::size_t>();
    if (doc["entries"].size() != rows) {
        throw ParseError("JSON grid: entries has " + std::to_string(doc["entries"].size()) +
                         " rows, header says " + std::to_string(rows));
    }
    std::vector<long long> flat;
    flat.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = doc["entries"][r];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("JSON grid: row " + std::to_string(r + 1) +
                             " does not have the declared " + std::to_string(cols) + " columns");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer()) {
                throw ParseError("JSON grid: cell (" + std::to_string(r + 1) + "," +
                                 std::to_string(c + 1) + ") is not an integer");
            }
            flat.push_back(row[c].get<long long>());
        }
    }
    SignedArray a(rows, cols, std::move(flat));
    reject_zeros(a, allow_zero);
    return a;
}

SignedArray load_grid_file(const std::string& path, bool allow_zero) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text, allow_zero);
    return parse_csv(text, allow_zero);
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string fixtures_dir() {
    if (const char* env = std::getenv("SMA_FIXTURES_DIR")) return env;
#ifdef SMA_DEFAULT_FIXTURES_DIR
    return SMA_DEFAULT_FIXTURES_DIR;
#else
    return "fixtures";
#endif
}

}  // namespace sma
