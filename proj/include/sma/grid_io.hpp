#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sma/grid.hpp"

namespace sma {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Grid file formats:
//   CSV  - one row per line, comma-separated signed decimal integers, no
//          header, no empty fields; canonical output uses LF line endings,
//          no trailing whitespace, minus signs only.
//   JSON - {"rows": m, "cols": n, "entries": [[...], ...]} with rows/cols
//          validated against the entries shape.

std::string to_csv(const SignedArray& a);
std::string to_json(const SignedArray& a);

/// Parses CSV text. Rejects ragged rows, non-integer fields, empty fields,
/// and (when allow_zero is false) zero entries.
SignedArray parse_csv(std::string_view text, bool allow_zero = true);

/// Parses the JSON object form with the same entry rules as parse_csv.
SignedArray parse_json(std::string_view text, bool allow_zero = true);

/// Reads a grid file, sniffing JSON (leading '{') vs CSV.
SignedArray load_grid_file(const std::string& path, bool allow_zero = true);

/// Writes text to a file, replacing any existing content.
void write_file(const std::string& path, std::string_view text);

/// Directory holding the shipped reference grids: the SMA_FIXTURES_DIR
/// environment variable when set, otherwise the build-time default.
std::string fixtures_dir();

}  // namespace sma
