#pragma once

// Report rows and their CSV / JSON-lines encodings.

#include "symsing/numeric.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symsing {

enum class ReportFormat { Csv, JsonLines };

ReportFormat parse_format(std::string_view tag);
std::string_view format_tag(ReportFormat f);

/// A typed cell kept in its canonical text form, so equality is textual.
struct Cell {
    enum class Kind { Int, Rational, Bool, Real, Text };
    Kind kind = Kind::Text;
    std::string text;

    static Cell integer(const Integer& v);
    static Cell integer(std::int64_t v) { return integer(Integer(v)); }
    static Cell uinteger(std::uint64_t v) { return integer(Integer(v)); }
    static Cell rational(const Rational& v);
    static Cell boolean(bool v);
    /// Shortest round-trip form; always contains '.', 'e', "inf" or "nan".
    static Cell real(double v);
    static Cell string(std::string v);

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Infers the kind of an untyped field the way the emitters write it.
Cell infer_cell(std::string text);

struct Row {
    std::vector<std::pair<std::string, Cell>> cells;

    Row& add(std::string key, Cell value)
    {
        cells.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    const Cell* find(std::string_view key) const;

    friend bool operator==(const Row&, const Row&) = default;
};

struct ReportMeta {
    std::string version;
    std::uint64_t seed = 0;
    std::string config_hash;  // 16 hex digits
    std::string command;

    friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

struct Report {
    ReportMeta meta;
    std::vector<Row> rows;
};

/// Columns in first-appearance order over all rows.
std::vector<std::string> report_columns(const std::vector<Row>& rows);

std::string render_report(const Report& report, ReportFormat format);
/// Writes render_report to path; throws std::runtime_error naming the path.
void emit_report(const Report& report, ReportFormat format, const std::filesystem::path& path);

Report parse_report(std::string_view text, ReportFormat format);
Report read_report(const std::filesystem::path& path, ReportFormat format);

}  // namespace symsing
