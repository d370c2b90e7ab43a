#include "symsing/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace symsing {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_format(std::string_view tag)
{
    if (tag == "csv") return ReportFormat::Csv;
    if (tag == "jsonl" || tag == "json-lines") return ReportFormat::JsonLines;
    throw std::invalid_argument("unknown format '" + std::string(tag) + "' (expected csv or jsonl)");
}

std::string_view format_tag(ReportFormat f)
{
    return f == ReportFormat::Csv ? "csv" : "jsonl";
}

Cell Cell::integer(const Integer& v)
{
    return {Kind::Int, v.str()};
}

Cell Cell::rational(const Rational& v)
{
    return {Kind::Rational, to_fraction_string(v)};
}

Cell Cell::boolean(bool v)
{
    return {Kind::Bool, v ? "true" : "false"};
}

Cell Cell::real(double v)
{
    if (std::isnan(v)) return {Kind::Real, "nan"};
    if (std::isinf(v)) return {Kind::Real, v > 0 ? "inf" : "-inf"};
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, end);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return {Kind::Real, s};
}

Cell Cell::string(std::string v)
{
    return {Kind::Text, std::move(v)};
}

Cell infer_cell(std::string text)
{
    static const std::regex int_re(R"(-?[0-9]+)");
    static const std::regex rat_re(R"(-?[0-9]+/[0-9]+)");
    static const std::regex real_re(R"(-?[0-9]+(\.[0-9]+)?(e[-+]?[0-9]+)?|-?inf|nan)");
    if (text == "true" || text == "false") return {Cell::Kind::Bool, std::move(text)};
    if (std::regex_match(text, int_re)) return {Cell::Kind::Int, std::move(text)};
    if (std::regex_match(text, rat_re)) return {Cell::Kind::Rational, std::move(text)};
    if (std::regex_match(text, real_re)) return {Cell::Kind::Real, std::move(text)};
    return {Cell::Kind::Text, std::move(text)};
}

const Cell* Row::find(std::string_view key) const
{
    for (const auto& [k, v] : cells)
        if (k == key) return &v;
    return nullptr;
}

std::vector<std::string> report_columns(const std::vector<Row>& rows)
{
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (const auto& [k, v] : r.cells)
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    return cols;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split(std::string_view line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

ordered_json json_value(const Cell& c)
{
    switch (c.kind) {
    case Cell::Kind::Bool:
        return c.text == "true";
    case Cell::Kind::Int: {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(c.text.data(), c.text.data() + c.text.size(), v);
        if (ec == std::errc() && p == c.text.data() + c.text.size()) return v;
        return c.text;
    }
    case Cell::Kind::Real:
        if (c.text == "inf" || c.text == "-inf" || c.text == "nan") return c.text;
        return std::stod(c.text);
    default:
        return c.text;
    }
}

Cell from_json(const ordered_json& v)
{
    if (v.is_boolean()) return Cell::boolean(v.get<bool>());
    if (v.is_number_integer()) return Cell::integer(Integer(v.dump()));
    if (v.is_number_float()) return Cell::real(v.get<double>());
    if (v.is_string()) return infer_cell(v.get<std::string>());
    throw std::runtime_error("unsupported JSON value in report row");
}

std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

constexpr std::string_view kMetaPrefix = "#meta";

}  // namespace

std::string render_report(const Report& report, ReportFormat format)
{
    std::ostringstream out;
    const auto& m = report.meta;
    const auto cols = report_columns(report.rows);
    if (format == ReportFormat::Csv) {
        out << kMetaPrefix << ",version=" << m.version << ",seed=" << m.seed << ",config_hash=" << m.config_hash
            << ",command=" << csv_field(m.command) << '\n';
        for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_field(cols[i]);
        out << '\n';
        for (const auto& r : report.rows) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                const Cell* c = r.find(cols[i]);
                out << (i ? "," : "") << (c ? csv_field(c->text) : std::string());
            }
            out << '\n';
        }
    } else {
        ordered_json meta;
        meta["meta"] = {{"version", m.version}, {"seed", m.seed}, {"config_hash", m.config_hash}, {"command", m.command}};
        out << meta.dump() << '\n';
        for (const auto& r : report.rows) {
            ordered_json obj = ordered_json::object();
            for (const auto& [k, v] : r.cells) obj[k] = json_value(v);
            out << obj.dump() << '\n';
        }
    }
    return out.str();
}

void emit_report(const Report& report, ReportFormat format, const std::filesystem::path& path)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open report file " + path.string());
    f << render_report(report, format);
    f.flush();
    if (!f) throw std::runtime_error("failed writing report file " + path.string());
}

Report parse_report(std::string_view text, ReportFormat format)
{
    const auto lines = split_lines(text);
    if (lines.empty()) throw std::runtime_error("report is empty");
    Report out;
    if (format == ReportFormat::Csv) {
        const auto meta = csv_split(lines[0]);
        if (meta.empty() || meta[0] != kMetaPrefix) throw std::runtime_error("report lacks a metadata row");
        for (std::size_t i = 1; i < meta.size(); ++i) {
            const auto eq = meta[i].find('=');
            if (eq == std::string::npos) throw std::runtime_error("malformed metadata field");
            const auto key = meta[i].substr(0, eq);
            const auto val = meta[i].substr(eq + 1);
            if (key == "version") out.meta.version = val;
            else if (key == "seed") out.meta.seed = std::stoull(val);
            else if (key == "config_hash") out.meta.config_hash = val;
            else if (key == "command") out.meta.command = val;
        }
        if (lines.size() < 2) return out;
        const auto header = csv_split(lines[1]);
        for (std::size_t l = 2; l < lines.size(); ++l) {
            const auto fields = csv_split(lines[l]);
            if (fields.size() != header.size()) throw std::runtime_error("CSV row width differs from header");
            Row r;
            for (std::size_t i = 0; i < header.size(); ++i) r.add(header[i], infer_cell(fields[i]));
            out.rows.push_back(std::move(r));
        }
        // A header with no columns means no rows were written.
        if (header.size() == 1 && header[0].empty()) out.rows.clear();
    } else {
        const auto meta = ordered_json::parse(lines[0]);
        if (!meta.contains("meta")) throw std::runtime_error("report lacks a metadata row");
        const auto& m = meta["meta"];
        out.meta.version = m.at("version").get<std::string>();
        out.meta.seed = m.at("seed").get<std::uint64_t>();
        out.meta.config_hash = m.at("config_hash").get<std::string>();
        out.meta.command = m.at("command").get<std::string>();
        for (std::size_t l = 1; l < lines.size(); ++l) {
            const auto obj = ordered_json::parse(lines[l]);
            Row r;
            for (const auto& [k, v] : obj.items()) r.add(k, from_json(v));
            out.rows.push_back(std::move(r));
        }
    }
    return out;
}

Report read_report(const std::filesystem::path& path, ReportFormat format)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open report file " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_report(buf.str(), format);
}

}  // namespace symsing
