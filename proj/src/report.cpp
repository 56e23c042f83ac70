#include "kindep/report.hpp"

#include "kindep/error.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace kindep {

std::string format_real(double value)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{})
        throw Error(ErrorCode::Parse, "cannot format real");
    return std::string(buf.data(), ptr);
}

std::string format_real_sig(double value, int significant)
{
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*g", significant, value);
    return buf.data();
}

double parse_real(std::string_view text)
{
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorCode::Parse, "bad real '" + std::string(text) + "'");
    return value;
}

bool operator==(const ReportRow& a, const ReportRow& b)
{
    const bool raw_equal = (std::isnan(a.raw) && std::isnan(b.raw)) || a.raw == b.raw;
    return raw_equal && a.graph == b.graph && a.n == b.n && a.k == b.k && a.bound_name == b.bound_name
        && a.floored == b.floored && a.applicable == b.applicable && a.oracle == b.oracle;
}

namespace {

std::string quote(std::string_view field)
{
    if (field.find_first_of(",\"\n\r") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv(std::string_view line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted)
        throw Error(ErrorCode::Parse, "unterminated quote in CSV row");
    return fields;
}

template <typename Int>
Int parse_int(const std::string& text)
{
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorCode::Parse, "bad integer '" + text + "'");
    return value;
}

} // namespace

std::string to_csv(const ReportRow& row)
{
    std::string out;
    out += quote(row.graph);
    out += ',' + std::to_string(row.n);
    out += ',' + std::to_string(row.k);
    out += ',' + quote(row.bound_name);
    out += ',' + format_real(row.raw);
    out += ',' + std::to_string(row.floored);
    out += row.applicable ? ",true" : ",false";
    out += ',';
    if (row.oracle)
        out += std::to_string(*row.oracle);
    return out;
}

ReportRow parse_csv(std::string_view line)
{
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    auto f = split_csv(line);
    if (f.size() != 8)
        throw Error(ErrorCode::Parse, "expected 8 CSV fields, got " + std::to_string(f.size()));
    ReportRow row;
    row.graph = f[0];
    row.n = parse_int<int>(f[1]);
    row.k = parse_int<int>(f[2]);
    row.bound_name = f[3];
    row.raw = parse_real(f[4]);
    row.floored = parse_int<std::int64_t>(f[5]);
    if (f[6] == "true")
        row.applicable = true;
    else if (f[6] == "false")
        row.applicable = false;
    else
        throw Error(ErrorCode::Parse, "bad applicable flag '" + f[6] + "'");
    if (!f[7].empty())
        row.oracle = parse_int<int>(f[7]);
    return row;
}

std::string to_json_line(const ReportRow& row)
{
    nlohmann::json j;
    j["graph"] = row.graph;
    j["n"] = row.n;
    j["k"] = row.k;
    j["bound_name"] = row.bound_name;
    if (std::isfinite(row.raw))
        j["raw"] = row.raw;
    else
        j["raw"] = nullptr;
    j["floored"] = row.floored;
    j["applicable"] = row.applicable;
    if (row.oracle)
        j["oracle"] = *row.oracle;
    else
        j["oracle"] = nullptr;
    return j.dump();
}

} // namespace kindep
