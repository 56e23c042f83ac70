#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kindep {

// Shortest decimal that parses back to the same double.
std::string format_real(double value);
// printf-style %.{sig}g
std::string format_real_sig(double value, int significant = 6);
// Throws Error{Parse}.
double parse_real(std::string_view text);

// One line of `bounds` output.
struct ReportRow {
    std::string graph;
    int n = 0;
    int k = 0;
    std::string bound_name;
    double raw = 0.0; // NaN when the bound does not apply
    std::int64_t floored = 0;
    bool applicable = false;
    std::optional<int> oracle;

    // NaN raw values compare equal.
    friend bool operator==(const ReportRow& a, const ReportRow& b);
};

inline constexpr std::string_view csv_header = "graph,n,k,bound_name,raw,floored,applicable,oracle";

std::string to_csv(const ReportRow& row);
// Throws Error{Parse}.
ReportRow parse_csv(std::string_view line);

std::string to_json_line(const ReportRow& row);

} // namespace kindep
