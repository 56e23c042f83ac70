#pragma once

#include "kindep/bounds.hpp"
#include "kindep/graph.hpp"
#include "kindep/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kindep::cli {

enum class Command { Spectrum, Bounds, Oracle, Table1, Table2 };
enum class Format { Text, Csv, JsonLines };

struct KRange {
    int lo = 1;
    int hi = 1;
};

// `3` or `3..7`. Throws Error{Parse}.
KRange parse_k_range(std::string_view text);

struct RunConfig {
    Command command = Command::Bounds;
    std::optional<std::string> named;
    std::optional<std::string> file;
    std::optional<std::string> generator;
    std::optional<KRange> k;
    std::optional<double> tol;
    Format format = Format::Text;
    std::int64_t oracle_budget = 10'000'000;
};

// Bounds include the exact value when the graph has at most this many vertices.
inline constexpr int oracle_vertex_threshold = 128;

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_compute = 3;
inline constexpr int exit_budget = 4;

// One column of the Johnson comparison table.
struct Table2Column {
    int k = 0;
    std::optional<double> alternating_top; // P_k(theta_0)
    std::optional<double> fiol_raw;
    std::int64_t W_k = 0;
    double theta = 0.0;
    double lambda_p = 0.0;
    double q_top = 0.0;
    double lambda_q = 0.0;
    BoundReport act_hoffman;
    BoundReport general_k;
    BoundReport walk_regular;
};

std::vector<Table2Column> table2_columns(const BoundContext& ctx, KRange k);

// The graphs of the named-graph table that the catalog can build.
std::vector<std::string> table1_graphs();

// Parses argv-style arguments (without the program name), runs the command
// and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kindep::cli
