#pragma once

#include "kindep/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kindep {

// Text format: a header line `n m`, then m lines `u v` with 0-based vertex
// indices. Anything after `#` on a line is a comment; blank lines are skipped.
//
// write(read(write(g))) is byte-identical to write(g).
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& file);

std::string format_graph(const Graph& g);
void write_graph(std::ostream& out, const Graph& g);

} // namespace kindep
