#include "kindep/graph_io.hpp"

#include "kindep/error.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace kindep {

namespace {

struct LineReader {
    std::string_view text;
    int line_no = 0;

    // Next line with content, comments stripped; false at end of input.
    bool next(std::string_view& line)
    {
        while (!text.empty()) {
            auto nl = text.find('\n');
            line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                continue;
            line = line.substr(first);
            return true;
        }
        return false;
    }
};

// Exactly two whitespace-separated non-negative integers.
bool parse_pair(std::string_view line, long long& a, long long& b)
{
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto skip = [&] {
        while (p != end && (*p == ' ' || *p == '\t' || *p == '\r'))
            ++p;
    };
    skip();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == p)
        return false;
    p = r1.ptr;
    if (p == end || (*p != ' ' && *p != '\t'))
        return false;
    skip();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{} || r2.ptr == p)
        return false;
    p = r2.ptr;
    skip();
    return p == end;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line))
        throw Error(ErrorCode::Parse, "empty graph file");
    long long n = 0;
    long long m = 0;
    if (!parse_pair(line, n, m) || n < 1 || m < 0 || n > (1LL << 30))
        throw Error(ErrorCode::Parse, "line " + std::to_string(reader.line_no) + ": expected header 'n m'");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw Error(ErrorCode::Parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        long long u = 0;
        long long v = 0;
        if (!parse_pair(line, u, v) || u < 0 || v < 0 || u > (1LL << 30) || v > (1LL << 30))
            throw Error(ErrorCode::Parse, "line " + std::to_string(reader.line_no) + ": expected edge 'u v'");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (reader.next(line))
        throw Error(ErrorCode::Parse, "line " + std::to_string(reader.line_no) + ": trailing content after " + std::to_string(m) + " edges");
    return Graph::from_edge_list(edges, static_cast<int>(n));
}

Graph read_graph_file(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Parse, "cannot open " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace kindep
