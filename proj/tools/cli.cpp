#include "cli.hpp"

#include "kindep/error.hpp"
#include "kindep/generators.hpp"
#include "kindep/graph_io.hpp"
#include "kindep/oracle.hpp"
#include "kindep/polybasis.hpp"
#include "kindep/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace kindep::cli {

namespace {

int parse_int(std::string_view text)
{
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
    return value;
}

struct Loaded {
    std::string label;
    Graph graph;
};

Loaded load_graph(const RunConfig& cfg)
{
    const int sources = int(cfg.named.has_value()) + int(cfg.file.has_value()) + int(cfg.generator.has_value());
    if (sources != 1)
        throw Error(ErrorCode::InvalidParameters, "give exactly one of --named, --file, --generator");
    if (cfg.named)
        return {*cfg.named, named(*cfg.named)};
    if (cfg.file)
        return {*cfg.file, read_graph_file(*cfg.file)};
    return {*cfg.generator, from_generator_spec(*cfg.generator)};
}

KRange checked_range(const RunConfig& cfg, const Graph& g, KRange fallback)
{
    const KRange k = cfg.k.value_or(fallback);
    if (k.lo < 1 || k.hi > g.order())
        throw Error(ErrorCode::InvalidParameters,
            "k range must lie within [1, " + std::to_string(g.order()) + "]");
    return k;
}

Spectrum spectrum_of(const RunConfig& cfg, const Graph& g)
{
    if (cfg.tol && !(*cfg.tol > 0.0))
        throw Error(ErrorCode::InvalidParameters, "--tol must be positive");
    return eigendecompose(g, cfg.tol);
}

std::string text_real(double v)
{
    if (!std::isfinite(v))
        return "-";
    if (std::abs(v) < 1e15 && v == std::round(v))
        return std::to_string(static_cast<long long>(v));
    return format_real_sig(v, 6);
}

void emit_rows(const std::vector<ReportRow>& rows, Format format, std::ostream& out)
{
    if (format == Format::Csv) {
        out << csv_header << '\n';
        for (const auto& r : rows)
            out << to_csv(r) << '\n';
        return;
    }
    if (format == Format::JsonLines) {
        for (const auto& r : rows)
            out << to_json_line(r) << '\n';
        return;
    }
    out << std::left << std::setw(4) << "k" << std::setw(20) << "bound" << std::setw(14) << "raw"
        << std::setw(10) << "floored" << std::setw(12) << "applicable" << "oracle\n";
    for (const auto& r : rows) {
        out << std::setw(4) << r.k << std::setw(20) << r.bound_name << std::setw(14) << text_real(r.raw)
            << std::setw(10) << (r.applicable ? std::to_string(r.floored) : "-") << std::setw(12)
            << (r.applicable ? "yes" : "no") << (r.oracle ? std::to_string(*r.oracle) : "-") << '\n';
    }
}

ReportRow to_row(const std::string& label, int n, int k, const BoundReport& b, std::optional<int> oracle)
{
    ReportRow r;
    r.graph = label;
    r.n = n;
    r.k = k;
    r.bound_name = b.name;
    r.raw = b.applicable ? b.raw : std::numeric_limits<double>::quiet_NaN();
    r.floored = b.applicable ? b.floored : 0;
    r.applicable = b.applicable;
    r.oracle = oracle;
    return r;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out)
{
    const auto [label, g] = load_graph(cfg);
    const Spectrum s = spectrum_of(cfg, g);
    if (cfg.format == Format::Csv) {
        out << "theta,multiplicity\n";
        for (const auto& ev : s.distinct)
            out << format_real(ev.value) << ',' << ev.multiplicity << '\n';
    } else if (cfg.format == Format::JsonLines) {
        for (const auto& ev : s.distinct)
            out << nlohmann::json{{"graph", label}, {"theta", ev.value}, {"multiplicity", ev.multiplicity}}.dump() << '\n';
    } else {
        out << "graph: " << label << "\nn: " << g.order() << "\nm: " << g.size() << "\nd: " << s.d()
            << "\nregular: " << (g.regular_degree() ? std::to_string(*g.regular_degree()) : "no")
            << "\nspectrum: " << format_spectrum(s) << '\n';
    }
    return exit_ok;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out)
{
    const auto [label, g] = load_graph(cfg);
    const KRange k = checked_range(cfg, g, {1, 1});
    const Spectrum s = spectrum_of(cfg, g);
    const BoundContext ctx(g, s, k.hi);
    std::vector<ReportRow> rows;
    for (int kk = k.lo; kk <= k.hi; ++kk) {
        std::optional<int> oracle;
        if (g.order() <= oracle_vertex_threshold) {
            const auto exact = exact_alpha_k(g, kk, cfg.oracle_budget);
            if (exact.exact)
                oracle = exact.alpha_k;
        }
        for (const auto& b : all_bounds(ctx, kk))
            rows.push_back(to_row(label, g.order(), kk, b, oracle));
        auto best = best_bound(ctx, kk);
        best.name = "best:" + best.name;
        rows.push_back(to_row(label, g.order(), kk, best, oracle));
    }
    if (cfg.format == Format::Text)
        out << "graph: " << label << " (n=" << g.order() << ", m=" << g.size() << ", d=" << s.d() << ")\n";
    emit_rows(rows, cfg.format, out);
    return exit_ok;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out)
{
    const auto [label, g] = load_graph(cfg);
    const KRange k = checked_range(cfg, g, {1, 1});
    const int diameter = exact_diameter(g);
    bool all_exact = true;
    std::vector<std::pair<int, ExactResult>> results;
    for (int kk = k.lo; kk <= k.hi; ++kk) {
        results.emplace_back(kk, exact_alpha_k(g, kk, cfg.oracle_budget));
        all_exact = all_exact && results.back().second.exact;
    }
    if (cfg.format == Format::Csv) {
        out << "graph,n,k,alpha_k,exact,nodes,diameter,witness\n";
        for (const auto& [kk, r] : results) {
            std::string witness;
            for (std::size_t i = 0; i < r.witness_set.size(); ++i)
                witness += (i ? " " : "") + std::to_string(r.witness_set[i]);
            out << '"' << label << "\"," << g.order() << ',' << kk << ',' << r.alpha_k << ','
                << (r.exact ? "true" : "false") << ',' << r.nodes_explored << ',' << diameter << ',' << witness << '\n';
        }
    } else if (cfg.format == Format::JsonLines) {
        for (const auto& [kk, r] : results)
            out << nlohmann::json{{"graph", label}, {"n", g.order()}, {"k", kk}, {"alpha_k", r.alpha_k},
                                  {"exact", r.exact}, {"nodes", r.nodes_explored}, {"diameter", diameter},
                                  {"witness", r.witness_set}}.dump()
                << '\n';
    } else {
        out << "graph: " << label << " (n=" << g.order() << ")\ndiameter: " << diameter << '\n';
        for (const auto& [kk, r] : results) {
            out << "k=" << kk << "  alpha_k " << (r.exact ? "= " : ">= ") << r.alpha_k << "  nodes " << r.nodes_explored
                << "  witness {";
            for (std::size_t i = 0; i < r.witness_set.size(); ++i)
                out << (i ? ", " : "") << r.witness_set[i];
            out << "}\n";
        }
    }
    return all_exact ? exit_ok : exit_budget;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out)
{
    std::vector<ReportRow> rows;
    for (const auto& name : table1_graphs()) {
        const Graph g = named(name);
        const Spectrum s = spectrum_of(cfg, g);
        const BoundContext ctx(g, s, 2);
        const auto exact = exact_alpha_k(g, 2, cfg.oracle_budget);
        if (!exact.exact)
            throw Error(ErrorCode::BudgetExhausted, "oracle budget exhausted on " + name);
        rows.push_back(to_row(name, g.order(), 2, degree2(ctx), exact.alpha_k));
    }
    if (cfg.format != Format::Text) {
        emit_rows(rows, cfg.format, out);
        return exit_ok;
    }
    out << std::left << std::setw(16) << "graph" << std::setw(6) << "n" << std::setw(14) << "degree2 raw"
        << std::setw(10) << "floored" << "alpha_2\n";
    for (const auto& r : rows)
        out << std::setw(16) << r.graph << std::setw(6) << r.n << std::setw(14) << text_real(r.raw) << std::setw(10)
            << (r.applicable ? std::to_string(r.floored) : "-") << *r.oracle << '\n';
    return exit_ok;
}

int cmd_table2(const RunConfig& cfg, std::ostream& out)
{
    const Loaded loaded = cfg.named || cfg.file || cfg.generator ? load_graph(cfg) : Loaded{"johnson:14,7", johnson(14, 7)};
    const Graph& g = loaded.graph;
    const KRange k = checked_range(cfg, g, {3, 7});
    const Spectrum s = spectrum_of(cfg, g);
    const BoundContext ctx(g, s, k.hi);
    const auto columns = table2_columns(ctx, k);

    struct Line {
        std::string name;
        std::vector<double> values; // NaN prints as "-"
    };
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto floored = [&](const BoundReport& b) { return b.applicable ? static_cast<double>(b.floored) : nan; };
    std::vector<Line> lines = {{"P_k(theta0)", {}}, {"fiol_alternating", {}}, {"W_k", {}}, {"theta", {}},
        {"lambda(p)", {}}, {"q_k(delta)", {}}, {"lambda(q_k)", {}}, {"act_hoffman", {}}, {"general_k", {}},
        {"walk_regular", {}}};
    for (const auto& c : columns) {
        lines[0].values.push_back(c.alternating_top.value_or(nan));
        lines[1].values.push_back(c.fiol_raw ? static_cast<double>(floor_bound(*c.fiol_raw, g.order())) : nan);
        lines[2].values.push_back(static_cast<double>(c.W_k));
        lines[3].values.push_back(c.theta);
        lines[4].values.push_back(c.lambda_p);
        lines[5].values.push_back(c.q_top);
        lines[6].values.push_back(c.lambda_q);
        lines[7].values.push_back(floored(c.act_hoffman));
        lines[8].values.push_back(floored(c.general_k));
        lines[9].values.push_back(floored(c.walk_regular));
    }

    if (cfg.format == Format::Csv) {
        out << "graph,quantity,k,value\n";
        for (const auto& line : lines)
            for (std::size_t i = 0; i < columns.size(); ++i)
                out << '"' << loaded.label << "\"," << line.name << ',' << columns[i].k << ','
                    << (std::isfinite(line.values[i]) ? format_real(line.values[i]) : "") << '\n';
        return exit_ok;
    }
    if (cfg.format == Format::JsonLines) {
        for (const auto& line : lines)
            for (std::size_t i = 0; i < columns.size(); ++i) {
                nlohmann::json j{{"graph", loaded.label}, {"quantity", line.name}, {"k", columns[i].k}};
                j["value"] = std::isfinite(line.values[i]) ? nlohmann::json(line.values[i]) : nlohmann::json(nullptr);
                out << j.dump() << '\n';
            }
        return exit_ok;
    }
    out << "graph: " << loaded.label << " (n=" << g.order() << ", d=" << s.d() << ")\n";
    out << std::left << std::setw(18) << "k";
    for (const auto& c : columns)
        out << std::setw(13) << c.k;
    out << '\n';
    for (const auto& line : lines) {
        out << std::setw(18) << line.name;
        for (double v : line.values)
            out << std::setw(13) << text_real(v);
        out << '\n';
    }
    return exit_ok;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SelfLoop:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::Disconnected:
    case ErrorCode::InvalidParameters:
    case ErrorCode::UnknownName:
    case ErrorCode::Parse:
        return exit_config;
    case ErrorCode::BudgetExhausted:
        return exit_budget;
    default:
        return exit_compute;
    }
}

} // namespace

KRange parse_k_range(std::string_view text)
{
    const auto dots = text.find("..");
    KRange k;
    if (dots == std::string_view::npos) {
        k.lo = k.hi = parse_int(text);
    } else {
        k.lo = parse_int(text.substr(0, dots));
        k.hi = parse_int(text.substr(dots + 2));
    }
    if (k.lo > k.hi)
        throw Error(ErrorCode::Parse, "empty k range '" + std::string(text) + "'");
    return k;
}

std::vector<Table2Column> table2_columns(const BoundContext& ctx, KRange k)
{
    const auto& s = ctx.spectrum();
    if (!ctx.degree())
        throw Error(ErrorCode::NotRegular, "the comparison table needs a regular graph");
    if (s.d() < 1)
        throw Error(ErrorCode::InvalidSpectrum, "the comparison table needs at least two distinct eigenvalues");
    const auto family = predistance_family(s);
    std::vector<Table2Column> out;
    for (int kk = k.lo; kk <= k.hi; ++kk) {
        Table2Column c;
        c.k = kk;
        const auto fiol = fiol_alternating(ctx, kk);
        if (fiol.applicable) {
            c.alternating_top = fiol.witness.param("P_k(theta0)");
            c.fiol_raw = fiol.raw;
        }
        c.W_k = ctx.diag().max_sum(1, kk);
        c.theta = std::max(std::abs(s.theta(1)), std::abs(s.theta(s.d())));
        c.lambda_p = poly_stats(ctx.diag(), s, sum_power_poly(kk)).lambda;
        if (kk <= s.d()) {
            const auto& q = family.sum_values[static_cast<std::size_t>(kk)];
            c.q_top = q[0];
            c.lambda_q = *std::min_element(q.begin() + 1, q.end());
        } else {
            c.q_top = c.lambda_q = std::numeric_limits<double>::quiet_NaN();
        }
        c.act_hoffman = act_hoffman(ctx, kk);
        c.general_k = general_k(ctx, kk);
        c.walk_regular = walk_regular(ctx, kk);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::string> table1_graphs()
{
    return {"heawood", "desargues", "mobius-kantor", "nauru", "pappus", "dodecahedron", "hexahedron", "icosahedron"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectral bounds on the k-independence number of a graph"};
    app.name("kindep");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string k_text;
    std::string format_text = "text";

    const std::string generator_help =
        "Generator spec family:args, one of johnson:v,s  gp:n,j  bdm:k  cycle:n  path:n  complete:n  kbip:a,b  "
        "star:leaves  hypercube:dim";
    auto add_common = [&](CLI::App* sub, bool graph_source) {
        if (graph_source) {
            auto* a = sub->add_option("--named", cfg.named, "Catalog graph, e.g. petersen, heawood");
            auto* b = sub->add_option("--file", cfg.file, "Edge-list file: header 'n m' then m lines 'u v'");
            auto* c = sub->add_option("--generator", cfg.generator, generator_help);
            a->excludes(b)->excludes(c);
            b->excludes(c);
        }
        sub->add_option("--k", k_text, "k or an inclusive range a..b");
        sub->add_option("--tol", cfg.tol, "Eigenvalue grouping tolerance (default 1e-7 max(1, |theta_0|))");
        sub->add_option("--format", format_text, "text, csv or json-lines")
            ->check(CLI::IsMember({"text", "csv", "json-lines"}));
        sub->add_option("--oracle-budget", cfg.oracle_budget, "Branch-and-bound node limit")
            ->check(CLI::PositiveNumber);
    };

    auto* spectrum = app.add_subcommand("spectrum", "Distinct eigenvalues with multiplicities");
    auto* bounds = app.add_subcommand("bounds", "Every bound for each k, with exact values on small graphs");
    auto* oracle = app.add_subcommand("oracle", "Exact alpha_k and diameter");
    auto* table1 = app.add_subcommand("table1", "Degree-2 bound against exact alpha_2 on the named cubic graphs");
    auto* table2 = app.add_subcommand("table2", "Bound comparison for J(14,7) (or another regular graph), k = 3..7");
    add_common(spectrum, true);
    add_common(bounds, true);
    add_common(oracle, true);
    add_common(table1, false);
    add_common(table2, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    }

    std::ostringstream buffer;
    try {
        if (!k_text.empty())
            cfg.k = parse_k_range(k_text);
        cfg.format = format_text == "csv" ? Format::Csv : format_text == "json-lines" ? Format::JsonLines : Format::Text;
        int code = exit_ok;
        if (spectrum->parsed())
            code = cmd_spectrum(cfg, buffer);
        else if (bounds->parsed())
            code = cmd_bounds(cfg, buffer);
        else if (oracle->parsed())
            code = cmd_oracle(cfg, buffer);
        else if (table1->parsed())
            code = cmd_table1(cfg, buffer);
        else
            code = cmd_table2(cfg, buffer);
        out << buffer.str();
        if (code == exit_budget)
            err << "warning: oracle budget exhausted; reported values are lower bounds\n";
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_compute;
    }
}

} // namespace kindep::cli
