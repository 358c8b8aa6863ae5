#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <centrascope/centrascope.hpp>

using namespace centrascope;

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round_12sig(double x) { return std::strtod(fmt_double(x).c_str(), nullptr); }

struct Range {
    int lo;
    int hi;
};

Range parse_range(const std::string& text) {
    try {
        const auto sep = text.find("..");
        std::size_t used = 0;
        if (sep == std::string::npos) {
            const int n = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {n, n};
        }
        const std::string lo_text = text.substr(0, sep);
        const std::string hi_text = text.substr(sep + 2);
        const int lo = std::stoi(lo_text, &used);
        if (used != lo_text.size()) throw std::invalid_argument(text);
        const int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size() || lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid range '" + text + "': expected N or LO..HI");
    }
}

int resolve_workers(int from_cli) {
    if (from_cli > 0) return from_cli;
    if (const char* env = std::getenv("CENTRASCOPE_WORKERS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0 && parsed <= 1024) {
            return static_cast<int>(parsed);
        }
        std::cerr << "warning: ignoring invalid CENTRASCOPE_WORKERS='" << env << "'\n";
    }
    return 1;
}

/// Reports default to text on a terminal and csv when written to a file.
ReportFormat resolve_format(const std::string& requested, const std::string& output) {
    if (requested == "csv") return ReportFormat::csv;
    if (requested == "json") return ReportFormat::json;
    if (requested == "text") return ReportFormat::text;
    return output.empty() ? ReportFormat::text : ReportFormat::csv;
}

void emit(const std::string& data, const std::string& output) {
    if (output.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + output);
    out << data;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + output);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// --- analyze ---

struct Analysis {
    std::string id;
    std::string name;
    int n = 0;
    int edges = 0;
    std::vector<int> degree;
    std::vector<Rational> closeness;
    std::vector<Rational> betweenness;
    SpectralCentralities spectral;
    DiscriminanceRecord record;
};

Analysis analyze_graph(const Graph& g) {
    Analysis a;
    a.record = discriminance_record(g);
    a.id = a.record.graph_id;
    a.name = recognize_named(g);
    a.n = g.node_count();
    a.edges = g.edge_count();
    a.degree = degree_values(g);
    a.closeness = closeness_values(g);
    a.betweenness = betweenness_values(g);
    a.spectral = spectral_centralities(g);
    return a;
}

std::string render_ints(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i]);
    }
    return out += "]";
}

std::string render_exact(const std::vector<Rational>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += to_string(values[i]);
    }
    return out += "]";
}

std::string render_floats(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += fmt_double(values[i]);
    }
    return out += "]";
}

std::string render_orbits(const std::vector<std::vector<int>>& orbits) {
    std::string out;
    for (const std::vector<int>& block : orbits) {
        if (!out.empty()) out += ' ';
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(block[i]);
        }
        out += '}';
    }
    return out;
}

std::string analysis_text(const Analysis& a) {
    std::ostringstream out;
    out << "graph " << a.id;
    if (!a.name.empty()) out << " (" << a.name << ")";
    out << ": n=" << a.n << " edges=" << a.edges << '\n';
    out << "  degree:        " << render_ints(a.degree) << '\n';
    out << "  closeness:     " << render_exact(a.closeness) << '\n';
    out << "  betweenness:   " << render_exact(a.betweenness) << " (ordered pairs; halve for the unordered convention)\n";
    out << "  eigenvector:   " << render_floats(a.spectral.eigenvector) << '\n';
    out << "  subgraph:      " << render_floats(a.spectral.subgraph) << '\n';
    const StructureProfile& p = a.record.profile;
    out << "  structure:     regular=" << yes_no(p.regular)
        << " walk-regular=" << yes_no(p.walk_regular)
        << " vertex-transitive=" << yes_no(p.vertex_transitive)
        << " distance-regular=" << yes_no(p.distance_regular)
        << " bipartite=" << yes_no(p.bipartite) << '\n';
    out << "  orbits:        " << render_orbits(p.orbits) << '\n';
    out << "  zero-variance:";
    for (Measure m : all_measures) out << ' ' << to_string(m) << '=' << yes_no(a.record.zero(m));
    out << " (subgraph exact: " << yes_no(a.record.subgraph_zero_exact) << ")\n";
    out << "  ee spread:     " << fmt_double(a.record.ee_spread) << '\n';
    return std::move(out).str();
}

nlohmann::ordered_json analysis_json(const Analysis& a) {
    nlohmann::ordered_json doc;
    doc["graph6"] = a.id;
    doc["name"] = a.name;
    doc["n"] = a.n;
    doc["edges"] = a.edges;
    nlohmann::ordered_json centrality;
    centrality["degree"] = a.degree;
    centrality["closeness"] = nlohmann::ordered_json::array();
    for (const Rational& r : a.closeness) centrality["closeness"].push_back(to_string(r));
    centrality["betweenness"] = nlohmann::ordered_json::array();
    for (const Rational& r : a.betweenness) centrality["betweenness"].push_back(to_string(r));
    centrality["eigenvector"] = nlohmann::ordered_json::array();
    for (double x : a.spectral.eigenvector) centrality["eigenvector"].push_back(round_12sig(x));
    centrality["subgraph"] = nlohmann::ordered_json::array();
    for (double x : a.spectral.subgraph) centrality["subgraph"].push_back(round_12sig(x));
    doc["centrality"] = centrality;
    const StructureProfile& p = a.record.profile;
    nlohmann::ordered_json structure;
    structure["regular"] = p.regular;
    structure["walk_regular"] = p.walk_regular;
    structure["vertex_transitive"] = p.vertex_transitive;
    structure["distance_regular"] = p.distance_regular;
    structure["bipartite"] = p.bipartite;
    structure["orbits"] = p.orbits;
    doc["structure"] = structure;
    nlohmann::ordered_json zero;
    for (Measure m : all_measures) zero[to_string(m)] = a.record.zero(m);
    zero["subgraph_exact"] = a.record.subgraph_zero_exact;
    doc["zero_variance"] = zero;
    doc["ee_spread"] = round_12sig(a.record.ee_spread);
    return doc;
}

// --- subcommand drivers ---

int run_enum(int n, const std::string& output) {
    const GraphStream stream = enumerate_connected(n);
    std::string lines;
    for (const Graph& g : stream.graphs) {
        lines += to_graph6(g);
        lines += '\n';
    }
    emit(lines, output);
    std::cerr << "n=" << n << ": " << stream.size() << " connected graphs\n";
    return 0;
}

int run_analyze(const std::string& graph6_text, const std::string& input,
                const std::string& format, const std::string& output) {
    if (graph6_text.empty() == input.empty()) {
        throw std::invalid_argument("analyze: give exactly one of --graph6 or --input");
    }
    std::vector<Graph> graphs;
    if (!graph6_text.empty()) {
        graphs.push_back(parse_graph6(graph6_text));
    } else {
        graphs = read_graph6_file(input).graphs;
    }
    if (format == "json") {
        // A single --graph6 argument yields one object; a file corpus yields
        // an array, one element per line.
        if (!graph6_text.empty()) {
            emit(analysis_json(analyze_graph(graphs.front())).dump(2) + "\n", output);
            return 0;
        }
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Graph& g : graphs) arr.push_back(analysis_json(analyze_graph(g)));
        emit(arr.dump(2) + "\n", output);
    } else {
        std::string text;
        for (const Graph& g : graphs) text += analysis_text(analyze_graph(g));
        emit(text, output);
    }
    return 0;
}

int run_table1(const std::string& range_text, int workers_cli, const std::string& format,
               const std::string& output, bool strict) {
    const Range range = parse_range(range_text);
    const int workers = resolve_workers(workers_cli);
    const Table1Report report = table1(range.lo, range.hi, workers,
                                       [](const std::string& m) { std::cerr << m << '\n'; });
    emit(render_report(report, resolve_format(format, output)), output);
    if (strict && !report.all_match()) {
        std::cerr << "strict mode: computed counts deviate from the reference table\n";
        return 1;
    }
    return 0;
}

std::string render_many(const std::vector<ConjectureReport>& reports, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const ConjectureReport& r : reports) {
            arr.push_back(nlohmann::ordered_json::parse(render_report(r, format)));
        }
        return arr.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        std::string one = render_report(reports[i], format);
        if (format == ReportFormat::csv && i > 0) one.erase(0, one.find('\n') + 1);
        out += one;
    }
    return out;
}

int run_conjectures(const std::string& which, const std::string& range_text, int workers_cli,
                    const std::string& format, const std::string& output) {
    const Range range = parse_range(range_text);
    const int workers = resolve_workers(workers_cli);
    std::vector<int> selected;
    if (which == "all") selected = {1, 2, 3};
    else selected = {std::stoi(which)};

    std::vector<ConjectureReport> reports;
    for (int n = range.lo; n <= range.hi; ++n) {
        const GraphStream stream = enumerate_connected(n);
        std::cerr << "n=" << n << ": " << stream.size()
                  << " connected graphs enumerated, analyzing\n";
        const std::vector<DiscriminanceRecord> records = discriminance_records(stream, workers);
        const std::string corpus = "n=" + std::to_string(n);
        for (int id : selected) {
            if (id == 1) reports.push_back(check_conjecture1(records, corpus));
            if (id == 2) reports.push_back(check_conjecture2(records, corpus));
            if (id == 3) reports.push_back(check_conjecture3(records, corpus));
        }
    }
    emit(render_many(reports, resolve_format(format, output)), output);
    bool violated = false;
    for (const ConjectureReport& r : reports) violated = violated || !r.violations.empty();
    return violated ? 1 : 0;
}

int run_classify(const std::string& input, int conjecture, int workers_cli,
                 const std::string& format, const std::string& output) {
    const int workers = resolve_workers(workers_cli);
    const GraphStream stream = read_graph6_file(input);
    std::cerr << input << ": " << stream.size() << " graphs\n";
    const ReportFormat fmt = resolve_format(format, output);

    if (conjecture != 0) {
        const ConjectureReport report = check_conjecture(conjecture, stream, workers);
        emit(render_report(report, fmt), output);
        return report.violations.empty() ? 0 : 1;
    }

    const std::vector<DiscriminanceRecord> records = discriminance_records(stream, workers);
    std::ostringstream out;
    switch (fmt) {
        case ReportFormat::csv: {
            out << "graph6,name,n,regular,walk_regular,vertex_transitive,distance_regular,"
                   "bipartite,orbit_count,zero_subgraph,zero_degree,zero_eigenvector,"
                   "zero_closeness,zero_betweenness\n";
            for (std::size_t i = 0; i < records.size(); ++i) {
                const DiscriminanceRecord& r = records[i];
                const StructureProfile& p = r.profile;
                out << r.graph_id << ',' << recognize_named(stream.graphs[i]) << ',' << r.n << ','
                    << p.regular << ',' << p.walk_regular << ',' << p.vertex_transitive << ','
                    << p.distance_regular << ',' << p.bipartite << ',' << p.orbits.size();
                for (Measure m : all_measures) out << ',' << r.zero(m);
                out << '\n';
            }
            break;
        }
        case ReportFormat::json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < records.size(); ++i) {
                const DiscriminanceRecord& r = records[i];
                nlohmann::ordered_json row;
                row["graph6"] = r.graph_id;
                row["name"] = recognize_named(stream.graphs[i]);
                row["n"] = r.n;
                row["regular"] = r.profile.regular;
                row["walk_regular"] = r.profile.walk_regular;
                row["vertex_transitive"] = r.profile.vertex_transitive;
                row["distance_regular"] = r.profile.distance_regular;
                row["bipartite"] = r.profile.bipartite;
                row["orbits"] = r.profile.orbits;
                nlohmann::ordered_json zero;
                for (Measure m : all_measures) zero[to_string(m)] = r.zero(m);
                row["zero_variance"] = zero;
                arr.push_back(row);
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case ReportFormat::text: {
            for (std::size_t i = 0; i < records.size(); ++i) {
                const DiscriminanceRecord& r = records[i];
                const StructureProfile& p = r.profile;
                out << r.graph_id;
                const std::string name = recognize_named(stream.graphs[i]);
                if (!name.empty()) out << " (" << name << ")";
                out << ": n=" << r.n << " regular=" << yes_no(p.regular)
                    << " walk-regular=" << yes_no(p.walk_regular)
                    << " vertex-transitive=" << yes_no(p.vertex_transitive)
                    << " distance-regular=" << yes_no(p.distance_regular)
                    << " bipartite=" << yes_no(p.bipartite) << " orbits=" << p.orbits.size()
                    << " zero:";
                for (Measure m : all_measures) out << ' ' << to_string(m) << '=' << yes_no(r.zero(m));
                out << '\n';
            }
            break;
        }
    }
    emit(std::move(out).str(), output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "centrascope: exhaustive study of the discriminant power of centrality measures\n"
        "on small connected graphs (zero-variance counts, structural classification,\n"
        "and the three walk-regularity conjectures)."};
    app.require_subcommand(1);

    CLI::App* cmd_enum = app.add_subcommand(
        "enum", "Enumerate all connected graphs on n nodes as canonical graph6 lines");
    int enum_n = 0;
    std::string enum_out;
    cmd_enum->add_option("-n,--nodes", enum_n, "node count (1..10)")
        ->required()
        ->check(CLI::Range(1, 10));
    cmd_enum->add_option("-o,--output", enum_out, "output file (default: stdout)");

    CLI::App* cmd_analyze = app.add_subcommand(
        "analyze", "Centralities, structure profile and zero-variance flags per graph");
    std::string an_g6, an_in, an_fmt = "text", an_out;
    cmd_analyze->add_option("--graph6", an_g6, "a single graph6 string");
    cmd_analyze->add_option("-i,--input", an_in, "graph6 file, one graph per line");
    cmd_analyze->add_option("--format", an_fmt, "output format (default: text)")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_analyze->add_option("-o,--output", an_out, "output file (default: stdout)");

    CLI::App* cmd_table1 = app.add_subcommand(
        "table1", "Reproduce the zero-variance count table against the published reference");
    std::string t1_range = "5..8", t1_fmt, t1_out;
    int t1_workers = 0;
    bool t1_strict = false;
    cmd_table1->add_option("--range", t1_range, "node-count range LO..HI (default: 5..8)");
    cmd_table1->add_option("--format", t1_fmt, "csv, json or text (default: text; csv with -o)")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd_table1->add_option("-o,--output", t1_out, "output file (default: stdout)");
    cmd_table1->add_option("--workers", t1_workers,
                           "parallel workers (default: $CENTRASCOPE_WORKERS or 1)");
    cmd_table1->add_flag("--strict", t1_strict, "exit 1 if any computed count mismatches");

    CLI::App* cmd_conj = app.add_subcommand(
        "conjectures", "Check the three zero-variance conjectures on enumerated corpora");
    std::string cj_which = "all", cj_range = "5..8", cj_fmt, cj_out;
    int cj_workers = 0;
    cmd_conj->add_option("--which", cj_which, "conjecture to check: 1, 2, 3 or all")
        ->check(CLI::IsMember({"1", "2", "3", "all"}));
    cmd_conj->add_option("--range", cj_range, "node-count range LO..HI (default: 5..8)");
    cmd_conj->add_option("--format", cj_fmt, "csv, json or text (default: text; csv with -o)")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd_conj->add_option("-o,--output", cj_out, "output file (default: stdout)");
    cmd_conj->add_option("--workers", cj_workers,
                         "parallel workers (default: $CENTRASCOPE_WORKERS or 1)");

    CLI::App* cmd_classify = app.add_subcommand(
        "classify", "Classify graphs from a graph6 file (or run a conjecture on them)");
    std::string cl_in, cl_fmt, cl_out;
    int cl_conj = 0, cl_workers = 0;
    cmd_classify->add_option("-i,--input", cl_in, "graph6 file, one graph per line")->required();
    cmd_classify->add_option("--conjecture", cl_conj, "check this conjecture on the file's graphs")
        ->check(CLI::Range(1, 3));
    cmd_classify->add_option("--format", cl_fmt, "csv, json or text (default: text; csv with -o)")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd_classify->add_option("-o,--output", cl_out, "output file (default: stdout)");
    cmd_classify->add_option("--workers", cl_workers,
                             "parallel workers (default: $CENTRASCOPE_WORKERS or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit 2; --help is success
    }

    try {
        if (cmd_enum->parsed()) return run_enum(enum_n, enum_out);
        if (cmd_analyze->parsed()) return run_analyze(an_g6, an_in, an_fmt, an_out);
        if (cmd_table1->parsed())
            return run_table1(t1_range, t1_workers, t1_fmt, t1_out, t1_strict);
        if (cmd_conj->parsed())
            return run_conjectures(cj_which, cj_range, cj_workers, cj_fmt, cj_out);
        if (cmd_classify->parsed())
            return run_classify(cl_in, cl_conj, cl_workers, cl_fmt, cl_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable with require_subcommand(1)
}
