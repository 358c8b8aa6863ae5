#include "centrascope/enumerate.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <stdexcept>

#include "centrascope/canonical.hpp"

namespace centrascope {

GraphStream enumerate_connected(int n) {
    if (n < 1 || n > 10) {
        throw std::invalid_argument("exhaustive enumeration supports 1..10 nodes, got " +
                                    std::to_string(n));
    }
    GraphStream stream;
    stream.provenance = "generated:n=" + std::to_string(n);

    std::vector<Graph> level = {Graph::from_edge_list(1, {})};
    // Grow one node at a time: every connected graph on k nodes arises from a
    // connected (k-1)-node graph by attaching a new node to a nonempty subset
    // (remove any non-cut node to see this). Canonical dedup collapses the
    // duplicates the augmentation produces.
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> seen;
        const std::uint32_t subsets = 1u << (k - 1);
        for (const Graph& base : level) {
            for (std::uint32_t attach = 1; attach < subsets; ++attach) {
                std::array<std::uint32_t, Graph::max_nodes> rows{};
                for (int i = 0; i < k - 1; ++i) {
                    rows[static_cast<std::size_t>(i)] = base.neighbors(i);
                }
                std::uint32_t bits = attach;
                while (bits) {
                    const int i = std::countr_zero(bits);
                    bits &= bits - 1;
                    rows[static_cast<std::size_t>(i)] |= 1u << (k - 1);
                }
                rows[static_cast<std::size_t>(k - 1)] = attach;
                const Graph extended = Graph::from_adjacency_rows(
                    k, std::span<const std::uint32_t>(rows.data(), static_cast<std::size_t>(k)));
                Canonical canon = canonical_form(extended);
                seen.try_emplace(std::move(canon.graph6), canon.graph);
            }
        }
        level.clear();
        level.reserve(seen.size());
        for (auto& [text, graph] : seen) level.push_back(graph);
    }

    stream.graphs = std::move(level);
    return stream;
}

GraphStream read_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    GraphStream stream;
    stream.provenance = path.string();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
        if (view.empty()) continue;
        try {
            stream.graphs.push_back(parse_graph6(view));
        } catch (const std::exception& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (in.bad()) throw std::runtime_error("I/O error while reading " + path.string());
    return stream;
}

std::size_t write_graph6_file(const GraphStream& stream, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    for (const Graph& g : stream.graphs) {
        out << canonical_graph6(g) << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("I/O error while writing " + path.string());
    return stream.graphs.size();
}

}  // namespace centrascope
