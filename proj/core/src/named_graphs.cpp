#include "centrascope/named_graphs.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "centrascope/canonical.hpp"

namespace centrascope {

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    }
    return Graph::from_edge_list(a + b, edges);
}

Graph circulant_graph(int n, std::span<const int> offsets) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int s : offsets) {
            if (s <= 0 || s >= n) throw std::invalid_argument("circulant_graph: offset out of range");
            const int j = (i + s) % n;
            if (i < j) edges.emplace_back(i, j);
            else edges.emplace_back(j, i);
        }
    }
    // Duplicate edges (e.g. offset n/2) are tolerated by from_edge_list.
    return Graph::from_edge_list(n, edges);
}

Graph prism_graph() {
    return Graph::from_edge_list(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph octahedron_graph() {
    // K_{2,2,2}: three antipodal pairs {0,3},{1,4},{2,5}, all other pairs adjacent.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            if (j - i == 3) continue;
            edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(6, edges);
}

std::string recognize_named(const Graph& g) {
    static const std::map<std::string, std::string> names = [] {
        std::map<std::string, std::string> table;
        const auto add = [&table](const Graph& reference, std::string name) {
            // Earlier insertions win, so special names beat circulant aliases.
            table.emplace(canonical_graph6(reference), std::move(name));
        };
        add(prism_graph(), "prism");
        add(octahedron_graph(), "octahedron");
        const int c7_offsets[] = {1, 2};
        add(circulant_graph(7, c7_offsets), "C7(1,2)");
        const int c8_13[] = {1, 3};
        add(circulant_graph(8, c8_13), "C8(1,3)");
        const int c8_14[] = {1, 4};
        add(circulant_graph(8, c8_14), "C8(1,4)");
        const int c8_123[] = {1, 2, 3};
        add(circulant_graph(8, c8_123), "C8(1,2,3)");
        const int c8_124[] = {1, 2, 4};
        add(circulant_graph(8, c8_124), "C8(1,2,4)");
        for (int n = 1; n <= 8; ++n) add(complete_graph(n), "K" + std::to_string(n));
        for (int n = 3; n <= 8; ++n) add(cycle_graph(n), "C" + std::to_string(n));
        for (int a = 1; a <= 4; ++a) {
            for (int b = a; a + b <= 8; ++b) {
                add(complete_bipartite_graph(a, b),
                    "K" + std::to_string(a) + "," + std::to_string(b));
            }
        }
        for (int n = 2; n <= 8; ++n) add(path_graph(n), "P" + std::to_string(n));
        return table;
    }();
    const auto it = names.find(canonical_graph6(g));
    return it == names.end() ? std::string{} : it->second;
}

}  // namespace centrascope
