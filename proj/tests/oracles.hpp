#ifndef CENTRASCOPE_TESTS_ORACLES_HPP
#define CENTRASCOPE_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by the tests. They are
// deliberately naive (factorial or exponential scans) so that agreement with
// the library is meaningful: the two sides share no code beyond the Graph
// container itself.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <centrascope/centrascope.hpp>

namespace oracles {

using centrascope::Graph;
using centrascope::Rational;

// Canonical text by scanning every one of the n! relabelings.
inline std::string canonical_by_all_permutations(const Graph& g) {
    std::vector<int> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string candidate = centrascope::to_graph6(g.permuted(perm));
        if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// One canonical string per isomorphism class of connected n-node graphs,
// found by scanning all 2^(n(n-1)/2) labeled graphs. `use_perm_oracle`
// selects the factorial canonical form above (exact but slow; fine for
// n <= 5), otherwise the library's canonical form is used for the dedup.
inline std::set<std::string> connected_classes_by_labeled_scan(int n, bool use_perm_oracle) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

    std::set<std::string> classes;
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        Graph g = Graph::from_edge_list(n, edges);
        if (!centrascope::is_connected(g)) continue;
        classes.insert(use_perm_oracle ? canonical_by_all_permutations(g)
                                       : centrascope::canonical_graph6(g));
    }
    return classes;
}

// All-pairs distances by Floyd-Warshall (the library uses BFS).
inline std::vector<std::vector<int>> distances_by_floyd_warshall(const Graph& g) {
    const int n = g.node_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& v : row)
            if (v >= inf) v = centrascope::unreachable;
    return d;
}

// Number of closed walks of the given length from `start` back to itself,
// by explicit depth-first expansion of every walk.
inline std::uint64_t closed_walks_by_dfs(const Graph& g, int start, int length) {
    std::uint64_t count = 0;
    auto walk = [&](auto&& self, int u, int remaining) -> void {
        if (remaining == 0) {
            if (u == start) ++count;
            return;
        }
        for (int w = 0; w < g.node_count(); ++w)
            if (g.has_edge(u, w)) self(self, w, remaining - 1);
    };
    walk(walk, start, length);
    return count;
}

// Betweenness (ordered-pair convention) by enumerating every shortest path
// as an explicit vertex sequence.
inline std::vector<Rational> betweenness_by_path_enumeration(const Graph& g) {
    const int n = g.node_count();
    auto dist = distances_by_floyd_warshall(g);
    std::vector<Rational> values(n, Rational(0));

    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            const int len = dist[s][t];
            std::vector<std::uint64_t> through(n, 0);
            std::uint64_t total = 0;
            std::vector<int> path{s};
            std::vector<char> visited(n, 0);
            visited[s] = 1;
            auto extend = [&](auto&& self, int u) -> void {
                if (static_cast<int>(path.size()) == len + 1) {
                    if (u != t) return;
                    ++total;
                    for (std::size_t i = 1; i + 1 < path.size(); ++i) ++through[path[i]];
                    return;
                }
                for (int w = 0; w < n; ++w) {
                    if (!g.has_edge(u, w) || visited[w]) continue;
                    // Prune walks that cannot reach t within the cap.
                    if (dist[w][t] > len - static_cast<int>(path.size())) continue;
                    visited[w] = 1;
                    path.push_back(w);
                    self(self, w);
                    path.pop_back();
                    visited[w] = 0;
                }
            };
            extend(extend, s);
            for (int k = 0; k < n; ++k)
                if (through[k] > 0) values[k] += Rational(through[k], total);
        }
    }
    return values;
}

// Automorphism orbits by testing all n! permutations.
inline std::vector<std::vector<int>> orbits_by_all_permutations(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!(g.permuted(perm) == g)) continue;
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(perm[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<int>> blocks(n);
    for (int v = 0; v < n; ++v) blocks[find(v)].push_back(v);
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

// Walk-regularity by the definitional check with a redundantly long horizon,
// using a plain integer matrix power (independent of the library's
// vector-iteration code path).
inline bool walk_regular_by_long_horizon(const Graph& g, int max_len) {
    const int n = g.node_count();
    using Wide = unsigned __int128;
    std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n, 0));
    std::vector<std::vector<Wide>> power(n, std::vector<Wide>(n, 0));
    for (int i = 0; i < n; ++i) {
        power[i][i] = 1;
        for (int j = 0; j < n; ++j) a[i][j] = g.has_edge(i, j) ? 1 : 0;
    }
    for (int l = 1; l <= max_len; ++l) {
        std::vector<std::vector<Wide>> next(n, std::vector<Wide>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (power[i][k])
                    for (int j = 0; j < n; ++j) next[i][j] += power[i][k] * a[k][j];
        power = std::move(next);
        if (l < 2) continue;
        for (int v = 1; v < n; ++v)
            if (power[v][v] != power[0][0]) return false;
    }
    return true;
}

// Uniform random connected graph for fuzz comparisons (retries until the
// sampled graph is connected).
inline Graph random_connected_graph(std::mt19937& rng, int n, double edge_prob = 0.5) {
    std::bernoulli_distribution coin(edge_prob);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (coin(rng)) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        if (centrascope::is_connected(g)) return g;
    }
}

}  // namespace oracles

#endif  // CENTRASCOPE_TESTS_ORACLES_HPP
