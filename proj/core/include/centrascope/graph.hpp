#ifndef CENTRASCOPE_GRAPH_HPP
#define CENTRASCOPE_GRAPH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace centrascope {

/// Simple undirected graph on at most 32 nodes.
///
/// Adjacency is stored as one bitmask row per node so that neighborhood
/// queries are single-word operations. Instances are immutable after
/// construction and cheap to copy; the symmetry and no-loop invariants are
/// enforced by the factory functions.
class Graph {
public:
    static constexpr int max_nodes = 32;

    Graph() = default;

    /// Builds a graph from an unordered edge list. Duplicate pairs collapse
    /// to a single edge. Throws std::invalid_argument for loops or an
    /// unsupported node count, std::out_of_range for bad endpoints.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Builds a graph directly from adjacency rows (validated).
    static Graph from_adjacency_rows(int n, std::span<const std::uint32_t> rows);

    int node_count() const { return n_; }
    int edge_count() const;

    /// Bitmask of neighbors of v; bit u set iff {u,v} is an edge.
    std::uint32_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
    int degree(int v) const;

    /// Relabels node v to perm[v]. perm must be a permutation of 0..n-1.
    Graph permuted(std::span<const int> perm) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::array<std::uint32_t, max_nodes> adj_{};
};

/// One diagonal of an integer adjacency-matrix power: diag[i] = (A^l)_ii,
/// the number of closed walks of length l based at node i.
struct WalkDiagonal {
    int length = 0;
    std::vector<std::uint64_t> diag;
};

/// Distance value used for nodes a BFS cannot reach.
inline constexpr int unreachable = -1;

/// Parses one line of graph6 text (standard short form, n <= 32).
/// Throws std::invalid_argument on malformed input.
Graph parse_graph6(std::string_view line);

/// Encodes a graph as a graph6 line; parse_graph6 inverts it bit-exactly.
std::string to_graph6(const Graph& g);

/// Hop counts from source; entries for unreachable nodes are `unreachable`.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

/// Exact closed-walk counts diag(A^l) for l = 0..max_len, computed with
/// checked 64-bit arithmetic. Throws std::overflow_error if any count
/// exceeds the 64-bit range and std::invalid_argument for max_len > 63.
std::vector<WalkDiagonal> walk_diagonals(const Graph& g, int max_len);

}  // namespace centrascope

#endif  // CENTRASCOPE_GRAPH_HPP
