#include "centrascope/graph.hpp"

#include <bit>
#include <queue>
#include <stdexcept>

namespace centrascope {

namespace {

void check_node_count(int n) {
    if (n < 1 || n > Graph::max_nodes) {
        throw std::invalid_argument("node count must be in 1..32, got " + std::to_string(n));
    }
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    check_node_count(n);
    Graph g;
    g.n_ = n;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::out_of_range("edge endpoint out of range: {" + std::to_string(u) +
                                    "," + std::to_string(v) + "} with n=" + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("loop edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} not allowed");
        }
        g.adj_[static_cast<std::size_t>(u)] |= 1u << v;
        g.adj_[static_cast<std::size_t>(v)] |= 1u << u;
    }
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency_rows(int n, std::span<const std::uint32_t> rows) {
    check_node_count(n);
    if (static_cast<int>(rows.size()) != n) {
        throw std::invalid_argument("adjacency row count does not match node count");
    }
    const std::uint32_t valid = n == 32 ? ~0u : (1u << n) - 1u;
    Graph g;
    g.n_ = n;
    for (int i = 0; i < n; ++i) {
        const std::uint32_t row = rows[static_cast<std::size_t>(i)];
        if (row & ~valid) throw std::invalid_argument("adjacency row has bits beyond node count");
        if ((row >> i) & 1u) throw std::invalid_argument("adjacency row has a loop bit");
        g.adj_[static_cast<std::size_t>(i)] = row;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j) != g.has_edge(j, i)) {
                throw std::invalid_argument("adjacency rows are not symmetric");
            }
        }
    }
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (int i = 0; i < n_; ++i) total += std::popcount(adj_[static_cast<std::size_t>(i)]);
    return total / 2;
}

int Graph::degree(int v) const {
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw std::invalid_argument("permuted: permutation size does not match node count");
    }
    std::uint32_t seen = 0;
    for (const int target : perm) {
        if (target < 0 || target >= n_ || (seen >> target & 1u)) {
            throw std::invalid_argument("permuted: not a permutation of 0..n-1");
        }
        seen |= 1u << target;
    }
    Graph out;
    out.n_ = n_;
    for (int i = 0; i < n_; ++i) {
        std::uint32_t row = adj_[static_cast<std::size_t>(i)];
        std::uint32_t mapped = 0;
        while (row) {
            const int j = std::countr_zero(row);
            row &= row - 1;
            mapped |= 1u << perm[static_cast<std::size_t>(j)];
        }
        out.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = mapped;
    }
    return out;
}

Graph parse_graph6(std::string_view line) {
    // Strip an optional format header and trailing CR.
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("empty graph6 line");

    for (char c : line) {
        if (c < 63 || c > 126) {
            throw std::invalid_argument("graph6 byte out of printable range: code " +
                                        std::to_string(static_cast<int>(static_cast<unsigned char>(c))));
        }
    }

    std::size_t pos = 0;
    int n;
    if (line[0] == 126) {
        // Long form encodes n > 62; always beyond the 32-node cap here.
        throw std::invalid_argument("graph6 long-form node count exceeds 32-node limit");
    }
    n = line[pos++] - 63;
    check_node_count(n);

    const int bits_needed = n * (n - 1) / 2;
    const int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(line.size() - pos) < bytes_needed) {
        throw std::invalid_argument("truncated graph6 bit stream");
    }
    if (static_cast<int>(line.size() - pos) > bytes_needed) {
        throw std::invalid_argument("trailing bytes after graph6 bit stream");
    }

    std::array<std::uint32_t, Graph::max_nodes> rows{};
    int bit = 0;
    // Upper-triangle bits in column order: (0,1),(0,2),(1,2),(0,3),...
    for (int col = 1; col < n && bit < bits_needed; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const int value = (line[pos + static_cast<std::size_t>(bit / 6)] - 63) >> (5 - bit % 6) & 1;
            if (value) {
                rows[static_cast<std::size_t>(row)] |= 1u << col;
                rows[static_cast<std::size_t>(col)] |= 1u << row;
            }
        }
    }
    // Padding bits must be zero.
    for (int b = bits_needed; b < bytes_needed * 6; ++b) {
        if ((line[pos + static_cast<std::size_t>(b / 6)] - 63) >> (5 - b % 6) & 1) {
            throw std::invalid_argument("nonzero padding bits in graph6 line");
        }
    }
    return Graph::from_adjacency_rows(n, std::span<const std::uint32_t>(rows.data(), static_cast<std::size_t>(n)));
}

std::string to_graph6(const Graph& g) {
    const int n = g.node_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = group << 1 | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.node_count();
    if (source < 0 || source >= n) throw std::out_of_range("BFS source out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), unreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        std::uint32_t nb = g.neighbors(u);
        while (nb) {
            const int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (dist[static_cast<std::size_t>(v)] == unreachable) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    const auto dist = bfs_distances(g, 0);
    for (int d : dist) {
        if (d == unreachable) return false;
    }
    return true;
}

std::vector<WalkDiagonal> walk_diagonals(const Graph& g, int max_len) {
    if (max_len < 0 || max_len > 63) {
        throw std::invalid_argument("walk length must be in 0..63");
    }
    const int n = g.node_count();
    std::vector<WalkDiagonal> out(static_cast<std::size_t>(max_len) + 1);
    for (int l = 0; l <= max_len; ++l) {
        out[static_cast<std::size_t>(l)].length = l;
        out[static_cast<std::size_t>(l)].diag.assign(static_cast<std::size_t>(n), 0);
    }
    std::vector<std::uint64_t> count(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    for (int start = 0; start < n; ++start) {
        // count[v] = number of length-l walks from start to v.
        std::fill(count.begin(), count.end(), 0);
        count[static_cast<std::size_t>(start)] = 1;
        out[0].diag[static_cast<std::size_t>(start)] = 1;
        for (int l = 1; l <= max_len; ++l) {
            for (int v = 0; v < n; ++v) {
                std::uint64_t sum = 0;
                std::uint32_t nb = g.neighbors(v);
                while (nb) {
                    const int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (__builtin_add_overflow(sum, count[static_cast<std::size_t>(u)], &sum)) {
                        throw std::overflow_error("walk count exceeds 64-bit range at length " +
                                                  std::to_string(l));
                    }
                }
                next[static_cast<std::size_t>(v)] = sum;
            }
            count.swap(next);
            out[static_cast<std::size_t>(l)].diag[static_cast<std::size_t>(start)] =
                count[static_cast<std::size_t>(start)];
        }
    }
    return out;
}

}  // namespace centrascope
