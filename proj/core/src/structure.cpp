#include "centrascope/structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace centrascope {

namespace {

/// Iterated neighbor-color refinement (degree, then multiset of neighbor
/// colors).  Automorphisms preserve these colors, so they prune the
/// backtracking search without excluding any mapping.
std::vector<int> refinement_colors(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) color[static_cast<std::size_t>(i)] = g.degree(i);

    int classes = 0;
    for (int round = 0; round < n; ++round) {
        std::map<std::vector<int>, int> signature_ids;
        std::vector<std::vector<int>> signatures(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<int>& sig = signatures[static_cast<std::size_t>(i)];
            sig.push_back(color[static_cast<std::size_t>(i)]);
            std::uint32_t nb = g.neighbors(i);
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                sig.push_back(color[static_cast<std::size_t>(w)]);
            }
            std::sort(sig.begin() + 1, sig.end());
            signature_ids.emplace(sig, 0);
        }
        int next_id = 0;
        for (auto& [sig, id] : signature_ids) id = next_id++;
        for (int i = 0; i < n; ++i) {
            color[static_cast<std::size_t>(i)] = signature_ids.at(signatures[static_cast<std::size_t>(i)]);
        }
        if (next_id == classes) break;  // refinement stopped splitting
        classes = next_id;
    }
    return color;
}

/// Backtracking search for an automorphism with image[u] = v.  Candidates are
/// restricted to the same refinement color and must preserve adjacency with
/// every already-mapped node.  Returns true and fills `image` on success.
bool find_automorphism(const Graph& g, const std::vector<int>& color, int u, int v,
                       std::array<int, Graph::max_nodes>& image) {
    const int n = g.node_count();
    std::array<int, Graph::max_nodes> order{};
    order[0] = u;  // place the forced node first so the constraint prunes early
    for (int i = 0, pos = 1; i < n; ++i) {
        if (i != u) order[static_cast<std::size_t>(pos++)] = i;
    }
    image.fill(-1);
    std::uint32_t used = 0;

    const auto consistent = [&](int node, int candidate, int depth) {
        if (color[static_cast<std::size_t>(candidate)] != color[static_cast<std::size_t>(node)]) return false;
        for (int d = 0; d < depth; ++d) {
            const int prev = order[static_cast<std::size_t>(d)];
            if (g.has_edge(node, prev) != g.has_edge(candidate, image[static_cast<std::size_t>(prev)])) {
                return false;
            }
        }
        return true;
    };

    const auto search = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int node = order[static_cast<std::size_t>(depth)];
        if (depth == 0) {
            if (!consistent(node, v, 0)) return false;
            image[static_cast<std::size_t>(node)] = v;
            used |= 1u << v;
            if (self(self, 1)) return true;
            used &= ~(1u << v);
            image[static_cast<std::size_t>(node)] = -1;
            return false;
        }
        for (int candidate = 0; candidate < n; ++candidate) {
            if (used & (1u << candidate)) continue;
            if (!consistent(node, candidate, depth)) continue;
            image[static_cast<std::size_t>(node)] = candidate;
            used |= 1u << candidate;
            if (self(self, depth + 1)) return true;
            used &= ~(1u << candidate);
            image[static_cast<std::size_t>(node)] = -1;
        }
        return false;
    };
    return search(search, 0);
}

int uf_find(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    parent[static_cast<std::size_t>(uf_find(parent, a))] = uf_find(parent, b);
}

}  // namespace

bool is_regular(const Graph& g) {
    const int n = g.node_count();
    for (int i = 1; i < n; ++i) {
        if (g.degree(i) != g.degree(0)) return false;
    }
    return true;
}

bool is_walk_regular(const Graph& g) {
    if (!is_connected(g)) {
        throw std::invalid_argument("is_walk_regular: graph must be connected");
    }
    const int n = g.node_count();
    if (n <= 2) return true;
    const std::vector<WalkDiagonal> diagonals = walk_diagonals(g, n - 1);
    for (int l = 2; l <= n - 1; ++l) {
        const std::vector<std::uint64_t>& diag = diagonals[static_cast<std::size_t>(l)].diag;
        for (int i = 1; i < n; ++i) {
            if (diag[static_cast<std::size_t>(i)] != diag[0]) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> automorphism_orbits(const Graph& g) {
    const int n = g.node_count();
    if (n > 16) {
        throw std::invalid_argument("automorphism_orbits: exhaustive search capped at n <= 16");
    }
    const std::vector<int> color = refinement_colors(g);
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);

    std::array<int, Graph::max_nodes> image{};
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)]) continue;
            if (uf_find(parent, u) == uf_find(parent, v)) continue;
            if (find_automorphism(g, color, u, v, image)) {
                // The whole permutation is an automorphism; merge every cycle.
                for (int i = 0; i < n; ++i) uf_union(parent, i, image[static_cast<std::size_t>(i)]);
            }
        }
    }

    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) blocks[uf_find(parent, i)].push_back(i);
    std::vector<std::vector<int>> orbits;
    orbits.reserve(blocks.size());
    for (auto& [root, members] : blocks) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return orbits;
}

bool is_vertex_transitive(const Graph& g) { return automorphism_orbits(g).size() == 1; }

bool is_distance_regular(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        dist[static_cast<std::size_t>(u)] = bfs_distances(g, u);
        for (int d : dist[static_cast<std::size_t>(u)]) {
            if (d == unreachable) {
                throw std::invalid_argument("is_distance_regular: graph must be connected");
            }
        }
    }

    // first-seen intersection numbers per distance k, including k=0
    // (where b_0 = degree, forcing regularity).
    std::vector<int> c(static_cast<std::size_t>(n), -1);
    std::vector<int> a(static_cast<std::size_t>(n), -1);
    std::vector<int> b(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int k = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            int prev = 0, same = 0, next = 0;
            std::uint32_t nb = g.neighbors(v);
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                const int dw = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
                if (dw == k - 1) ++prev;
                else if (dw == k) ++same;
                else ++next;  // dw == k + 1 by the triangle inequality
            }
            if (c[static_cast<std::size_t>(k)] == -1) {
                c[static_cast<std::size_t>(k)] = prev;
                a[static_cast<std::size_t>(k)] = same;
                b[static_cast<std::size_t>(k)] = next;
            } else if (c[static_cast<std::size_t>(k)] != prev || a[static_cast<std::size_t>(k)] != same ||
                       b[static_cast<std::size_t>(k)] != next) {
                return false;
            }
        }
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (side[static_cast<std::size_t>(start)] != -1) continue;
        side[static_cast<std::size_t>(start)] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            std::uint32_t nb = g.neighbors(u);
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[static_cast<std::size_t>(w)] == -1) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

StructureProfile structure_profile(const Graph& g) {
    StructureProfile profile;
    profile.regular = is_regular(g);
    profile.walk_regular = is_walk_regular(g);
    profile.orbits = automorphism_orbits(g);
    profile.vertex_transitive = profile.orbits.size() == 1;
    profile.distance_regular = is_distance_regular(g);
    profile.bipartite = is_bipartite(g);
    return profile;
}

}  // namespace centrascope
