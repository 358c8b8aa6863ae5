#include "centrascope/canonical.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace centrascope {

namespace {

// Partial labeling: order[k] is the original node placed at canonical
// position k, used is the bitmask of placed nodes.
struct State {
    std::array<std::uint8_t, Graph::max_nodes> order;
    std::uint32_t used = 0;
};

// The graph6 bit string lists the upper triangle column by column, so the
// bits contributed by canonical position i depend only on positions 0..i.
// Minimizing the string is therefore a level-by-level search: keep every
// partial labeling that realizes the minimal column value at each level.
// All full labelings that survive produce the same (minimal) string.
//
// Two unplaced nodes whose neighborhoods agree outside the pair are
// interchangeable, so only one of them is tried per state; this keeps the
// frontier small on highly symmetric graphs such as K_n.
std::uint32_t column_bits(const Graph& g, const State& s, int level, int candidate) {
    std::uint32_t col = 0;
    for (int k = 0; k < level; ++k) {
        col = col << 1 | (g.has_edge(s.order[static_cast<std::size_t>(k)], candidate) ? 1u : 0u);
    }
    return col;
}

}  // namespace

Canonical canonical_form(const Graph& g) {
    const int n = g.node_count();
    std::vector<State> frontier(1);
    std::vector<State> next;
    for (int level = 0; level < n; ++level) {
        next.clear();
        std::uint32_t best = ~0u;
        for (const State& s : frontier) {
            std::uint32_t remaining = (n == 32 ? ~0u : (1u << n) - 1u) & ~s.used;
            std::uint32_t tried = 0;
            while (remaining) {
                const int v = std::countr_zero(remaining);
                remaining &= remaining - 1;
                bool twin_seen = false;
                std::uint32_t others = tried;
                while (others) {
                    const int u = std::countr_zero(others);
                    others &= others - 1;
                    const std::uint32_t mask = ~s.used & ~(1u << u) & ~(1u << v);
                    if ((g.neighbors(u) & mask) == (g.neighbors(v) & mask) &&
                        column_bits(g, s, level, u) == column_bits(g, s, level, v)) {
                        twin_seen = true;
                        break;
                    }
                }
                tried |= 1u << v;
                if (twin_seen) continue;

                const std::uint32_t col = column_bits(g, s, level, v);
                if (col > best) continue;
                if (col < best) {
                    best = col;
                    next.clear();
                }
                State extended = s;
                extended.order[static_cast<std::size_t>(level)] = static_cast<std::uint8_t>(v);
                extended.used |= 1u << v;
                next.push_back(extended);
            }
        }
        frontier.swap(next);
    }

    const State& winner = frontier.front();
    std::array<int, Graph::max_nodes> perm{};
    for (int k = 0; k < n; ++k) perm[winner.order[static_cast<std::size_t>(k)]] = k;
    Canonical result;
    result.graph = g.permuted(std::span<const int>(perm.data(), static_cast<std::size_t>(n)));
    result.graph6 = to_graph6(result.graph);
    return result;
}

std::string canonical_graph6(const Graph& g) {
    return canonical_form(g).graph6;
}

}  // namespace centrascope
