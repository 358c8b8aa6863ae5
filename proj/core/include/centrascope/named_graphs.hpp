#ifndef CENTRASCOPE_NAMED_GRAPHS_HPP
#define CENTRASCOPE_NAMED_GRAPHS_HPP

#include <span>
#include <string>

#include "centrascope/graph.hpp"

namespace centrascope {

/// Reference constructions used to pin down zero-variance sets by canonical
/// form ("the subgraph-zero set at n=7 is exactly {C7, K7, C7(1,2)}" becomes
/// a checkable assertion).

Graph cycle_graph(int n);                       // C_n, n >= 3
Graph complete_graph(int n);                    // K_n, n >= 1
Graph path_graph(int n);                        // P_n, n >= 1
Graph star_graph(int leaves);                   // K_{1,leaves}, center node 0
Graph complete_bipartite_graph(int a, int b);   // K_{a,b}
Graph circulant_graph(int n, std::span<const int> offsets);  // i ~ j iff (i-j) mod n in +/-offsets
Graph prism_graph();                            // 3-prism, K3 x K2
Graph octahedron_graph();                       // K_{2,2,2}

/// Human-readable name for a graph isomorphic to one of the references
/// ("C7", "K5", "K3,3", "C7(1,2)", "prism", "octahedron", ...); empty string
/// if the graph matches none of them.
std::string recognize_named(const Graph& g);

}  // namespace centrascope

#endif  // CENTRASCOPE_NAMED_GRAPHS_HPP
