#ifndef CENTRASCOPE_STRUCTURE_HPP
#define CENTRASCOPE_STRUCTURE_HPP

#include <vector>

#include "centrascope/graph.hpp"

namespace centrascope {

/// Structural classification of a connected graph, aggregating the
/// classifiers below.  Invariants (theorems, asserted by the test suite over
/// the whole corpus): distance_regular => walk_regular, vertex_transitive =>
/// walk_regular, walk_regular => regular, and vertex_transitive <=> orbits
/// has exactly one block.
struct StructureProfile {
    bool regular = false;
    bool walk_regular = false;
    bool vertex_transitive = false;
    bool distance_regular = false;
    bool bipartite = false;
    /// Automorphism orbits: blocks sorted internally and by first element.
    std::vector<std::vector<int>> orbits;
};

/// True iff all degrees are equal.
bool is_regular(const Graph& g);

/// True iff diag(A^l) is constant for every l in 2..n-1.  By Cayley-Hamilton
/// the diagonal of every higher power is a fixed linear combination of these,
/// so the cutoff is exact, not a heuristic.  Requires a connected graph.
bool is_walk_regular(const Graph& g);

/// Orbit partition of the node set under the automorphism group, computed by
/// backtracking over refinement-colored candidate mappings.  Two nodes share
/// an orbit iff some automorphism maps one to the other.
std::vector<std::vector<int>> automorphism_orbits(const Graph& g);

/// True iff the automorphism group has a single node orbit.
bool is_vertex_transitive(const Graph& g);

/// True iff intersection numbers (c_k, a_k, b_k) exist: for every ordered
/// pair (u,v) at distance k, v has exactly c_k neighbors at distance k-1
/// from u, a_k at distance k, and b_k at distance k+1.  Checked by direct
/// scan against the first-seen values per k.  Throws std::invalid_argument
/// on disconnected input.
bool is_distance_regular(const Graph& g);

/// True iff the graph is 2-colorable.
bool is_bipartite(const Graph& g);

/// All flags plus orbits for a connected graph.
StructureProfile structure_profile(const Graph& g);

}  // namespace centrascope

#endif  // CENTRASCOPE_STRUCTURE_HPP
