#ifndef CENTRASCOPE_CANONICAL_HPP
#define CENTRASCOPE_CANONICAL_HPP

#include <string>

#include "centrascope/graph.hpp"

namespace centrascope {

/// A canonically relabeled graph together with its graph6 encoding.
struct Canonical {
    Graph graph;
    std::string graph6;
};

/// Returns the isomorph of g whose graph6 string is lexicographically
/// minimal over all relabelings. Isomorphic inputs yield identical output.
Canonical canonical_form(const Graph& g);

/// Shorthand for canonical_form(g).graph6.
std::string canonical_graph6(const Graph& g);

}  // namespace centrascope

#endif  // CENTRASCOPE_CANONICAL_HPP
