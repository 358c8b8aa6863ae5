#ifndef CENTRASCOPE_ENUMERATE_HPP
#define CENTRASCOPE_ENUMERATE_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "centrascope/graph.hpp"

namespace centrascope {

/// An ordered collection of graphs with a provenance tag. Generated streams
/// contain one connected representative per isomorphism class; file streams
/// reproduce the file verbatim (no filtering, no dedup).
struct GraphStream {
    std::vector<Graph> graphs;
    std::string provenance;

    std::size_t size() const { return graphs.size(); }
    auto begin() const { return graphs.begin(); }
    auto end() const { return graphs.end(); }
};

/// All connected graphs on n nodes up to isomorphism, in ascending
/// canonical-graph6 order. Each emitted graph is canonically labeled.
/// Supported range: 1 <= n <= 10.
GraphStream enumerate_connected(int n);

/// Reads a graph6 file (one graph per line, optional ">>graph6<<" header,
/// blank lines skipped). Parse errors report the line number.
GraphStream read_graph6_file(const std::filesystem::path& path);

/// Writes one canonical graph6 line per graph; returns the number written.
std::size_t write_graph6_file(const GraphStream& stream, const std::filesystem::path& path);

}  // namespace centrascope

#endif  // CENTRASCOPE_ENUMERATE_HPP
