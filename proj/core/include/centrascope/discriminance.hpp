#ifndef CENTRASCOPE_DISCRIMINANCE_HPP
#define CENTRASCOPE_DISCRIMINANCE_HPP

#include <array>
#include <string>
#include <vector>

#include "centrascope/centrality.hpp"
#include "centrascope/enumerate.hpp"
#include "centrascope/graph.hpp"
#include "centrascope/rational.hpp"
#include "centrascope/structure.hpp"

namespace centrascope {

/// The five measures, indexed in the reference table's column order.
enum class Measure : int {
    subgraph = 0,
    degree = 1,
    eigenvector = 2,
    closeness = 3,
    betweenness = 4,
};

inline constexpr std::array<Measure, 5> all_measures = {
    Measure::subgraph, Measure::degree, Measure::eigenvector,
    Measure::closeness, Measure::betweenness};

std::string to_string(Measure m);
CentralityKind to_kind(Measure m);

/// Per-graph outcome of the zero-variance test for all five measures.
/// zero_flags[subgraph] is the FLOAT-mode test (the paper-faithful empirical
/// one); subgraph_zero_exact is the provable walk-diagonal criterion, kept
/// separate so the conjecture checks compare FLOAT against walk-regularity
/// without circularity.
struct DiscriminanceRecord {
    std::string graph_id;  // canonical graph6 text
    int n = 0;
    std::array<bool, 5> zero_flags{};  // indexed by Measure
    bool subgraph_zero_exact = false;
    StructureProfile profile;
    double ee_spread = 0.0;  // max EE - min EE, diagnostic

    bool zero(Measure m) const { return zero_flags[static_cast<std::size_t>(m)]; }
};

/// s_c(G) = 0, i.e. all node values of the measure coincide.
///
/// Degree, closeness, and betweenness are decided by exact arithmetic.
/// Eigenvector runs an EXACT mode (constant Perron vector <=> regular) and a
/// FLOAT mode (spread of computed phi_1 <= 1e-9) and throws if they disagree.
/// Subgraph runs the FLOAT test (spread <= 1e-9 * max(1, max EE)); a spread
/// inside the suspect band (1e-12, 1e-6) is re-decided against the certified
/// exact-series interval, and an interval too wide to decide raises an error
/// rather than guessing.
bool stddev_zero(const Graph& g, Measure m);

DiscriminanceRecord discriminance_record(const Graph& g);

/// Records for a whole stream, in stream order.  workers > 1 processes
/// graphs in parallel; results land in index-aligned slots, so the output is
/// identical for every worker count.
std::vector<DiscriminanceRecord> discriminance_records(const GraphStream& stream, int workers = 1);

/// D(C): fraction of graphs in a corpus whose nodes the measure fails to
/// distinguish.
struct DiscriminantPower {
    Measure kind;
    int n;  // node count when uniform over the stream, -1 for mixed streams
    long zero_count;
    long total;
    Rational ratio;
};

DiscriminantPower discriminant_power(const GraphStream& stream, Measure kind);

}  // namespace centrascope

#endif  // CENTRASCOPE_DISCRIMINANCE_HPP
