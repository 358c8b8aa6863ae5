#ifndef CENTRASCOPE_CENTRALITY_HPP
#define CENTRASCOPE_CENTRALITY_HPP

#include <string>
#include <variant>
#include <vector>

#include "centrascope/graph.hpp"
#include "centrascope/rational.hpp"
#include "centrascope/spectral.hpp"

namespace centrascope {

enum class CentralityKind { degree, closeness, betweenness, eigenvector, subgraph };

std::string to_string(CentralityKind kind);

/// Per-node centrality values for one measure on one graph.  Degree,
/// closeness, and betweenness are exact rationals; eigenvector and subgraph
/// centrality are floating point (with certified series cross-checks
/// available via subgraph_centrality_series).
struct CentralityVector {
    CentralityKind kind;
    std::variant<std::vector<Rational>, std::vector<double>> values;
    std::string graph_id;  // canonical graph6 text

    bool is_exact() const { return values.index() == 0; }
    const std::vector<Rational>& exact() const { return std::get<0>(values); }
    const std::vector<double>& floats() const { return std::get<1>(values); }
    std::size_t size() const;
    double value_as_double(int node) const;
};

/// Truncated matrix-exponential diagonal: partial_sums[i] = sum over
/// l = 0..L of (A^l)_ii / l!, exact.  The true EE(i) lies within
/// [partial_sums[i], partial_sums[i] + tail_bound].
struct SeriesResult {
    std::vector<Rational> partial_sums;
    double tail_bound;
};

// --- Raw per-node value helpers (no CentralityVector wrapper; used by the
// --- sweep where the canonical id is already known).

std::vector<int> degree_values(const Graph& g);

/// s(u) = sum of shortest-path distances from u to every other node.
/// Throws std::invalid_argument if g is disconnected.
std::vector<int> distance_sums(const Graph& g);

std::vector<Rational> closeness_values(const Graph& g);

/// Ordered-pair convention: both (i,j) and (j,i) are summed, so each value
/// is exactly twice the unordered-convention value.  Endpoints excluded.
std::vector<Rational> betweenness_values(const Graph& g);

/// Both spectral measures from one eigendecomposition.
struct SpectralCentralities {
    std::vector<double> eigenvector;  // phi_1, sign-fixed positive, unit norm
    std::vector<double> subgraph;     // EE(i) = sum_j phi_j(i)^2 e^{lambda_j}
};

SpectralCentralities spectral_centralities(const SpectralDecomposition& decomposition);
SpectralCentralities spectral_centralities(const Graph& g);

// --- Spec-level operations (attach the canonical graph id).

CentralityVector degree_centrality(const Graph& g);
CentralityVector closeness_centrality(const Graph& g);
CentralityVector betweenness_centrality(const Graph& g);
CentralityVector eigenvector_centrality(const Graph& g);
CentralityVector subgraph_centrality(const Graph& g);

/// Exact truncated series for EE with a rigorous tail bound
/// n * d^(L+1) * e^d / (L+1)! where d = max degree (an upper bound on
/// lambda_1 that keeps the certificate independent of floating point).
/// Requires 0 <= L <= 40; throws std::overflow_error if a walk count
/// exceeds 64 bits.
SeriesResult subgraph_centrality_series(const Graph& g, int truncation_length);

}  // namespace centrascope

#endif  // CENTRASCOPE_CENTRALITY_HPP
