#include "centrascope/centrality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>

#include "centrascope/canonical.hpp"

namespace centrascope {

namespace {

[[noreturn]] void throw_disconnected(const char* op) {
    throw std::invalid_argument(std::string(op) + ": graph must be connected");
}

/// BFS from `source` recording distances and geodesic counts.
void count_geodesics(const Graph& g, int source, std::vector<int>& dist,
                     std::vector<std::uint64_t>& sigma) {
    const int n = g.node_count();
    dist.assign(static_cast<std::size_t>(n), unreachable);
    sigma.assign(static_cast<std::size_t>(n), 0);
    dist[static_cast<std::size_t>(source)] = 0;
    sigma[static_cast<std::size_t>(source)] = 1;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        std::uint32_t nb = g.neighbors(u);
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (dist[static_cast<std::size_t>(w)] == unreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(w);
            }
            if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1) {
                sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(u)];
            }
        }
    }
}

}  // namespace

std::string to_string(CentralityKind kind) {
    switch (kind) {
        case CentralityKind::degree: return "degree";
        case CentralityKind::closeness: return "closeness";
        case CentralityKind::betweenness: return "betweenness";
        case CentralityKind::eigenvector: return "eigenvector";
        case CentralityKind::subgraph: return "subgraph";
    }
    throw std::logic_error("unknown centrality kind");
}

std::size_t CentralityVector::size() const {
    return is_exact() ? exact().size() : floats().size();
}

double CentralityVector::value_as_double(int node) const {
    return is_exact() ? to_double(exact()[static_cast<std::size_t>(node)])
                      : floats()[static_cast<std::size_t>(node)];
}

std::vector<int> degree_values(const Graph& g) {
    std::vector<int> values(static_cast<std::size_t>(g.node_count()));
    for (int i = 0; i < g.node_count(); ++i) values[static_cast<std::size_t>(i)] = g.degree(i);
    return values;
}

std::vector<int> distance_sums(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> sums(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        const std::vector<int> dist = bfs_distances(g, u);
        int s = 0;
        for (int d : dist) {
            if (d == unreachable) throw_disconnected("distance_sums");
            s += d;
        }
        sums[static_cast<std::size_t>(u)] = s;
    }
    return sums;
}

std::vector<Rational> closeness_values(const Graph& g) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("closeness_centrality: need n >= 2");
    const std::vector<int> sums = distance_sums(g);
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int s : sums) values.emplace_back(n - 1, s);
    return values;
}

std::vector<Rational> betweenness_values(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
    std::vector<std::vector<std::uint64_t>> sigma(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        count_geodesics(g, u, dist[static_cast<std::size_t>(u)], sigma[static_cast<std::size_t>(u)]);
        for (int d : dist[static_cast<std::size_t>(u)]) {
            if (d == unreachable) throw_disconnected("betweenness_centrality");
        }
    }
    std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::uint64_t paths_ij = sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const int d_ij = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                        dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] !=
                    d_ij) {
                    continue;
                }
                const std::uint64_t through =
                    sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    sigma[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                values[static_cast<std::size_t>(k)] += Rational(through, paths_ij);
            }
        }
    }
    return values;
}

SpectralCentralities spectral_centralities(const SpectralDecomposition& decomposition) {
    const int n = static_cast<int>(decomposition.eigenvalues.size());
    SpectralCentralities out;

    out.eigenvector = decomposition.eigenvectors.front();
    double sum = 0.0;
    for (double x : out.eigenvector) sum += x;
    if (sum < 0.0) {
        for (double& x : out.eigenvector) x = -x;
    }
    for (double x : out.eigenvector) {
        if (x <= 1e-10) {
            throw std::runtime_error(
                "eigenvector centrality: nonpositive Perron entry (eigensolver failure "
                "or disconnected graph)");
        }
    }

    out.subgraph.assign(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        const double weight = std::exp(decomposition.eigenvalues[static_cast<std::size_t>(j)]);
        for (int i = 0; i < n; ++i) {
            const double phi = decomposition.eigenvectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            out.subgraph[static_cast<std::size_t>(i)] += phi * phi * weight;
        }
    }
    for (double ee : out.subgraph) {
        if (ee < 1.0 - 1e-9) {
            throw std::runtime_error("subgraph centrality below 1 (eigensolver failure)");
        }
    }
    return out;
}

SpectralCentralities spectral_centralities(const Graph& g) {
    return spectral_centralities(spectral_decomposition(g));
}

CentralityVector degree_centrality(const Graph& g) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(g.node_count()));
    for (int k : degree_values(g)) values.emplace_back(k);
    return {CentralityKind::degree, std::move(values), canonical_graph6(g)};
}

CentralityVector closeness_centrality(const Graph& g) {
    return {CentralityKind::closeness, closeness_values(g), canonical_graph6(g)};
}

CentralityVector betweenness_centrality(const Graph& g) {
    return {CentralityKind::betweenness, betweenness_values(g), canonical_graph6(g)};
}

CentralityVector eigenvector_centrality(const Graph& g) {
    if (!is_connected(g)) throw_disconnected("eigenvector_centrality");
    return {CentralityKind::eigenvector, spectral_centralities(g).eigenvector, canonical_graph6(g)};
}

CentralityVector subgraph_centrality(const Graph& g) {
    return {CentralityKind::subgraph, spectral_centralities(spectral_decomposition(g)).subgraph,
            canonical_graph6(g)};
}

SeriesResult subgraph_centrality_series(const Graph& g, int truncation_length) {
    if (truncation_length < 0 || truncation_length > 40) {
        throw std::invalid_argument("subgraph_centrality_series: L must be in [0, 40]");
    }
    const int n = g.node_count();
    const int L = truncation_length;

    // Common denominator L!: partial_i = (sum_l (A^l)_ii * L!/l!) / L!.
    // Walk counts are taken in arbitrary precision: already at n=6, l=30 the
    // diagonal of A^l for K6 exceeds 64 bits.
    std::vector<BigInt> weight(static_cast<std::size_t>(L) + 1);  // L!/l!
    weight[static_cast<std::size_t>(L)] = 1;
    for (int l = L; l > 0; --l) weight[static_cast<std::size_t>(l - 1)] = weight[static_cast<std::size_t>(l)] * l;
    const BigInt& l_factorial = weight[0];

    SeriesResult out;
    out.partial_sums.reserve(static_cast<std::size_t>(n));
    std::vector<BigInt> v(static_cast<std::size_t>(n));
    std::vector<BigInt> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::fill(v.begin(), v.end(), BigInt(0));
        v[static_cast<std::size_t>(i)] = 1;
        BigInt numerator = l_factorial;  // l = 0 term: (A^0)_ii = 1
        for (int l = 1; l <= L; ++l) {
            for (int u = 0; u < n; ++u) {
                BigInt sum = 0;
                std::uint32_t nb = g.neighbors(u);
                while (nb) {
                    const int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    sum += v[static_cast<std::size_t>(w)];
                }
                next[static_cast<std::size_t>(u)] = std::move(sum);
            }
            v.swap(next);
            numerator += v[static_cast<std::size_t>(i)] * weight[static_cast<std::size_t>(l)];
        }
        out.partial_sums.emplace_back(numerator, l_factorial);
    }

    int max_degree = 0;
    for (int i = 0; i < n; ++i) max_degree = std::max(max_degree, g.degree(i));
    double delta_power_over_factorial = 1.0;  // d^(L+1) / (L+1)!
    for (int k = 1; k <= L + 1; ++k) delta_power_over_factorial *= static_cast<double>(max_degree) / k;
    out.tail_bound = n * delta_power_over_factorial * std::exp(static_cast<double>(max_degree));
    return out;
}

}  // namespace centrascope
