#include "centrascope/discriminance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "centrascope/canonical.hpp"

namespace centrascope {

namespace {

bool all_equal_int(const std::vector<int>& values) {
    return std::all_of(values.begin(), values.end(), [&](int v) { return v == values.front(); });
}

bool all_equal_rational(const std::vector<Rational>& values) {
    return std::all_of(values.begin(), values.end(),
                       [&](const Rational& v) { return v == values.front(); });
}

bool eigenvector_zero(const Graph& g, const std::vector<double>& phi1) {
    const bool exact = is_regular(g);  // constant Perron vector <=> regular
    const auto [lo, hi] = std::minmax_element(phi1.begin(), phi1.end());
    const bool approx = (*hi - *lo) <= 1e-9;
    if (exact != approx) {
        throw std::runtime_error("eigenvector zero-variance modes disagree on " +
                                 canonical_graph6(g) + " (exact=" + (exact ? "true" : "false") +
                                 ", float spread=" + std::to_string(*hi - *lo) + ")");
    }
    return exact;
}

/// FLOAT-mode subgraph test with the suspect-band escalation.
bool subgraph_zero_float(const Graph& g, const std::vector<double>& ee, double spread) {
    const double max_ee = *std::max_element(ee.begin(), ee.end());
    if (spread <= 1e-12 || spread >= 1e-6) {
        return spread <= 1e-9 * std::max(1.0, max_ee);
    }
    // Suspect band: the eigensolver's answer is not trusted.  Bound the true
    // spread with the exact series interval [p_i, p_i + tail] and re-decide;
    // escalate the truncation once before giving up.
    for (const int truncation : {30, 40}) {
        const SeriesResult series = subgraph_centrality_series(g, truncation);
        const auto [p_lo, p_hi] =
            std::minmax_element(series.partial_sums.begin(), series.partial_sums.end());
        const double partial_spread = to_double(*p_hi - *p_lo);
        const double tolerance = 1e-9 * std::max(1.0, to_double(*p_hi));
        if (partial_spread - series.tail_bound > tolerance) return false;
        if (partial_spread + series.tail_bound <= tolerance) return true;
    }
    throw std::runtime_error("subgraph zero-variance test indeterminate on " +
                             canonical_graph6(g) + " (EE spread " + std::to_string(spread) +
                             " in suspect band, series interval too wide)");
}

bool subgraph_zero_exact(const Graph& g) {
    const int n = g.node_count();
    if (n <= 2) return true;
    // Constant closed-walk diagonals for l <= n-1: the provable equivalent of
    // exact EE equality (independent of structure_profile's classifier).
    for (const WalkDiagonal& wd : walk_diagonals(g, n - 1)) {
        if (wd.length < 2) continue;
        for (std::uint64_t d : wd.diag) {
            if (d != wd.diag.front()) return false;
        }
    }
    return true;
}

double spread_of(const std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

}  // namespace

std::string to_string(Measure m) {
    switch (m) {
        case Measure::subgraph: return "subgraph";
        case Measure::degree: return "degree";
        case Measure::eigenvector: return "eigenvector";
        case Measure::closeness: return "closeness";
        case Measure::betweenness: return "betweenness";
    }
    throw std::logic_error("unknown measure");
}

CentralityKind to_kind(Measure m) {
    switch (m) {
        case Measure::subgraph: return CentralityKind::subgraph;
        case Measure::degree: return CentralityKind::degree;
        case Measure::eigenvector: return CentralityKind::eigenvector;
        case Measure::closeness: return CentralityKind::closeness;
        case Measure::betweenness: return CentralityKind::betweenness;
    }
    throw std::logic_error("unknown measure");
}

bool stddev_zero(const Graph& g, Measure m) {
    if (!is_connected(g)) throw std::invalid_argument("stddev_zero: graph must be connected");
    switch (m) {
        case Measure::degree:
            return all_equal_int(degree_values(g));
        case Measure::closeness:
            // (n-1)/s(u) are all equal iff the integer sums s(u) are.
            return all_equal_int(distance_sums(g));
        case Measure::betweenness:
            return all_equal_rational(betweenness_values(g));
        case Measure::eigenvector:
            return eigenvector_zero(g, spectral_centralities(g).eigenvector);
        case Measure::subgraph: {
            const std::vector<double> ee = spectral_centralities(g).subgraph;
            return subgraph_zero_float(g, ee, spread_of(ee));
        }
    }
    throw std::logic_error("unknown measure");
}

DiscriminanceRecord discriminance_record(const Graph& g) {
    if (!is_connected(g)) {
        throw std::invalid_argument("discriminance_record: graph must be connected");
    }
    DiscriminanceRecord record;
    record.graph_id = canonical_graph6(g);
    record.n = g.node_count();
    record.profile = structure_profile(g);

    const SpectralCentralities spectral = spectral_centralities(g);
    record.ee_spread = spread_of(spectral.subgraph);

    record.zero_flags[static_cast<std::size_t>(Measure::degree)] = all_equal_int(degree_values(g));
    record.zero_flags[static_cast<std::size_t>(Measure::closeness)] = all_equal_int(distance_sums(g));
    record.zero_flags[static_cast<std::size_t>(Measure::betweenness)] =
        all_equal_rational(betweenness_values(g));
    record.zero_flags[static_cast<std::size_t>(Measure::eigenvector)] =
        eigenvector_zero(g, spectral.eigenvector);
    record.zero_flags[static_cast<std::size_t>(Measure::subgraph)] =
        subgraph_zero_float(g, spectral.subgraph, record.ee_spread);
    record.subgraph_zero_exact = subgraph_zero_exact(g);
    return record;
}

std::vector<DiscriminanceRecord> discriminance_records(const GraphStream& stream, int workers) {
    if (workers < 1) throw std::invalid_argument("discriminance_records: workers must be >= 1");
    std::vector<DiscriminanceRecord> records(stream.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < stream.size(); ++i) {
            records[i] = discriminance_record(stream.graphs[i]);
        }
        return records;
    }

    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    const auto work = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < stream.size(); i = cursor.fetch_add(1)) {
            try {
                records[i] = discriminance_record(stream.graphs[i]);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

DiscriminantPower discriminant_power(const GraphStream& stream, Measure kind) {
    if (stream.size() == 0) {
        throw std::invalid_argument("discriminant_power: empty graph stream");
    }
    long zero_count = 0;
    int n = stream.graphs.front().node_count();
    for (const Graph& g : stream.graphs) {
        if (g.node_count() != n) n = -1;
        if (stddev_zero(g, kind)) ++zero_count;
    }
    const long total = static_cast<long>(stream.size());
    return {kind, n, zero_count, total, Rational(zero_count, total)};
}

}  // namespace centrascope
