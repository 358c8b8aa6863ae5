#include "centrascope/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace centrascope {

namespace {

double off_diagonal_frobenius(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) sum += a[static_cast<std::size_t>(i * n + j)] * a[static_cast<std::size_t>(i * n + j)];
        }
    }
    return std::sqrt(sum);
}

}  // namespace

SpectralDecomposition spectral_decomposition(const Graph& g) {
    const int n = g.node_count();
    std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i * n + j)] = g.has_edge(i, j) ? 1.0 : 0.0;
        }
    }
    // v accumulates the rotations; column j converges to eigenvector j.
    std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = 1.0;

    const double frob = std::sqrt(2.0 * g.edge_count());
    const double threshold = 1e-12 * std::max(frob, 1.0);

    int sweep = 0;
    while (off_diagonal_frobenius(a, n) > threshold) {
        if (++sweep > 100) {
            throw std::runtime_error("Jacobi eigensolver did not converge in 100 sweeps");
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p * n + q)];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p * n + p)];
                const double aqq = a[static_cast<std::size_t>(q * n + q)];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[static_cast<std::size_t>(k * n + p)];
                    const double akq = a[static_cast<std::size_t>(k * n + q)];
                    a[static_cast<std::size_t>(k * n + p)] = c * akp - s * akq;
                    a[static_cast<std::size_t>(k * n + q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[static_cast<std::size_t>(p * n + k)];
                    const double aqk = a[static_cast<std::size_t>(q * n + k)];
                    a[static_cast<std::size_t>(p * n + k)] = c * apk - s * aqk;
                    a[static_cast<std::size_t>(q * n + k)] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[static_cast<std::size_t>(k * n + p)];
                    const double vkq = v[static_cast<std::size_t>(k * n + q)];
                    v[static_cast<std::size_t>(k * n + p)] = c * vkp - s * vkq;
                    v[static_cast<std::size_t>(k * n + q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> index(static_cast<std::size_t>(n));
    std::iota(index.begin(), index.end(), 0);
    std::stable_sort(index.begin(), index.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x * n + x)] > a[static_cast<std::size_t>(y * n + y)];
    });

    SpectralDecomposition out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
        const int src = index[static_cast<std::size_t>(j)];
        out.eigenvalues[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(src * n + src)];
        for (int i = 0; i < n; ++i) {
            out.eigenvectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                v[static_cast<std::size_t>(i * n + src)];
        }
    }

    // Validate the decomposition invariants.
    double defect = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) {
                dot += out.eigenvectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                       out.eigenvectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            }
            defect = std::max(defect, std::abs(dot - (j == k ? 1.0 : 0.0)));
        }
    }
    if (defect > 1e-10) {
        throw std::runtime_error("eigenvector basis lost orthonormality (defect " +
                                 std::to_string(defect) + ")");
    }

    double residual = 0.0;
    for (int j = 0; j < n; ++j) {
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            std::uint32_t nb = g.neighbors(i);
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                row += out.eigenvectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
            }
            const double diff = row - out.eigenvalues[static_cast<std::size_t>(j)] *
                                          out.eigenvectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            norm2 += diff * diff;
        }
        residual = std::max(residual, std::sqrt(norm2));
    }
    out.residual = residual;
    const double lambda1 = n > 0 ? std::abs(out.eigenvalues.front()) : 0.0;
    if (residual > 1e-9 * std::max(1.0, lambda1)) {
        throw std::runtime_error("eigenpair residual " + std::to_string(residual) + " out of bounds");
    }

    const double trace = std::accumulate(out.eigenvalues.begin(), out.eigenvalues.end(), 0.0);
    if (std::abs(trace) > 1e-9) {
        throw std::runtime_error("eigenvalue sum deviates from the zero trace of A");
    }
    return out;
}

}  // namespace centrascope
