#ifndef CENTRASCOPE_SPECTRAL_HPP
#define CENTRASCOPE_SPECTRAL_HPP

#include <vector>

#include "centrascope/graph.hpp"

namespace centrascope {

/// Full eigendecomposition of the adjacency matrix.
///
/// eigenvalues are sorted descending; eigenvectors[j] is the orthonormal
/// eigenvector for eigenvalues[j]. residual is max_j ||A v_j - lambda_j v_j||.
/// Construction validates orthonormality (defect <= 1e-10), the residual
/// bound (<= 1e-9 * max(1, |lambda_1|)) and the zero trace of A.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    double residual = 0.0;
};

/// Cyclic Jacobi rotations on the (symmetric) adjacency matrix. Sweeps run
/// until the off-diagonal Frobenius norm drops below 1e-12 * max(1, ||A||_F);
/// more than 100 sweeps is reported as a failure. Deterministic: a fixed
/// graph always yields bit-identical output.
SpectralDecomposition spectral_decomposition(const Graph& g);

}  // namespace centrascope

#endif  // CENTRASCOPE_SPECTRAL_HPP
