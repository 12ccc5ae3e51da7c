/**
 * Shared helpers for the test suites: seeded random fixtures and a toy
 * composite-graph builder.
 */

#pragma once

#include "grwscmf/graph.hpp"
#include "grwscmf/rng.hpp"
#include "grwscmf/types.hpp"

namespace testutil {

inline grwscmf::Matrix random_matrix(Eigen::Index rows, Eigen::Index cols,
                                     std::uint64_t seed, double lo = 0.0,
                                     double hi = 1.0) {
    grwscmf::Xoshiro256ss rng(seed);
    grwscmf::Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = lo + (hi - lo) * rng.next_double();
    return m;
}

inline grwscmf::Matrix random_binary_matrix(Eigen::Index rows,
                                            Eigen::Index cols,
                                            std::uint64_t seed,
                                            double p = 0.5) {
    grwscmf::Xoshiro256ss rng(seed);
    grwscmf::Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = rng.next_double() < p ? 1.0 : 0.0;
    return m;
}

/// Composite graph with the given feature-label weight matrix; adjacencies
/// are uniform off the diagonal, transitions are the row normalizations.
inline grwscmf::RelevanceGraph toy_graph(const grwscmf::Matrix& mi) {
    using grwscmf::Matrix;
    const Eigen::Index d = mi.rows(), c = mi.cols();
    grwscmf::RelevanceGraph g;
    g.A_features = Matrix::Constant(d, d, 0.5);
    g.A_features.diagonal().setZero();
    g.A_labels = Matrix::Constant(c, c, 0.5);
    g.A_labels.diagonal().setZero();
    g.MI = mi;
    g.P_features = grwscmf::row_normalize(g.A_features);
    g.P_labels = grwscmf::row_normalize(g.A_labels);
    g.P_fl = grwscmf::row_normalize(g.MI);
    g.P_lf = grwscmf::row_normalize(g.MI.transpose());
    g.sigma_features = 1.0;
    g.sigma_labels = 1.0;
    return g;
}

}  // namespace testutil
