/**
 * Feature-label composite graph.
 *
 * Vertices are the d feature columns and c label columns. Feature-feature
 * and label-label edges carry Gaussian-kernel similarities; feature-label
 * edges carry min-max-normalized mutual information. Row-normalizing those
 * weight matrices yields the four transition matrices used by the walker.
 */

#pragma once

#include "grwscmf/types.hpp"

#include <vector>

namespace grwscmf {

/// Kernel scale selection: median of nonzero pairwise column distances
/// (default) or a fixed user-supplied value.
struct SigmaPolicy {
    bool use_median = true;
    double fixed_value = 1.0;

    static SigmaPolicy median() { return {}; }
    static SigmaPolicy fixed(double value) { return {false, value}; }
};

struct RelevanceGraph {
    Matrix A_features;  // d x d, symmetric, zero diagonal, entries in [0,1]
    Matrix A_labels;    // c x c, same shape constraints
    Matrix MI;          // d x c, min-max normalized to [0,1]
    Matrix P_features;  // d x d, row-stochastic
    Matrix P_labels;    // c x c
    Matrix P_fl;        // d x c, feature -> label transitions
    Matrix P_lf;        // c x d, label -> feature transitions
    double sigma_features = 0.0;
    double sigma_labels = 0.0;

    Eigen::Index feature_count() const { return A_features.rows(); }
    Eigen::Index label_count() const { return A_labels.rows(); }

    /// Checks symmetry, zero diagonals, [0,1] ranges, and row sums within
    /// 1e-9 of 1. Throws std::runtime_error on violation.
    void validate() const;
};

/// Gaussian-kernel similarity between the columns of `columns` (an n x m
/// matrix): exp(-||v_i - v_j||^2 / (2 sigma^2)) off the diagonal, exact
/// symmetry, diagonal forced to zero. Requires m >= 2 and sigma > 0.
Matrix gaussian_adjacency(const Matrix& columns, double sigma);

/// Median of the nonzero pairwise Euclidean distances between columns;
/// returns 1.0 when every pair of columns is identical.
double median_pairwise_distance(const Matrix& columns);

/// Equal-frequency bin index per sample for one column. Boundaries are the
/// interior quantile values, so equal values always share a bin; heavily
/// tied columns may occupy fewer than `bins` bins.
std::vector<int> equal_frequency_bins(const Vector& column, int bins);

/// Mutual information in nats between every (feature, label) pair, features
/// discretized into `bins` equal-frequency bins, labels taken as binary.
/// Zero-probability cells contribute zero. Requires n >= 2, bins >= 2.
Matrix estimate_mi_raw(const Matrix& x, const Matrix& y, int bins);

/// estimate_mi_raw followed by global min-max normalization to [0,1].
Matrix estimate_mi(const Matrix& x, const Matrix& y, int bins);

/// Divides each row by its sum; all-zero rows become uniform distributions.
/// Throws std::invalid_argument on negative entries.
Matrix row_normalize(const Matrix& m);

/// (m - min) / (max - min) over the whole matrix; constant matrices map to
/// all zeros.
Matrix min_max_normalize(const Matrix& m);

/// Assembles the composite graph from a feature matrix and a binary label
/// matrix. P_lf is the row normalization of MI^T, computed independently of
/// P_fl so both are stochastic.
RelevanceGraph build_graph(const Matrix& x, const Matrix& y, int bins,
                           const SigmaPolicy& sigma = SigmaPolicy::median());

}  // namespace grwscmf
