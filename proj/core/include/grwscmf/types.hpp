/**
 * Core dense types shared across the library.
 *
 * All matrices are dense, double precision. Feature matrices are n x d
 * (samples by features), label matrices n x c with entries in {0,1}.
 */

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace grwscmf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Paired train/test multi-label data. Feature columns are shared between
/// the halves; every label entry is 0 or 1.
struct MultiLabelDataset {
    std::string name;
    Matrix X_train;
    Matrix Y_train;
    Matrix X_test;
    Matrix Y_test;

    Eigen::Index sample_count_train() const { return X_train.rows(); }
    Eigen::Index sample_count_test() const { return X_test.rows(); }
    Eigen::Index feature_count() const { return X_train.cols(); }
    Eigen::Index label_count() const { return Y_train.cols(); }

    /// Throws std::runtime_error when a structural invariant is violated
    /// (shape mismatch, non-binary label, non-finite value, empty half).
    void validate() const;
};

/// Feature indices sorted by descending score, ties broken by ascending
/// original index. scores[i] is the score of feature i (not of order[i]).
struct FeatureRanking {
    std::vector<int> order;
    std::vector<double> scores;

    int feature_count() const { return static_cast<int>(order.size()); }
};

}  // namespace grwscmf
