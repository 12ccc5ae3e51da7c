/**
 * Dataset ingestion, feature scaling, and feature ranking.
 */

#pragma once

#include "grwscmf/types.hpp"

#include <string>
#include <vector>

namespace grwscmf {

/// Loads a train/test pair of delimited text files. Each row holds d
/// feature cells followed by `label_count` binary label cells; the split
/// point is total_cols - label_count for both halves. Throws
/// std::invalid_argument when label_count leaves no feature columns and
/// std::runtime_error (with line numbers where applicable) on malformed
/// or non-binary input.
MultiLabelDataset load_dataset(const std::string& train_path,
                               const std::string& test_path, int label_count);

/// Centers each column to mean 0 and scales to unit (population) standard
/// deviation. Constant columns become all-zero columns.
Matrix column_standardize(const Matrix& x);

/// Standardizes both halves of the dataset using the training half's
/// column statistics, so test features live on the training scale.
void standardize_features(MultiLabelDataset& ds);

/// Rescales each column to [0, 1] by its own min/max; constant columns map
/// to all zeros. Used to feed non-negative inputs to the factorization.
Matrix column_min_max_scale(const Matrix& x);

/// Stable descending sort of feature indices by score, ties broken by
/// ascending index. Throws std::invalid_argument on NaN scores.
FeatureRanking rank_features(const std::vector<double>& scores);

}  // namespace grwscmf
