#include "grwscmf/dataset.hpp"

#include "grwscmf/matrix_io.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace grwscmf {

void MultiLabelDataset::validate() const {
    if (X_train.rows() < 1 || X_test.rows() < 1)
        throw std::runtime_error("dataset '" + name +
                                 "': each half needs at least one sample");
    if (X_train.cols() < 1)
        throw std::runtime_error("dataset '" + name + "': no feature columns");
    if (Y_train.cols() < 2)
        throw std::runtime_error("dataset '" + name +
                                 "': needs at least two label columns");
    if (X_train.cols() != X_test.cols())
        throw std::runtime_error("dataset '" + name +
                                 "': train/test feature width mismatch");
    if (Y_train.cols() != Y_test.cols())
        throw std::runtime_error("dataset '" + name +
                                 "': train/test label width mismatch");
    if (Y_train.rows() != X_train.rows() || Y_test.rows() != X_test.rows())
        throw std::runtime_error("dataset '" + name +
                                 "': feature/label row count mismatch");

    auto check_binary = [&](const Matrix& y, const char* half) {
        for (Eigen::Index i = 0; i < y.rows(); ++i)
            for (Eigen::Index j = 0; j < y.cols(); ++j)
                if (y(i, j) != 0.0 && y(i, j) != 1.0)
                    throw std::runtime_error(
                        "dataset '" + name + "': non-binary label in " + half +
                        " at row " + std::to_string(i) + ", label " +
                        std::to_string(j));
    };
    check_binary(Y_train, "train");
    check_binary(Y_test, "test");

    if (!X_train.allFinite() || !X_test.allFinite())
        throw std::runtime_error("dataset '" + name +
                                 "': non-finite feature value");
}

namespace {

std::string path_stem(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base =
        slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

MultiLabelDataset load_dataset(const std::string& train_path,
                               const std::string& test_path,
                               int label_count) {
    if (label_count < 2)
        throw std::invalid_argument("label_count must be at least 2, got " +
                                    std::to_string(label_count));

    Matrix train = read_csv_matrix(train_path);
    Matrix test = read_csv_matrix(test_path);

    if (train.cols() != test.cols())
        throw std::runtime_error("train/test column count mismatch: " +
                                 std::to_string(train.cols()) + " vs " +
                                 std::to_string(test.cols()));
    if (label_count >= train.cols())
        throw std::invalid_argument(
            "label_count " + std::to_string(label_count) +
            " leaves no feature columns (total " +
            std::to_string(train.cols()) + ")");

    const Eigen::Index d = train.cols() - label_count;

    MultiLabelDataset ds;
    ds.name = path_stem(train_path);
    ds.X_train = train.leftCols(d);
    ds.Y_train = train.rightCols(label_count);
    ds.X_test = test.leftCols(d);
    ds.Y_test = test.rightCols(label_count);
    ds.validate();
    return ds;
}

Matrix column_standardize(const Matrix& x) {
    if (x.size() == 0) throw std::invalid_argument("empty matrix");
    Matrix out(x.rows(), x.cols());
    const double n = static_cast<double>(x.rows());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double mean = x.col(j).mean();
        const double var = (x.col(j).array() - mean).square().sum() / n;
        const double sd = std::sqrt(var);
        if (sd == 0.0) {
            out.col(j).setZero();
        } else {
            out.col(j) = (x.col(j).array() - mean) / sd;
        }
    }
    return out;
}

void standardize_features(MultiLabelDataset& ds) {
    const double n = static_cast<double>(ds.X_train.rows());
    for (Eigen::Index j = 0; j < ds.X_train.cols(); ++j) {
        const double mean = ds.X_train.col(j).mean();
        const double var =
            (ds.X_train.col(j).array() - mean).square().sum() / n;
        const double sd = std::sqrt(var);
        if (sd == 0.0) {
            ds.X_train.col(j).setZero();
            ds.X_test.col(j).setZero();
        } else {
            ds.X_train.col(j) = (ds.X_train.col(j).array() - mean) / sd;
            ds.X_test.col(j) = (ds.X_test.col(j).array() - mean) / sd;
        }
    }
}

Matrix column_min_max_scale(const Matrix& x) {
    Matrix out(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double lo = x.col(j).minCoeff();
        const double hi = x.col(j).maxCoeff();
        if (hi > lo) {
            out.col(j) = (x.col(j).array() - lo) / (hi - lo);
        } else {
            out.col(j).setZero();
        }
    }
    return out;
}

FeatureRanking rank_features(const std::vector<double>& scores) {
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (std::isnan(scores[i]))
            throw std::invalid_argument("NaN score at feature " +
                                        std::to_string(i));

    FeatureRanking r;
    r.scores = scores;
    r.order.resize(scores.size());
    std::iota(r.order.begin(), r.order.end(), 0);
    std::stable_sort(r.order.begin(), r.order.end(), [&](int a, int b) {
        if (scores[static_cast<std::size_t>(a)] !=
            scores[static_cast<std::size_t>(b)])
            return scores[static_cast<std::size_t>(a)] >
                   scores[static_cast<std::size_t>(b)];
        return a < b;
    });
    return r;
}

}  // namespace grwscmf
