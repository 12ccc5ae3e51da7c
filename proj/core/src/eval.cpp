#include "grwscmf/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grwscmf {

std::string classifier_name(Classifier c) {
    return c == Classifier::knn3 ? "knn3" : "mlknn10";
}

Classifier parse_classifier(const std::string& name) {
    if (name == "knn3") return Classifier::knn3;
    if (name == "mlknn10") return Classifier::mlknn10;
    throw std::invalid_argument("unknown classifier '" + name +
                                "' (expected knn3 or mlknn10)");
}

namespace {

void check_selected(const std::vector<int>& selected, Eigen::Index d) {
    if (selected.empty())
        throw std::invalid_argument("selected feature list is empty");
    for (int idx : selected)
        if (idx < 0 || idx >= d)
            throw std::invalid_argument("selected feature index " +
                                        std::to_string(idx) +
                                        " out of range");
}

/// Squared Euclidean distance over the selected columns, accumulated in a
/// fixed order so results match a naive reference loop exactly.
double selected_sq_distance(const Matrix& a, Eigen::Index ia, const Matrix& b,
                            Eigen::Index ib, const std::vector<int>& selected) {
    double s = 0.0;
    for (int j : selected) {
        const double diff = a(ia, j) - b(ib, j);
        s += diff * diff;
    }
    return s;
}

/// Indices of the k nearest rows of `train` to row `iq` of `query`,
/// distance ties broken by ascending training index. `skip` excludes one
/// training row (leave-one-out); pass -1 to keep all.
std::vector<int> k_nearest(const Matrix& train, const Matrix& query,
                           Eigen::Index iq, int k,
                           const std::vector<int>& selected, int skip) {
    const Eigen::Index n = train.rows();
    std::vector<std::pair<double, int>> dist;
    dist.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<int>(i) == skip) continue;
        dist.emplace_back(selected_sq_distance(query, iq, train, i, selected),
                          static_cast<int>(i));
    }
    const auto kth = dist.begin() + k;
    std::partial_sort(dist.begin(), kth, dist.end());
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] =
        dist[static_cast<std::size_t>(i)].second;
    return out;
}

}  // namespace

PredictionSet knn_predict(const Matrix& x_train, const Matrix& y_train,
                          const Matrix& x_test, int k,
                          const std::vector<int>& selected) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k > x_train.rows())
        throw std::invalid_argument("k exceeds the number of training points");
    check_selected(selected, x_train.cols());

    const Eigen::Index n_te = x_test.rows();
    const Eigen::Index c = y_train.cols();
    PredictionSet out;
    out.Y_pred = Matrix::Zero(n_te, c);
    out.Y_scores = Matrix::Zero(n_te, c);

    for (Eigen::Index t = 0; t < n_te; ++t) {
        const auto nbrs = k_nearest(x_train, x_test, t, k, selected, -1);
        for (Eigen::Index j = 0; j < c; ++j) {
            int votes = 0;
            for (int nb : nbrs)
                if (y_train(nb, j) != 0.0) ++votes;
            out.Y_scores(t, j) =
                static_cast<double>(votes) / static_cast<double>(k);
            out.Y_pred(t, j) = 2 * votes > k ? 1.0 : 0.0;  // strict majority
        }
    }
    return out;
}

Vector mlknn_priors(const Matrix& y_train, double smoothing) {
    if (!(smoothing > 0.0))
        throw std::invalid_argument("smoothing must be positive");
    const double n = static_cast<double>(y_train.rows());
    Vector prior(y_train.cols());
    for (Eigen::Index j = 0; j < y_train.cols(); ++j)
        prior[j] = (smoothing + y_train.col(j).sum()) / (2.0 * smoothing + n);
    return prior;
}

PredictionSet mlknn_predict(const Matrix& x_train, const Matrix& y_train,
                            const Matrix& x_test, int k, double smoothing,
                            const std::vector<int>& selected) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k > x_train.rows() - 1)
        throw std::invalid_argument(
            "k exceeds the number of leave-one-out training points");
    check_selected(selected, x_train.cols());

    const Eigen::Index n_tr = x_train.rows();
    const Eigen::Index n_te = x_test.rows();
    const Eigen::Index c = y_train.cols();
    const Vector prior = mlknn_priors(y_train, smoothing);

    // leave-one-out neighbor label counts on the training half
    Eigen::MatrixXi counts(n_tr, c);
    for (Eigen::Index i = 0; i < n_tr; ++i) {
        const auto nbrs = k_nearest(x_train, x_train, i, k, selected,
                                    static_cast<int>(i));
        for (Eigen::Index j = 0; j < c; ++j) {
            int m = 0;
            for (int nb : nbrs)
                if (y_train(nb, j) != 0.0) ++m;
            counts(i, j) = m;
        }
    }

    // count-likelihoods P(m | H_j) and P(m | not H_j), Laplace smoothed
    Matrix like_pos(c, k + 1), like_neg(c, k + 1);
    for (Eigen::Index j = 0; j < c; ++j) {
        std::vector<long> c_pos(static_cast<std::size_t>(k) + 1, 0);
        std::vector<long> c_neg(static_cast<std::size_t>(k) + 1, 0);
        for (Eigen::Index i = 0; i < n_tr; ++i) {
            const auto m = static_cast<std::size_t>(counts(i, j));
            if (y_train(i, j) != 0.0)
                ++c_pos[m];
            else
                ++c_neg[m];
        }
        const double tot_pos =
            std::accumulate(c_pos.begin(), c_pos.end(), 0.0);
        const double tot_neg =
            std::accumulate(c_neg.begin(), c_neg.end(), 0.0);
        for (int m = 0; m <= k; ++m) {
            like_pos(j, m) =
                (smoothing + static_cast<double>(
                                 c_pos[static_cast<std::size_t>(m)])) /
                (smoothing * (k + 1) + tot_pos);
            like_neg(j, m) =
                (smoothing + static_cast<double>(
                                 c_neg[static_cast<std::size_t>(m)])) /
                (smoothing * (k + 1) + tot_neg);
        }
    }

    PredictionSet out;
    out.Y_pred = Matrix::Zero(n_te, c);
    out.Y_scores = Matrix::Zero(n_te, c);
    for (Eigen::Index t = 0; t < n_te; ++t) {
        const auto nbrs = k_nearest(x_train, x_test, t, k, selected, -1);
        for (Eigen::Index j = 0; j < c; ++j) {
            int m = 0;
            for (int nb : nbrs)
                if (y_train(nb, j) != 0.0) ++m;
            const double p_pos = prior[j] * like_pos(j, m);
            const double p_neg = (1.0 - prior[j]) * like_neg(j, m);
            out.Y_pred(t, j) = p_pos > p_neg ? 1.0 : 0.0;
            out.Y_scores(t, j) = p_pos / (p_pos + p_neg);
        }
    }
    return out;
}

namespace {

void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("prediction/truth shape mismatch");
}

}  // namespace

double micro_f1(const Matrix& y_true, const Matrix& y_pred) {
    check_same_shape(y_true, y_pred);
    long tp = 0, fp = 0, fn = 0;
    for (Eigen::Index i = 0; i < y_true.rows(); ++i)
        for (Eigen::Index j = 0; j < y_true.cols(); ++j) {
            const bool t = y_true(i, j) != 0.0;
            const bool p = y_pred(i, j) != 0.0;
            if (t && p) ++tp;
            if (!t && p) ++fp;
            if (t && !p) ++fn;
        }
    const double denom = static_cast<double>(2 * tp + fp + fn);
    return denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
}

double macro_f1(const Matrix& y_true, const Matrix& y_pred) {
    check_same_shape(y_true, y_pred);
    double sum = 0.0;
    for (Eigen::Index j = 0; j < y_true.cols(); ++j) {
        long tp = 0, fp = 0, fn = 0;
        for (Eigen::Index i = 0; i < y_true.rows(); ++i) {
            const bool t = y_true(i, j) != 0.0;
            const bool p = y_pred(i, j) != 0.0;
            if (t && p) ++tp;
            if (!t && p) ++fp;
            if (t && !p) ++fn;
        }
        const double denom = static_cast<double>(2 * tp + fp + fn);
        sum += denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
    }
    return sum / static_cast<double>(y_true.cols());
}

double hamming_loss(const Matrix& y_true, const Matrix& y_pred) {
    check_same_shape(y_true, y_pred);
    long wrong = 0;
    for (Eigen::Index i = 0; i < y_true.rows(); ++i)
        for (Eigen::Index j = 0; j < y_true.cols(); ++j)
            if ((y_true(i, j) != 0.0) != (y_pred(i, j) != 0.0)) ++wrong;
    return static_cast<double>(wrong) /
           static_cast<double>(y_true.rows() * y_true.cols());
}

double zero_one_loss(const Matrix& y_true, const Matrix& y_pred) {
    check_same_shape(y_true, y_pred);
    long wrong_rows = 0;
    for (Eigen::Index i = 0; i < y_true.rows(); ++i) {
        for (Eigen::Index j = 0; j < y_true.cols(); ++j) {
            if ((y_true(i, j) != 0.0) != (y_pred(i, j) != 0.0)) {
                ++wrong_rows;
                break;
            }
        }
    }
    return static_cast<double>(wrong_rows) /
           static_cast<double>(y_true.rows());
}

std::vector<int> protocol_feature_counts(int d) {
    std::vector<int> counts;
    if (d < 100) {
        // small datasets: every prefix size
        counts.resize(static_cast<std::size_t>(d));
        std::iota(counts.begin(), counts.end(), 1);
        return counts;
    }
    for (int p = 1; p <= 20; ++p) {
        const int m = std::max(
            1, static_cast<int>(std::lround(p * d / 100.0)));
        if (counts.empty() || counts.back() != m)
            counts.push_back(std::min(m, d));
    }
    return counts;
}

EvalReport protocol_eval(const MultiLabelDataset& ds,
                         const FeatureRanking& ranking, Classifier clf) {
    const int d = static_cast<int>(ds.feature_count());
    if (ranking.feature_count() != d)
        throw std::invalid_argument(
            "ranking covers " + std::to_string(ranking.feature_count()) +
            " features, dataset has " + std::to_string(d));
    {
        std::vector<bool> seen(static_cast<std::size_t>(d), false);
        for (int idx : ranking.order) {
            if (idx < 0 || idx >= d || seen[static_cast<std::size_t>(idx)])
                throw std::invalid_argument("ranking is not a permutation");
            seen[static_cast<std::size_t>(idx)] = true;
        }
    }

    EvalReport report;
    for (int m : protocol_feature_counts(d)) {
        const std::vector<int> selected(ranking.order.begin(),
                                        ranking.order.begin() + m);
        const PredictionSet pred =
            clf == Classifier::knn3
                ? knn_predict(ds.X_train, ds.Y_train, ds.X_test, 3, selected)
                : mlknn_predict(ds.X_train, ds.Y_train, ds.X_test, 10, 1.0,
                                selected);
        StepRecord rec;
        rec.feature_count = m;
        rec.micro_f1 = micro_f1(ds.Y_test, pred.Y_pred);
        rec.macro_f1 = macro_f1(ds.Y_test, pred.Y_pred);
        rec.hamming_loss = hamming_loss(ds.Y_test, pred.Y_pred);
        rec.zero_one_loss = zero_one_loss(ds.Y_test, pred.Y_pred);
        report.steps.push_back(rec);
    }

    auto summarize = [&](auto field) {
        MetricSummary s;
        const double n = static_cast<double>(report.steps.size());
        for (const auto& r : report.steps) s.mean += field(r);
        s.mean /= n;
        for (const auto& r : report.steps) {
            const double dv = field(r) - s.mean;
            s.stddev += dv * dv;
        }
        s.stddev = std::sqrt(s.stddev / n);
        return s;
    };
    report.micro_f1 = summarize([](const StepRecord& r) { return r.micro_f1; });
    report.macro_f1 = summarize([](const StepRecord& r) { return r.macro_f1; });
    report.hamming_loss =
        summarize([](const StepRecord& r) { return r.hamming_loss; });
    report.zero_one_loss =
        summarize([](const StepRecord& r) { return r.zero_one_loss; });
    return report;
}

}  // namespace grwscmf
