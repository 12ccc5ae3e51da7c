/**
 * Multi-label classifiers (kNN, MLkNN) and evaluation metrics, plus the
 * top-k% ranked-feature evaluation protocol.
 */

#pragma once

#include "grwscmf/types.hpp"

#include <string>
#include <vector>

namespace grwscmf {

struct PredictionSet {
    Matrix Y_pred;    // n_test x c, entries in {0,1}
    Matrix Y_scores;  // n_test x c, classifier confidences
};

struct StepRecord {
    int feature_count;
    double micro_f1;
    double macro_f1;
    double hamming_loss;
    double zero_one_loss;
};

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0;  // population std over steps
};

struct EvalReport {
    std::vector<StepRecord> steps;
    MetricSummary micro_f1;
    MetricSummary macro_f1;
    MetricSummary hamming_loss;
    MetricSummary zero_one_loss;
};

enum class Classifier { knn3, mlknn10 };

std::string classifier_name(Classifier c);
Classifier parse_classifier(const std::string& name);

/// Per-label majority vote over the k nearest training points (Euclidean
/// distance restricted to `selected` columns). A label is predicted 1 iff
/// strictly more than half of the neighbors carry it; distance ties break
/// by ascending training index. Throws when k > n_train or k < 1.
PredictionSet knn_predict(const Matrix& x_train, const Matrix& y_train,
                          const Matrix& x_test, int k,
                          const std::vector<int>& selected);

/// Per-label prior probabilities (s + #positives) / (2s + n_train).
Vector mlknn_priors(const Matrix& y_train, double smoothing);

/// MLkNN: MAP estimation from neighbor label counts. Priors and the
/// count-likelihoods are estimated on the training half (leave-one-out
/// neighbor counts, Laplace smoothing `smoothing`); a test label is 1 when
/// the positive posterior strictly exceeds the negative one. Y_scores holds
/// the normalized positive posterior.
PredictionSet mlknn_predict(const Matrix& x_train, const Matrix& y_train,
                            const Matrix& x_test, int k, double smoothing,
                            const std::vector<int>& selected);

double micro_f1(const Matrix& y_true, const Matrix& y_pred);
double macro_f1(const Matrix& y_true, const Matrix& y_pred);
double hamming_loss(const Matrix& y_true, const Matrix& y_pred);
double zero_one_loss(const Matrix& y_true, const Matrix& y_pred);

/// Feature counts evaluated by the protocol: for d >= 100, the deduplicated
/// counts max(1, round(p*d/100)) for p = 1..20; for small d (< 100), every
/// count 1..d.
std::vector<int> protocol_feature_counts(int d);

/// Evaluates the ranking prefix at each protocol feature count with the
/// chosen classifier (kNN with k=3 or MLkNN with k=10, smoothing 1) and
/// aggregates mean and population std over the steps.
EvalReport protocol_eval(const MultiLabelDataset& ds,
                         const FeatureRanking& ranking, Classifier clf);

}  // namespace grwscmf
