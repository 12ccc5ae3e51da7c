#include "grwscmf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace grwscmf {

void RelevanceGraph::validate() const {
    auto check_sym = [](const Matrix& a, const char* what) {
        if (a != a.transpose().eval())
            throw std::runtime_error(std::string(what) + " is not symmetric");
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, i) != 0.0)
                throw std::runtime_error(std::string(what) +
                                         " has a nonzero diagonal");
    };
    check_sym(A_features, "A_features");
    check_sym(A_labels, "A_labels");

    auto check_range = [](const Matrix& a, const char* what) {
        if (a.minCoeff() < 0.0 || a.maxCoeff() > 1.0)
            throw std::runtime_error(std::string(what) +
                                     " has entries outside [0,1]");
    };
    check_range(A_features, "A_features");
    check_range(A_labels, "A_labels");
    check_range(MI, "MI");

    auto check_stochastic = [](const Matrix& p, const char* what) {
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
            if (p.row(i).minCoeff() < 0.0)
                throw std::runtime_error(std::string(what) +
                                         " has a negative entry");
            if (std::abs(p.row(i).sum() - 1.0) > 1e-9)
                throw std::runtime_error(std::string(what) + " row " +
                                         std::to_string(i) +
                                         " does not sum to 1");
        }
    };
    check_stochastic(P_features, "P_features");
    check_stochastic(P_labels, "P_labels");
    check_stochastic(P_fl, "P_fl");
    check_stochastic(P_lf, "P_lf");
}

Matrix gaussian_adjacency(const Matrix& columns, double sigma) {
    if (sigma <= 0.0)
        throw std::invalid_argument("sigma must be positive, got " +
                                    std::to_string(sigma));
    const Eigen::Index m = columns.cols();
    if (m < 2)
        throw std::invalid_argument("need at least 2 columns, got " +
                                    std::to_string(m));

    Matrix a = Matrix::Zero(m, m);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const double d2 = (columns.col(i) - columns.col(j)).squaredNorm();
            const double w = std::exp(-d2 * inv);
            a(i, j) = w;
            a(j, i) = w;  // mirrored, so symmetry is exact
        }
    }
    return a;
}

double median_pairwise_distance(const Matrix& columns) {
    const Eigen::Index m = columns.cols();
    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const double d = (columns.col(i) - columns.col(j)).norm();
            if (d > 0.0) dists.push_back(d);
        }
    if (dists.empty()) return 1.0;
    auto mid = dists.begin() + static_cast<std::ptrdiff_t>(dists.size() / 2);
    std::nth_element(dists.begin(), mid, dists.end());
    return *mid;
}

std::vector<int> equal_frequency_bins(const Vector& column, int bins) {
    if (bins < 2) throw std::invalid_argument("bins must be at least 2");
    const Eigen::Index n = column.size();
    if (n < 2) throw std::invalid_argument("need at least 2 samples");

    std::vector<double> sorted(column.data(), column.data() + n);
    std::sort(sorted.begin(), sorted.end());

    // interior boundaries: first value of each bin q = 1..bins-1
    std::vector<double> bounds;
    bounds.reserve(static_cast<std::size_t>(bins - 1));
    for (int q = 1; q < bins; ++q) {
        const auto cut = static_cast<std::size_t>(
            static_cast<long long>(q) * n / bins);
        bounds.push_back(sorted[cut]);
    }

    std::vector<int> out(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        int b = 0;
        for (double t : bounds) {
            if (column[i] >= t) ++b;
        }
        out[static_cast<std::size_t>(i)] = b;
    }
    return out;
}

namespace {

/// MI in nats from a joint count table (rows: feature bins, cols: label
/// values). Cells with zero joint count contribute nothing.
double mi_from_counts(const std::vector<std::vector<long>>& joint, long n) {
    const std::size_t rows = joint.size();
    const std::size_t cols = joint.empty() ? 0 : joint[0].size();
    std::vector<long> row_sum(rows, 0), col_sum(cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            row_sum[r] += joint[r][c];
            col_sum[c] += joint[r][c];
        }
    double mi = 0.0;
    const double dn = static_cast<double>(n);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (joint[r][c] == 0) continue;
            const double pxy = static_cast<double>(joint[r][c]) / dn;
            const double px = static_cast<double>(row_sum[r]) / dn;
            const double py = static_cast<double>(col_sum[c]) / dn;
            mi += pxy * std::log(pxy / (px * py));
        }
    return mi;
}

}  // namespace

Matrix estimate_mi_raw(const Matrix& x, const Matrix& y, int bins) {
    if (bins < 2) throw std::invalid_argument("bins must be at least 2");
    const Eigen::Index n = x.rows();
    if (n < 2) throw std::invalid_argument("need at least 2 samples");
    if (y.rows() != n)
        throw std::invalid_argument("feature/label row count mismatch");

    const Eigen::Index d = x.cols();
    const Eigen::Index c = y.cols();
    Matrix mi(d, c);

    for (Eigen::Index i = 0; i < d; ++i) {
        const std::vector<int> fb = equal_frequency_bins(x.col(i), bins);
        for (Eigen::Index j = 0; j < c; ++j) {
            std::vector<std::vector<long>> joint(
                static_cast<std::size_t>(bins), std::vector<long>(2, 0));
            for (Eigen::Index s = 0; s < n; ++s) {
                const int lbl = y(s, j) != 0.0 ? 1 : 0;
                ++joint[static_cast<std::size_t>(
                    fb[static_cast<std::size_t>(s)])][
                    static_cast<std::size_t>(lbl)];
            }
            mi(i, j) = mi_from_counts(joint, static_cast<long>(n));
        }
    }
    return mi;
}

Matrix estimate_mi(const Matrix& x, const Matrix& y, int bins) {
    return min_max_normalize(estimate_mi_raw(x, y, bins));
}

Matrix row_normalize(const Matrix& m) {
    if (m.minCoeff() < 0.0)
        throw std::invalid_argument("row_normalize: negative entry");
    Matrix out(m.rows(), m.cols());
    const double uniform = 1.0 / static_cast<double>(m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double s = m.row(i).sum();
        if (s > 0.0) {
            out.row(i) = m.row(i) / s;
        } else {
            out.row(i).setConstant(uniform);
        }
    }
    return out;
}

Matrix min_max_normalize(const Matrix& m) {
    const double lo = m.minCoeff();
    const double hi = m.maxCoeff();
    if (hi > lo) return (m.array() - lo) / (hi - lo);
    return Matrix::Zero(m.rows(), m.cols());
}

RelevanceGraph build_graph(const Matrix& x, const Matrix& y, int bins,
                           const SigmaPolicy& sigma) {
    RelevanceGraph g;
    g.sigma_features =
        sigma.use_median ? median_pairwise_distance(x) : sigma.fixed_value;
    g.sigma_labels =
        sigma.use_median ? median_pairwise_distance(y) : sigma.fixed_value;

    g.A_features = gaussian_adjacency(x, g.sigma_features);
    g.A_labels = gaussian_adjacency(y, g.sigma_labels);
    g.MI = estimate_mi(x, y, bins);

    g.P_features = row_normalize(g.A_features);
    g.P_labels = row_normalize(g.A_labels);
    g.P_fl = row_normalize(g.MI);
    g.P_lf = row_normalize(g.MI.transpose());
    return g;
}

}  // namespace grwscmf
