#include "grwscmf/factorization.hpp"

#include "grwscmf/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace grwscmf {

namespace {
constexpr double kDenominatorGuard = 1e-12;

void check_shapes(const Matrix& x, const Matrix& y, const Matrix& r_w,
                  const FactorizationState& s) {
    const Eigen::Index n = x.rows(), d = x.cols(), c = y.cols();
    if (y.rows() != n)
        throw std::invalid_argument("X and Y row counts differ");
    if (r_w.rows() != d || r_w.cols() != c)
        throw std::invalid_argument("R_w must be d x c");
    if (s.V.rows() != n || s.Q.cols() != d || s.B.cols() != c ||
        s.V.cols() != s.Q.rows() || s.Q.rows() != s.B.rows())
        throw std::invalid_argument("factor shapes inconsistent with data");
}

double l21_norm(const Matrix& w) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < w.rows(); ++i) sum += w.row(i).norm();
    return sum;
}

}  // namespace

int Hyperparams::resolve_k(Eigen::Index label_count) const {
    if (k > 0) return k;
    return static_cast<int>(std::min<Eigen::Index>(label_count, 10));
}

void Hyperparams::validate() const {
    if (alpha < 0 || beta < 0 || gamma < 0 || delta < 0 || epsilon < 0)
        throw std::invalid_argument("objective weights must be non-negative");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!(d_smoothing > 0.0))
        throw std::invalid_argument("d_smoothing must be positive");
}

double objective(const Matrix& x, const Matrix& y, const Matrix& r_w,
                 const FactorizationState& s, const Hyperparams& hp) {
    check_shapes(x, y, r_w, s);
    const Matrix w = s.Q.transpose() * s.B;
    double value = hp.alpha * (x - s.V * s.Q).squaredNorm();
    value += hp.beta * (y - s.V * s.B).squaredNorm();
    value += hp.gamma * (r_w - w).squaredNorm();
    value += hp.delta *
             (x * s.Q.transpose() - y * s.B.transpose()).squaredNorm();
    value += hp.epsilon * l21_norm(w);
    value += s.V.squaredNorm();
    return value;
}

Vector update_D(const Matrix& q, const Matrix& b, double smoothing) {
    if (!(smoothing > 0.0))
        throw std::invalid_argument("smoothing must be positive");
    const Matrix w = q.transpose() * b;
    Vector d(w.rows());
    for (Eigen::Index i = 0; i < w.rows(); ++i)
        d[i] = 1.0 / (2.0 * std::sqrt(w.row(i).squaredNorm() + smoothing));
    return d;
}

Matrix update_V(const FactorizationState& s, const Matrix& x, const Matrix& y,
                const Hyperparams& hp) {
    Matrix num = hp.alpha * (x * s.Q.transpose()) +
                 hp.beta * (y * s.B.transpose());
    Matrix den = hp.alpha * (s.V * (s.Q * s.Q.transpose())) +
                 hp.beta * (s.V * (s.B * s.B.transpose())) + s.V;
    return s.V.array() * num.array().max(0.0) /
           (den.array() + kDenominatorGuard);
}

Matrix update_Q(const FactorizationState& s, const Matrix& x, const Matrix& y,
                const Matrix& r_w, const Hyperparams& hp) {
    Matrix num = hp.alpha * (s.V.transpose() * x) +
                 hp.gamma * (s.B * r_w.transpose()) +
                 hp.delta * (s.B * (y.transpose() * x));
    const Matrix bbt = s.B * s.B.transpose();
    Matrix den = hp.alpha * ((s.V.transpose() * s.V) * s.Q) +
                 hp.gamma * (bbt * s.Q) +
                 hp.epsilon * ((bbt * s.Q) * s.D.asDiagonal()) +
                 hp.delta * ((s.Q * x.transpose()) * x);
    return s.Q.array() * num.array().max(0.0) /
           (den.array() + kDenominatorGuard);
}

Matrix update_B(const FactorizationState& s, const Matrix& x, const Matrix& y,
                const Matrix& r_w, const Hyperparams& hp) {
    Matrix num = hp.beta * (s.V.transpose() * y) +
                 hp.gamma * (s.Q * r_w) +
                 hp.delta * (s.Q * (x.transpose() * y));
    Matrix den = hp.beta * ((s.V.transpose() * s.V) * s.B) +
                 hp.gamma * ((s.Q * s.Q.transpose()) * s.B) +
                 hp.epsilon *
                     ((s.Q * s.D.asDiagonal()) * (s.Q.transpose() * s.B)) +
                 hp.delta * ((s.B * y.transpose()) * y);
    return s.B.array() * num.array().max(0.0) /
           (den.array() + kDenominatorGuard);
}

FactorizationState fit(const Matrix& x, const Matrix& y, const Matrix& r_w,
                       const Hyperparams& hp, std::uint64_t seed) {
    hp.validate();
    const Eigen::Index n = x.rows(), d = x.cols(), c = y.cols();
    const int k = hp.resolve_k(c);
    if (k < 1) throw std::invalid_argument("latent dimension must be >= 1");

    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    auto seeded_uniform = [&](Eigen::Index rows, Eigen::Index cols,
                              std::uint64_t stream) {
        auto rng = Xoshiro256ss::substream(seed, stream);
        Matrix m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j)
                m(i, j) = rng.next_double() * scale;
        return m;
    };

    FactorizationState s;
    s.V = seeded_uniform(n, k, 0);
    s.Q = seeded_uniform(k, d, 1);
    s.B = seeded_uniform(k, c, 2);
    s.D = update_D(s.Q, s.B, hp.d_smoothing);
    check_shapes(x, y, r_w, s);

    double z_prev = objective(x, y, r_w, s, hp);
    for (int t = 1; t <= hp.max_iter; ++t) {
        s.V = update_V(s, x, y, hp);
        s.D = update_D(s.Q, s.B, hp.d_smoothing);
        s.Q = update_Q(s, x, y, r_w, hp);
        s.D = update_D(s.Q, s.B, hp.d_smoothing);
        s.B = update_B(s, x, y, r_w, hp);

        const double z = objective(x, y, r_w, s, hp);
        if (!std::isfinite(z))
            throw std::runtime_error(
                "objective diverged (non-finite) at iteration " +
                std::to_string(t));
        s.objective_trace.push_back(z);
        s.iterations = t;

        const double denom =
            std::max(std::abs(z_prev), std::numeric_limits<double>::min());
        if (std::abs(z - z_prev) / denom < hp.tol) break;
        z_prev = z;
    }
    return s;
}

std::vector<double> feature_scores(const FactorizationState& s) {
    const Matrix w = s.Q.transpose() * s.B;
    std::vector<double> scores(static_cast<std::size_t>(w.rows()));
    for (Eigen::Index i = 0; i < w.rows(); ++i)
        scores[static_cast<std::size_t>(i)] = w.row(i).norm();
    return scores;
}

Hyperparams ablation_variant(const Hyperparams& hp, AblationComponent drop) {
    Hyperparams out = hp;
    if (drop == AblationComponent::random_walk) {
        out.gamma = 0.0;
    } else {
        out.delta = 0.0;
    }
    return out;
}

}  // namespace grwscmf
