/**
 * Structured correlation matrix factorization.
 *
 * Minimizes
 *
 *   alpha ||X - VQ||_F^2 + beta ||Y - VB||_F^2 + gamma ||R_w - Q^T B||_F^2
 *   + delta ||X Q^T - Y B^T||_F^2 + epsilon ||Q^T B||_{2,1} + ||V||_F^2
 *
 * over V >= 0 (n x k), Q >= 0 (k x d), B >= 0 (k x c) by alternating
 * multiplicative updates. The non-smooth l2,1 term is handled through the
 * reweighted diagonal D with D_ii = 1 / (2 sqrt(||W_i||^2 + c)), W = Q^T B,
 * refreshed before each Q and B update. Feature i is scored by the
 * Euclidean norm of row i of Q^T B.
 */

#pragma once

#include "grwscmf/types.hpp"

#include <cstdint>
#include <vector>

namespace grwscmf {

struct Hyperparams {
    double alpha = 0.5;
    double beta = 0.5;
    double gamma = 0.5;
    double delta = 0.5;
    double epsilon = 0.5;
    int k = 0;                  // latent dimension; <= 0 means min(c, 10)
    int max_iter = 300;
    double tol = 1e-5;          // relative objective-change stopping threshold
    double d_smoothing = 1e-8;  // the small constant inside sqrt for D

    /// Resolves k for a concrete problem size.
    int resolve_k(Eigen::Index label_count) const;

    /// Throws std::invalid_argument on negative weights or invalid bounds.
    void validate() const;
};

struct FactorizationState {
    Matrix V;  // n x k
    Matrix Q;  // k x d
    Matrix B;  // k x c
    Vector D;  // diagonal of the d x d reweighting matrix
    std::vector<double> objective_trace;  // one entry per completed iteration
    int iterations = 0;
};

/// Which model component an ablation removes.
enum class AblationComponent { random_walk, feature_label_alignment };

/// Full objective value for the current state.
double objective(const Matrix& x, const Matrix& y, const Matrix& r_w,
                 const FactorizationState& state, const Hyperparams& hp);

/// Diagonal of D for W = Q^T B: D_ii = 1 / (2 sqrt(||W_i||^2 + smoothing)).
Vector update_D(const Matrix& q, const Matrix& b, double smoothing);

/// Multiplicative update of V with Q, B fixed:
///   V <- V .* (alpha X Q^T + beta Y B^T) ./ (alpha V Q Q^T + beta V B B^T + V)
/// Negative numerator entries (possible with signed X) are clamped to zero;
/// a 1e-12 guard keeps denominators positive.
Matrix update_V(const FactorizationState& state, const Matrix& x,
                const Matrix& y, const Hyperparams& hp);

/// Multiplicative update of Q with V, B and state.D fixed. state.D must be
/// fresh for the current Q, B (fit refreshes it right before the call).
Matrix update_Q(const FactorizationState& state, const Matrix& x,
                const Matrix& y, const Matrix& r_w, const Hyperparams& hp);

/// Multiplicative update of B, symmetric to update_Q.
Matrix update_B(const FactorizationState& state, const Matrix& x,
                const Matrix& y, const Matrix& r_w, const Hyperparams& hp);

/// Seeded uniform(0,1)/sqrt(k) initialization, then iterates
/// update_V -> update_D -> update_Q -> update_D -> update_B, recording the
/// objective each iteration, until the relative objective change drops
/// below hp.tol or hp.max_iter is reached. Throws std::runtime_error naming
/// the iteration if the objective turns non-finite.
FactorizationState fit(const Matrix& x, const Matrix& y, const Matrix& r_w,
                       const Hyperparams& hp, std::uint64_t seed);

/// score_i = ||row i of Q^T B||_2.
std::vector<double> feature_scores(const FactorizationState& state);

/// drop=random_walk zeroes gamma (the pipeline additionally skips the walk
/// and substitutes normalized MI for R_w); drop=feature_label_alignment
/// zeroes delta.
Hyperparams ablation_variant(const Hyperparams& hp, AblationComponent drop);

}  // namespace grwscmf
