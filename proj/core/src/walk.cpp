#include "grwscmf/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace grwscmf {

void WalkConfig::validate() const {
    if (n_walks < 1)
        throw std::invalid_argument("n_walks must be at least 1");
    if (walk_length < 1)
        throw std::invalid_argument("walk_length must be at least 1");
    if (!(jump_prob > 0.0 && jump_prob < 1.0))
        throw std::invalid_argument("jump_prob must lie in (0,1)");
    if (!(decay_factor > 0.0 && decay_factor < 1.0))
        throw std::invalid_argument("decay_factor must lie in (0,1)");
}

namespace {

/// Inverse-CDF draw from one stochastic row; the scan order fixes the
/// floating-point semantics, so results are reproducible bit for bit.
int sample_row(const Matrix& p, Eigen::Index row, double u) {
    const Eigen::Index n = p.cols();
    double cum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        cum += p(row, j);
        if (u < cum) return static_cast<int>(j);
    }
    return static_cast<int>(n - 1);  // guard against rounding residue
}

}  // namespace

Node step(const Node& current, const RelevanceGraph& graph, double jump_prob,
          Xoshiro256ss& rng) {
    const double side = rng.next_double();
    const double u = rng.next_double();
    if (current.kind == NodeKind::feature) {
        if (side < jump_prob)
            return {NodeKind::label, sample_row(graph.P_fl, current.index, u)};
        return {NodeKind::feature,
                sample_row(graph.P_features, current.index, u)};
    }
    if (side < jump_prob)
        return {NodeKind::feature, sample_row(graph.P_lf, current.index, u)};
    return {NodeKind::label, sample_row(graph.P_labels, current.index, u)};
}

void accumulate_pairs(const WalkSequence& walk, const Matrix& mi,
                      double decay_factor, Matrix& accumulator) {
    if (!(decay_factor > 0.0 && decay_factor < 1.0))
        throw std::invalid_argument("decay_factor must lie in (0,1)");

    const std::size_t len = walk.size();
    for (std::size_t i = 0; i + 1 < len; ++i) {
        double decay = 1.0;
        for (std::size_t j = i + 1; j < len; ++j) {
            decay *= decay_factor;  // decay_factor^(j-i)
            const Node& a = walk[i];
            const Node& b = walk[j];
            if (a.kind == b.kind) continue;
            const int f = a.kind == NodeKind::feature ? a.index : b.index;
            const int l = a.kind == NodeKind::label ? a.index : b.index;
            accumulator(f, l) += decay * mi(f, l);
        }
    }
}

Matrix run_rwmi_raw(const RelevanceGraph& graph, const WalkConfig& cfg) {
    cfg.validate();
    const Eigen::Index d = graph.feature_count();
    const Eigen::Index c = graph.label_count();
    if (d == 0 || c == 0)
        throw std::invalid_argument("graph has no feature or label vertices");

    Matrix acc = Matrix::Zero(d, c);
    WalkSequence walk;
    walk.reserve(static_cast<std::size_t>(cfg.walk_length) + 1);

    for (std::int64_t w = 0; w < cfg.n_walks; ++w) {
        auto rng = Xoshiro256ss::substream(cfg.seed,
                                           static_cast<std::uint64_t>(w));
        walk.clear();
        walk.push_back({NodeKind::feature, static_cast<int>(w % d)});
        for (int s = 0; s < cfg.walk_length; ++s)
            walk.push_back(step(walk.back(), graph, cfg.jump_prob, rng));
        accumulate_pairs(walk, graph.MI, cfg.decay_factor, acc);
    }
    return acc;
}

Matrix run_rwmi(const RelevanceGraph& graph, const WalkConfig& cfg) {
    return min_max_normalize(run_rwmi_raw(graph, cfg));
}

}  // namespace grwscmf
