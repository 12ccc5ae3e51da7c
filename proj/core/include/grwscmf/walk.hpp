/**
 * Random walks over the composite graph and the decayed mutual-information
 * accumulator they produce.
 *
 * Each walk starts at a feature vertex (round-robin over walk index), takes
 * walk_length steps, and every (feature, label) position pair in the
 * resulting sequence contributes decay^distance * MI(f, l) to the
 * accumulator. Walk w draws from RNG substream (seed, w), so the result is
 * independent of execution order and bit-reproducible.
 */

#pragma once

#include "grwscmf/graph.hpp"
#include "grwscmf/rng.hpp"
#include "grwscmf/types.hpp"

#include <cstdint>
#include <vector>

namespace grwscmf {

struct WalkConfig {
    std::int64_t n_walks = 1000;
    int walk_length = 20;
    double jump_prob = 0.5;    // probability of crossing feature<->label side
    double decay_factor = 0.5; // base of the step-distance penalty
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

enum class NodeKind { feature, label };

struct Node {
    NodeKind kind;
    int index;
};

/// A start node followed by walk_length visited nodes.
using WalkSequence = std::vector<Node>;

/// One transition. From a feature node: with jump_prob sample a label from
/// P_fl(current,:), otherwise a feature from P_features(current,:); the
/// symmetric rule applies from label nodes.
Node step(const Node& current, const RelevanceGraph& graph, double jump_prob,
          Xoshiro256ss& rng);

/// Adds decay^|j-i| * MI(f, l) for every position pair (i, j), i < j, with
/// one feature and one label endpoint. Repeated co-occurrences accumulate.
void accumulate_pairs(const WalkSequence& walk, const Matrix& mi,
                      double decay_factor, Matrix& accumulator);

/// Raw d x c accumulator over cfg.n_walks walks (no normalization).
Matrix run_rwmi_raw(const RelevanceGraph& graph, const WalkConfig& cfg);

/// Min-max-normalized association matrix R_w in [0,1].
Matrix run_rwmi(const RelevanceGraph& graph, const WalkConfig& cfg);

}  // namespace grwscmf
