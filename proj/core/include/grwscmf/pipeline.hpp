/**
 * End-to-end orchestration: configuration, the select -> rank pipeline,
 * protocol evaluation, grid search, and ablation runs, together with the
 * CSV/JSON artifacts each stage writes.
 *
 * Stages communicate only through the typed artifacts (ranking CSV, R_w
 * CSV, objective trace CSV, metrics CSV/JSON); evaluating a saved ranking
 * never re-runs the walk or the factorization.
 */

#pragma once

#include "grwscmf/eval.hpp"
#include "grwscmf/factorization.hpp"
#include "grwscmf/graph.hpp"
#include "grwscmf/types.hpp"
#include "grwscmf/walk.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace grwscmf {

struct RunConfig {
    std::string train_path;
    std::string test_path;
    int label_count = 0;  // also settable through a manifest file

    int bins = 5;
    SigmaPolicy sigma;

    WalkConfig walk;
    Hyperparams hp;

    Classifier classifier = Classifier::knn3;
    bool disable_rw = false;
    bool disable_fla = false;

    std::string out_dir = "out";
    std::uint64_t seed = 1;
    bool dump_graph = false;

    /// Throws std::invalid_argument on missing paths, invalid nested
    /// configs, or both ablations set at once (degenerate model).
    void validate() const;

    /// The fully resolved configuration as "key=value" lines; embedded as
    /// comments in every emitted artifact so runs are self-describing.
    std::vector<std::string> resolved_lines() const;
};

/// Sets one configuration key ("alpha", "n_walks", "classifier", ...).
/// Throws std::invalid_argument for unknown keys or unparsable values.
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value);

/// Flat key=value configuration file; '#' comments and blank lines allowed.
/// Later entries override earlier ones.
void load_config_file(RunConfig& cfg, const std::string& path);

/// load_dataset + validation + train-statistics standardization.
MultiLabelDataset prepare_dataset(const RunConfig& cfg);

/// Everything cmd_select produces, before serialization.
struct SelectResult {
    RelevanceGraph graph;
    Matrix r_w;
    FactorizationState state;
    FeatureRanking ranking;
};

/// Graph -> walk -> factorization -> ranking on an already prepared
/// dataset. Honors the ablation flags: disable_rw zeroes gamma, skips the
/// walk and substitutes the normalized MI matrix for R_w; disable_fla
/// zeroes delta.
SelectResult run_select(const MultiLabelDataset& ds, const RunConfig& cfg);

/// Ranking CSV: "rank,feature_index,score" rows under the config header.
void write_ranking_csv(const std::string& path, const FeatureRanking& ranking,
                       const std::vector<std::string>& header_comments = {});

/// Reads a ranking CSV back; throws std::runtime_error naming the line on
/// malformed rows and validates that the indices form a permutation.
FeatureRanking read_ranking_csv(const std::string& path);

/// Objective trace CSV: "iteration,objective,relative_change".
void write_trace_csv(const std::string& path,
                     const std::vector<double>& objective_trace,
                     const std::vector<std::string>& header_comments = {});

/// Per-step metrics CSV plus a JSON summary (mean/std per metric, stated as
/// aggregation over feature-count steps).
void write_eval_report(const std::string& csv_path,
                       const std::string& json_path, const EvalReport& report,
                       const std::string& dataset_name, Classifier clf,
                       const std::vector<std::string>& header_comments = {});

/// Full select pipeline with artifact emission into cfg.out_dir:
/// ranking.csv, r_w.csv, trace.csv, and (with cfg.dump_graph) the graph
/// matrices. Returns the in-memory result.
SelectResult cmd_select(const RunConfig& cfg);

/// Evaluates a saved ranking with the configured classifier and writes
/// metrics.csv / metrics.json. Throws on ranking/dataset dimension
/// mismatch.
EvalReport cmd_eval(const RunConfig& cfg, const std::string& ranking_path);

/// One point of a hyperparameter grid: the keys it overrides plus results.
struct GridPointResult {
    std::map<std::string, double> values;
    double mean_micro_f1 = 0.0;
    double mean_macro_f1 = 0.0;
    double mean_hamming_loss = 0.0;
    double mean_zero_one_loss = 0.0;
};

struct GridResult {
    std::vector<GridPointResult> leaderboard;  // sorted by mean micro-F1 desc
    RunConfig best_config;
};

/// Grid specification: numeric values per key, expanded as a Cartesian
/// product. Parsed from "alpha=0.1,0.5;gamma=0.01,0.1" style strings.
using GridSpec = std::map<std::string, std::vector<double>>;

GridSpec parse_grid_spec(const std::string& spec);

/// One-at-a-time sweep of the five weights over {0.01,0.1,0.3,0.5,0.7,0.9,
/// 1.0} with the others pinned at 0.5 (the default when no spec is given).
std::vector<std::map<std::string, double>> weight_sweep_points();

/// Expands `spec` to points, evaluates each by select + protocol eval on a
/// seeded 80/20 validation split carved from the training half, and writes
/// leaderboard.csv / best_config.json. The test half is never touched.
GridResult cmd_grid(const RunConfig& cfg, const GridSpec& spec);
GridResult cmd_grid(const RunConfig& cfg,
                    const std::vector<std::map<std::string, double>>& points);

/// Runs the full model and both single-component ablations on the same
/// data and seed, evaluates each on the test half, and writes
/// ablation.csv. Returns reports keyed "full", "no_rw", "no_fla".
std::map<std::string, EvalReport> cmd_ablate(const RunConfig& cfg);

/// Seeded 80/20 row split of the training half, returned as a new dataset
/// whose test half is the held-out 20% (raw rows; caller standardizes).
MultiLabelDataset validation_split(const MultiLabelDataset& raw,
                                   std::uint64_t seed);

}  // namespace grwscmf
