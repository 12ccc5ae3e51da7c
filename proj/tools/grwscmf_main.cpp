/**
 * grwscmf command-line tool.
 *
 * Subcommands:
 *   select  run the full pipeline and write ranking/R_w/trace artifacts
 *   eval    evaluate a saved ranking with kNN or MLkNN over the protocol
 *   grid    hyperparameter grid search on a validation split
 *   ablate  compare the full model against its single-component ablations
 */

#include <CLI11.hpp>

#include "grwscmf/pipeline.hpp"

#include <cstdio>
#include <exception>
#include <map>
#include <string>

namespace {

struct CliOptions {
    std::string config_path;
    std::map<std::string, std::string> values;
    bool disable_rw = false;
    bool disable_fla = false;
};

/// Registers the shared configuration flags on a subcommand. String-valued
/// options funnel through apply_config_entry so the CLI, config files, and
/// grid points all share one parser.
void add_common_options(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--config", opts.config_path,
                    "key=value configuration file (flags override it)");
    auto opt = [&](const std::string& flag, const std::string& key,
                   const std::string& help) {
        cmd->add_option(flag, opts.values[key], help);
    };
    opt("--train", "train", "training split file (CSV/TSV)");
    opt("--test", "test", "test split file (CSV/TSV)");
    opt("--labels", "labels",
        "number of trailing label columns, or a manifest file path");
    opt("--bins", "bins", "equal-frequency bins for mutual information");
    opt("--sigma", "sigma", "Gaussian kernel scale: 'median' or a value");
    opt("--alpha", "alpha", "weight of the feature reconstruction term");
    opt("--beta", "beta", "weight of the label reconstruction term");
    opt("--gamma", "gamma", "weight of the walk-association term");
    opt("--delta", "delta", "weight of the feature-label alignment term");
    opt("--epsilon", "epsilon", "weight of the l2,1 sparsity term");
    opt("--k", "k", "latent dimension (default: min(labels, 10))");
    opt("--max-iter", "max_iter", "maximum optimizer iterations");
    opt("--tol", "tol", "relative objective-change stopping threshold");
    opt("--n-walks", "n_walks", "number of random walks");
    opt("--walk-length", "walk_length", "steps per walk");
    opt("--jump-prob", "jump_prob", "feature<->label crossing probability");
    opt("--decay", "decay", "step-distance decay factor");
    opt("--seed", "seed", "master seed for walks, init, and splits");
    opt("--classifier", "classifier", "knn3 or mlknn10");
    opt("--out", "out", "output directory");
    cmd->add_flag("--disable-rw", opts.disable_rw,
                  "ablation: drop the random-walk component");
    cmd->add_flag("--disable-fla", opts.disable_fla,
                  "ablation: drop the feature-label alignment term");
    cmd->add_flag("--dump-graph", [&opts](std::int64_t) {
        opts.values["dump_graph"] = "true";
    }, "also write the graph matrices as CSV");
}

grwscmf::RunConfig build_config(const CliOptions& opts) {
    grwscmf::RunConfig cfg;
    if (!opts.config_path.empty())
        grwscmf::load_config_file(cfg, opts.config_path);
    for (const auto& [key, value] : opts.values) {
        if (!value.empty()) grwscmf::apply_config_entry(cfg, key, value);
    }
    if (opts.disable_rw) cfg.disable_rw = true;
    if (opts.disable_fla) cfg.disable_fla = true;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GRW-SCMF multi-label feature selection"};
    app.require_subcommand(1);

    CliOptions select_opts, eval_opts, grid_opts, ablate_opts;
    std::string ranking_path;
    std::string grid_spec;

    CLI::App* select =
        app.add_subcommand("select", "rank features on a dataset");
    add_common_options(select, select_opts);

    CLI::App* eval =
        app.add_subcommand("eval", "evaluate a saved feature ranking");
    add_common_options(eval, eval_opts);
    eval->add_option("--ranking", ranking_path, "ranking CSV from 'select'")
        ->required();

    CLI::App* grid = app.add_subcommand(
        "grid", "grid search on an 80/20 validation split of the train half");
    add_common_options(grid, grid_opts);
    grid->add_option(
        "--grid", grid_spec,
        "grid spec like 'gamma=0.01,0.1,0.3;delta=0.1,0.5' (default: "
        "one-at-a-time sweep of the five weights)");

    CLI::App* ablate = app.add_subcommand(
        "ablate", "run full, no-RW, and no-FLA variants and compare");
    add_common_options(ablate, ablate_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (select->parsed()) {
            const auto cfg = build_config(select_opts);
            const auto res = grwscmf::cmd_select(cfg);
            std::printf("ranked %d features -> %s/ranking.csv\n",
                        res.ranking.feature_count(), cfg.out_dir.c_str());
        } else if (eval->parsed()) {
            const auto cfg = build_config(eval_opts);
            const auto rep = grwscmf::cmd_eval(cfg, ranking_path);
            std::printf(
                "%s: micro_f1 %.4f  macro_f1 %.4f  hamming %.4f  "
                "zero_one %.4f (means over %zu steps) -> %s/metrics.csv\n",
                grwscmf::classifier_name(cfg.classifier).c_str(),
                rep.micro_f1.mean, rep.macro_f1.mean, rep.hamming_loss.mean,
                rep.zero_one_loss.mean, rep.steps.size(),
                cfg.out_dir.c_str());
        } else if (grid->parsed()) {
            const auto cfg = build_config(grid_opts);
            const auto result =
                grid_spec.empty()
                    ? grwscmf::cmd_grid(cfg, grwscmf::weight_sweep_points())
                    : grwscmf::cmd_grid(cfg,
                                        grwscmf::parse_grid_spec(grid_spec));
            std::printf("%zu grid points -> %s/leaderboard.csv (best "
                        "micro_f1 %.4f)\n",
                        result.leaderboard.size(), cfg.out_dir.c_str(),
                        result.leaderboard.front().mean_micro_f1);
        } else if (ablate->parsed()) {
            const auto cfg = build_config(ablate_opts);
            const auto reports = grwscmf::cmd_ablate(cfg);
            for (const auto& name : {"full", "no_rw", "no_fla"})
                std::printf("%-7s mean micro_f1 %.4f\n", name,
                            reports.at(name).micro_f1.mean);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
