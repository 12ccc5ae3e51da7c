#include "grwscmf/pipeline.hpp"

#include "grwscmf/dataset.hpp"
#include "grwscmf/matrix_io.hpp"
#include "grwscmf/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grwscmf {

namespace fs = std::filesystem;

namespace {

/// Reruns f, prefixing any exception with the pipeline stage name so CLI
/// diagnostics say where a run failed.
template <typename F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string(name) + ": " + e.what());
    }
}

}  // namespace

void RunConfig::validate() const {
    if (train_path.empty() || test_path.empty())
        throw std::invalid_argument("train and test paths are required");
    if (label_count < 2)
        throw std::invalid_argument("label count must be at least 2");
    if (bins < 2) throw std::invalid_argument("bins must be at least 2");
    if (!sigma.use_median && !(sigma.fixed_value > 0.0))
        throw std::invalid_argument("fixed sigma must be positive");
    walk.validate();
    hp.validate();
    if (disable_rw && disable_fla)
        throw std::invalid_argument(
            "disabling both the random-walk and alignment terms leaves a "
            "degenerate model; drop at most one");
}

std::vector<std::string> RunConfig::resolved_lines() const {
    std::vector<std::string> lines;
    auto add = [&](const std::string& k, const std::string& v) {
        lines.push_back(k + "=" + v);
    };
    add("train", train_path);
    add("test", test_path);
    add("labels", std::to_string(label_count));
    add("bins", std::to_string(bins));
    add("sigma", sigma.use_median ? std::string("median")
                                  : format_double(sigma.fixed_value));
    add("n_walks", std::to_string(walk.n_walks));
    add("walk_length", std::to_string(walk.walk_length));
    add("jump_prob", format_double(walk.jump_prob));
    add("decay", format_double(walk.decay_factor));
    add("alpha", format_double(hp.alpha));
    add("beta", format_double(hp.beta));
    add("gamma", format_double(hp.gamma));
    add("delta", format_double(hp.delta));
    add("epsilon", format_double(hp.epsilon));
    add("k", std::to_string(hp.k));
    add("max_iter", std::to_string(hp.max_iter));
    add("tol", format_double(hp.tol));
    add("d_smoothing", format_double(hp.d_smoothing));
    add("classifier", classifier_name(classifier));
    add("disable_rw", disable_rw ? "true" : "false");
    add("disable_fla", disable_fla ? "true" : "false");
    add("seed", std::to_string(seed));
    add("out", out_dir);
    return lines;
}

namespace {

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::invalid_argument("expected boolean, got '" + v + "'");
}

double parse_double(const std::string& v) {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size())
        throw std::invalid_argument("expected number, got '" + v + "'");
    return x;
}

long long parse_int(const std::string& v) {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size())
        throw std::invalid_argument("expected integer, got '" + v + "'");
    return x;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "train") {
        cfg.train_path = value;
    } else if (key == "test") {
        cfg.test_path = value;
    } else if (key == "labels") {
        // either an integer or the path of a manifest file
        bool numeric = !value.empty() &&
                       value.find_first_not_of("0123456789") ==
                           std::string::npos;
        cfg.label_count = numeric ? static_cast<int>(parse_int(value))
                                  : read_label_count_manifest(value);
    } else if (key == "bins") {
        cfg.bins = static_cast<int>(parse_int(value));
    } else if (key == "sigma") {
        cfg.sigma = value == "median" ? SigmaPolicy::median()
                                      : SigmaPolicy::fixed(parse_double(value));
    } else if (key == "n_walks") {
        cfg.walk.n_walks = parse_int(value);
    } else if (key == "walk_length") {
        cfg.walk.walk_length = static_cast<int>(parse_int(value));
    } else if (key == "jump_prob") {
        cfg.walk.jump_prob = parse_double(value);
    } else if (key == "decay") {
        cfg.walk.decay_factor = parse_double(value);
    } else if (key == "alpha") {
        cfg.hp.alpha = parse_double(value);
    } else if (key == "beta") {
        cfg.hp.beta = parse_double(value);
    } else if (key == "gamma") {
        cfg.hp.gamma = parse_double(value);
    } else if (key == "delta") {
        cfg.hp.delta = parse_double(value);
    } else if (key == "epsilon") {
        cfg.hp.epsilon = parse_double(value);
    } else if (key == "k") {
        cfg.hp.k = static_cast<int>(parse_int(value));
    } else if (key == "max_iter") {
        cfg.hp.max_iter = static_cast<int>(parse_int(value));
    } else if (key == "tol") {
        cfg.hp.tol = parse_double(value);
    } else if (key == "d_smoothing") {
        cfg.hp.d_smoothing = parse_double(value);
    } else if (key == "classifier") {
        cfg.classifier = parse_classifier(value);
    } else if (key == "disable_rw") {
        cfg.disable_rw = parse_bool(value);
    } else if (key == "disable_fla") {
        cfg.disable_fla = parse_bool(value);
    } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_int(value));
    } else if (key == "out") {
        cfg.out_dir = value;
    } else if (key == "dump_graph") {
        cfg.dump_graph = parse_bool(value);
    } else {
        throw std::invalid_argument("unknown configuration key '" + key + "'");
    }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected key=value");
        try {
            apply_config_entry(cfg, trim(t.substr(0, eq)),
                               trim(t.substr(eq + 1)));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": " + e.what());
        }
    }
}

MultiLabelDataset prepare_dataset(const RunConfig& cfg) {
    return stage("load", [&] {
        MultiLabelDataset ds =
            load_dataset(cfg.train_path, cfg.test_path, cfg.label_count);
        standardize_features(ds);
        return ds;
    });
}

SelectResult run_select(const MultiLabelDataset& ds, const RunConfig& cfg) {
    SplitMix64 derive(cfg.seed);
    const std::uint64_t walk_seed = derive.next();
    const std::uint64_t fit_seed = derive.next();

    SelectResult res;
    res.graph = stage("graph", [&] {
        return build_graph(ds.X_train, ds.Y_train, cfg.bins, cfg.sigma);
    });

    Hyperparams hp = cfg.hp;
    if (cfg.disable_rw) {
        hp = ablation_variant(hp, AblationComponent::random_walk);
        res.r_w = res.graph.MI;  // walk skipped, direct MI kept
    } else {
        WalkConfig wcfg = cfg.walk;
        wcfg.seed = walk_seed;
        res.r_w = stage("walk", [&] { return run_rwmi(res.graph, wcfg); });
    }
    if (cfg.disable_fla)
        hp = ablation_variant(hp, AblationComponent::feature_label_alignment);

    // multiplicative updates need non-negative data; rescale the features
    // to [0,1] per column (labels and R_w are already non-negative)
    const Matrix x_fit = column_min_max_scale(ds.X_train);
    res.state = stage("fit", [&] {
        return fit(x_fit, ds.Y_train, res.r_w, hp, fit_seed);
    });
    res.ranking = stage("rank", [&] {
        return rank_features(feature_scores(res.state));
    });
    return res;
}

void write_ranking_csv(const std::string& path, const FeatureRanking& ranking,
                       const std::vector<std::string>& header_comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << "rank,feature_index,score\n";
    for (std::size_t r = 0; r < ranking.order.size(); ++r) {
        const int idx = ranking.order[r];
        out << r << ',' << idx << ','
            << format_double(ranking.scores[static_cast<std::size_t>(idx)])
            << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

FeatureRanking read_ranking_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ranking file: " + path);

    FeatureRanking ranking;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<std::pair<long, std::pair<long, double>>> rows;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            if (t != "rank,feature_index,score")
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected ranking header");
            header_seen = true;
            continue;
        }
        std::istringstream ss(t);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') ||
            !std::getline(ss, c))
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected rank,feature_index,score");
        try {
            rows.emplace_back(parse_int(trim(a)),
                              std::make_pair(parse_int(trim(b)),
                                             parse_double(trim(c))));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": " + e.what());
        }
    }
    if (rows.empty())
        throw std::runtime_error("ranking file has no rows: " + path);

    const std::size_t d = rows.size();
    ranking.order.assign(d, -1);
    ranking.scores.assign(d, 0.0);
    for (const auto& [rank, rest] : rows) {
        const auto [idx, score] = rest;
        if (rank < 0 || rank >= static_cast<long>(d) || idx < 0 ||
            idx >= static_cast<long>(d))
            throw std::runtime_error("ranking indices out of range in " +
                                     path);
        if (ranking.order[static_cast<std::size_t>(rank)] != -1)
            throw std::runtime_error("duplicate rank in " + path);
        ranking.order[static_cast<std::size_t>(rank)] = static_cast<int>(idx);
        ranking.scores[static_cast<std::size_t>(idx)] = score;
    }
    std::vector<bool> seen(d, false);
    for (int idx : ranking.order) {
        if (idx < 0 || seen[static_cast<std::size_t>(idx)])
            throw std::runtime_error("ranking is not a permutation in " +
                                     path);
        seen[static_cast<std::size_t>(idx)] = true;
    }
    return ranking;
}

void write_trace_csv(const std::string& path,
                     const std::vector<double>& objective_trace,
                     const std::vector<std::string>& header_comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << "iteration,objective,relative_change\n";
    for (std::size_t t = 0; t < objective_trace.size(); ++t) {
        double rel = 0.0;
        if (t > 0) {
            const double prev = objective_trace[t - 1];
            rel = std::abs(objective_trace[t] - prev) /
                  std::max(std::abs(prev), 1e-300);
        }
        out << (t + 1) << ',' << format_double(objective_trace[t]) << ','
            << format_double(rel) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_eval_report(const std::string& csv_path,
                       const std::string& json_path, const EvalReport& report,
                       const std::string& dataset_name, Classifier clf,
                       const std::vector<std::string>& header_comments) {
    {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write file: " + csv_path);
        for (const auto& c : header_comments) out << "# " << c << "\n";
        out << "feature_count,micro_f1,macro_f1,hamming_loss,zero_one_loss\n";
        for (const auto& r : report.steps) {
            out << r.feature_count << ',' << format_double(r.micro_f1) << ','
                << format_double(r.macro_f1) << ','
                << format_double(r.hamming_loss) << ','
                << format_double(r.zero_one_loss) << '\n';
        }
        if (!out) throw std::runtime_error("write failed: " + csv_path);
    }

    nlohmann::json j;
    j["dataset"] = dataset_name;
    j["classifier"] = classifier_name(clf);
    j["aggregation"] = "mean and population std over feature-count steps";
    {
        nlohmann::json config;
        for (const auto& line : header_comments) {
            const auto eq = line.find('=');
            if (eq != std::string::npos)
                config[line.substr(0, eq)] = line.substr(eq + 1);
        }
        j["config"] = std::move(config);
    }
    j["mean"] = {{"micro_f1", report.micro_f1.mean},
                 {"macro_f1", report.macro_f1.mean},
                 {"hamming_loss", report.hamming_loss.mean},
                 {"zero_one_loss", report.zero_one_loss.mean}};
    j["std"] = {{"micro_f1", report.micro_f1.stddev},
                {"macro_f1", report.macro_f1.stddev},
                {"hamming_loss", report.hamming_loss.stddev},
                {"zero_one_loss", report.zero_one_loss.stddev}};
    auto steps = nlohmann::json::array();
    for (const auto& r : report.steps) {
        steps.push_back({{"feature_count", r.feature_count},
                         {"micro_f1", r.micro_f1},
                         {"macro_f1", r.macro_f1},
                         {"hamming_loss", r.hamming_loss},
                         {"zero_one_loss", r.zero_one_loss}});
    }
    j["steps"] = std::move(steps);

    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write file: " + json_path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + json_path);
}

SelectResult cmd_select(const RunConfig& cfg) {
    cfg.validate();
    const MultiLabelDataset ds = prepare_dataset(cfg);
    SelectResult res = run_select(ds, cfg);

    fs::create_directories(cfg.out_dir);
    const auto lines = cfg.resolved_lines();
    const fs::path out(cfg.out_dir);
    write_ranking_csv((out / "ranking.csv").string(), res.ranking, lines);
    write_csv_matrix((out / "r_w.csv").string(), res.r_w, lines);
    write_trace_csv((out / "trace.csv").string(), res.state.objective_trace,
                    lines);
    if (cfg.dump_graph) {
        write_csv_matrix((out / "graph_a_features.csv").string(),
                         res.graph.A_features, lines);
        write_csv_matrix((out / "graph_a_labels.csv").string(),
                         res.graph.A_labels, lines);
        write_csv_matrix((out / "graph_mi.csv").string(), res.graph.MI, lines);
        write_csv_matrix((out / "graph_p_features.csv").string(),
                         res.graph.P_features, lines);
        write_csv_matrix((out / "graph_p_labels.csv").string(),
                         res.graph.P_labels, lines);
        write_csv_matrix((out / "graph_p_fl.csv").string(), res.graph.P_fl,
                         lines);
        write_csv_matrix((out / "graph_p_lf.csv").string(), res.graph.P_lf,
                         lines);
    }
    return res;
}

EvalReport cmd_eval(const RunConfig& cfg, const std::string& ranking_path) {
    cfg.validate();
    const MultiLabelDataset ds = prepare_dataset(cfg);
    const FeatureRanking ranking = read_ranking_csv(ranking_path);
    const EvalReport report = protocol_eval(ds, ranking, cfg.classifier);

    fs::create_directories(cfg.out_dir);
    const fs::path out(cfg.out_dir);
    write_eval_report((out / "metrics.csv").string(),
                      (out / "metrics.json").string(), report, ds.name,
                      cfg.classifier, cfg.resolved_lines());
    return report;
}

MultiLabelDataset validation_split(const MultiLabelDataset& raw,
                                   std::uint64_t seed) {
    const Eigen::Index n = raw.X_train.rows();
    if (n < 5)
        throw std::invalid_argument(
            "training half too small for an 80/20 split");

    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto rng = Xoshiro256ss::substream(seed, 0xa11d);
    for (std::size_t i = perm.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(
            rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }

    const Eigen::Index n_val = std::max<Eigen::Index>(1, n / 5);
    const Eigen::Index n_fit = n - n_val;

    MultiLabelDataset out;
    out.name = raw.name + "-val";
    out.X_train.resize(n_fit, raw.X_train.cols());
    out.Y_train.resize(n_fit, raw.Y_train.cols());
    out.X_test.resize(n_val, raw.X_train.cols());
    out.Y_test.resize(n_val, raw.Y_train.cols());
    for (Eigen::Index i = 0; i < n_fit; ++i) {
        out.X_train.row(i) = raw.X_train.row(perm[static_cast<std::size_t>(i)]);
        out.Y_train.row(i) = raw.Y_train.row(perm[static_cast<std::size_t>(i)]);
    }
    for (Eigen::Index i = 0; i < n_val; ++i) {
        const auto src = perm[static_cast<std::size_t>(n_fit + i)];
        out.X_test.row(i) = raw.X_train.row(src);
        out.Y_test.row(i) = raw.Y_train.row(src);
    }
    return out;
}

GridSpec parse_grid_spec(const std::string& spec) {
    GridSpec out;
    std::istringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        const std::string g = trim(group);
        if (g.empty()) continue;
        const std::size_t eq = g.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid spec entry '" + g +
                                        "' lacks '='");
        const std::string key = trim(g.substr(0, eq));
        std::vector<double> values;
        std::istringstream vals(g.substr(eq + 1));
        std::string v;
        while (std::getline(vals, v, ',')) values.push_back(
            parse_double(trim(v)));
        if (values.empty())
            throw std::invalid_argument("grid spec key '" + key +
                                        "' has no values");
        out[key] = std::move(values);
    }
    if (out.empty()) throw std::invalid_argument("empty grid spec");
    return out;
}

std::vector<std::map<std::string, double>> weight_sweep_points() {
    const std::vector<std::string> keys = {"alpha", "beta", "gamma", "delta",
                                           "epsilon"};
    const std::vector<double> range = {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
    std::vector<std::map<std::string, double>> points;
    for (const auto& key : keys)
        for (double v : range) points.push_back({{key, v}});
    return points;
}

namespace {

std::vector<std::map<std::string, double>> expand_grid(const GridSpec& spec) {
    std::vector<std::map<std::string, double>> points = {{}};
    for (const auto& [key, values] : spec) {
        std::vector<std::map<std::string, double>> next;
        next.reserve(points.size() * values.size());
        for (const auto& p : points)
            for (double v : values) {
                auto q = p;
                q[key] = v;
                next.push_back(std::move(q));
            }
        points = std::move(next);
    }
    return points;
}

RunConfig apply_point(const RunConfig& base,
                      const std::map<std::string, double>& point) {
    RunConfig cfg = base;
    for (const auto& [key, v] : point) {
        if (key == "n_walks" || key == "walk_length" || key == "k" ||
            key == "bins" || key == "max_iter") {
            apply_config_entry(cfg, key,
                               std::to_string(static_cast<long long>(
                                   std::llround(v))));
        } else {
            apply_config_entry(cfg, key, format_double(v));
        }
    }
    return cfg;
}

}  // namespace

GridResult cmd_grid(const RunConfig& cfg, const GridSpec& spec) {
    return cmd_grid(cfg, expand_grid(spec));
}

GridResult cmd_grid(const RunConfig& cfg,
                    const std::vector<std::map<std::string, double>>& points) {
    cfg.validate();
    if (points.empty()) throw std::invalid_argument("empty grid");

    const MultiLabelDataset raw =
        load_dataset(cfg.train_path, cfg.test_path, cfg.label_count);
    SplitMix64 derive(cfg.seed);
    derive.next();  // walk seed
    derive.next();  // fit seed
    const std::uint64_t split_seed = derive.next();

    MultiLabelDataset val = validation_split(raw, split_seed);
    standardize_features(val);

    GridResult result;
    for (const auto& point : points) {
        const RunConfig pcfg = apply_point(cfg, point);
        pcfg.validate();
        const SelectResult sel = run_select(val, pcfg);
        const EvalReport rep = protocol_eval(val, sel.ranking, cfg.classifier);

        GridPointResult r;
        r.values = point;
        r.mean_micro_f1 = rep.micro_f1.mean;
        r.mean_macro_f1 = rep.macro_f1.mean;
        r.mean_hamming_loss = rep.hamming_loss.mean;
        r.mean_zero_one_loss = rep.zero_one_loss.mean;
        result.leaderboard.push_back(std::move(r));
    }

    std::vector<std::size_t> order(result.leaderboard.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return result.leaderboard[a].mean_micro_f1 >
                                result.leaderboard[b].mean_micro_f1;
                     });
    std::vector<GridPointResult> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order)
        sorted.push_back(std::move(result.leaderboard[i]));
    result.leaderboard = std::move(sorted);
    result.best_config = apply_point(cfg, result.leaderboard.front().values);

    // every key that appears anywhere in the grid, in sorted order
    std::vector<std::string> keys;
    for (const auto& p : points)
        for (const auto& [k, v] : p)
            if (std::find(keys.begin(), keys.end(), k) == keys.end())
                keys.push_back(k);
    std::sort(keys.begin(), keys.end());

    fs::create_directories(cfg.out_dir);
    const fs::path out(cfg.out_dir);
    {
        std::ofstream lb(out / "leaderboard.csv");
        if (!lb)
            throw std::runtime_error("cannot write leaderboard.csv in " +
                                     cfg.out_dir);
        for (const auto& c : cfg.resolved_lines()) lb << "# " << c << "\n";
        lb << "rank";
        for (const auto& k : keys) lb << ',' << k;
        lb << ",mean_micro_f1,mean_macro_f1,mean_hamming_loss,"
              "mean_zero_one_loss\n";
        for (std::size_t i = 0; i < result.leaderboard.size(); ++i) {
            const auto& r = result.leaderboard[i];
            lb << i;
            for (const auto& k : keys) {
                lb << ',';
                const auto it = r.values.find(k);
                if (it != r.values.end()) lb << format_double(it->second);
            }
            lb << ',' << format_double(r.mean_micro_f1) << ','
               << format_double(r.mean_macro_f1) << ','
               << format_double(r.mean_hamming_loss) << ','
               << format_double(r.mean_zero_one_loss) << '\n';
        }
    }
    {
        nlohmann::json j;
        for (const auto& line : result.best_config.resolved_lines()) {
            const auto eq = line.find('=');
            j[line.substr(0, eq)] = line.substr(eq + 1);
        }
        j["mean_micro_f1"] = result.leaderboard.front().mean_micro_f1;
        std::ofstream best(out / "best_config.json");
        if (!best)
            throw std::runtime_error("cannot write best_config.json in " +
                                     cfg.out_dir);
        best << j.dump(2) << '\n';
    }
    return result;
}

std::map<std::string, EvalReport> cmd_ablate(const RunConfig& cfg) {
    cfg.validate();
    const MultiLabelDataset ds = prepare_dataset(cfg);

    std::map<std::string, EvalReport> reports;
    auto run_variant = [&](const std::string& name, bool no_rw, bool no_fla) {
        RunConfig vcfg = cfg;
        vcfg.disable_rw = no_rw;
        vcfg.disable_fla = no_fla;
        const SelectResult sel = run_select(ds, vcfg);
        reports[name] = protocol_eval(ds, sel.ranking, cfg.classifier);
    };
    run_variant("full", false, false);
    run_variant("no_rw", true, false);
    run_variant("no_fla", false, true);

    fs::create_directories(cfg.out_dir);
    std::ofstream out(fs::path(cfg.out_dir) / "ablation.csv");
    if (!out)
        throw std::runtime_error("cannot write ablation.csv in " +
                                 cfg.out_dir);
    for (const auto& c : cfg.resolved_lines()) out << "# " << c << "\n";
    out << "variant,mean_micro_f1,mean_macro_f1,mean_hamming_loss,"
           "mean_zero_one_loss\n";
    for (const auto& name : {"full", "no_rw", "no_fla"}) {
        const auto& r = reports[name];
        out << name << ',' << format_double(r.micro_f1.mean) << ','
            << format_double(r.macro_f1.mean) << ','
            << format_double(r.hamming_loss.mean) << ','
            << format_double(r.zero_one_loss.mean) << '\n';
    }
    return reports;
}

}  // namespace grwscmf
