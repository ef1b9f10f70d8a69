#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphbench/errors.hpp"
#include "graphbench/evaluator.hpp"
#include "graphbench/io.hpp"
#include "graphbench/json_io.hpp"
#include "graphbench/overtuning.hpp"
#include "graphbench/rng.hpp"
#include "graphbench/sampler.hpp"
#include "graphbench/sbm.hpp"
#include "graphbench/split.hpp"
#include "graphbench/stability.hpp"

namespace graphbench::cli {

using nlohmann::json;

namespace {

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_report(const std::filesystem::path& path, json report) {
    report["timestamp"] = utc_timestamp();
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << report.dump(2) << '\n';
    if (!out) throw ConfigError("write failed for " + path.string());
}

double parse_threshold(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v < 0.0)
        throw ConfigError("threshold must be a nonnegative number or 'inf', got '" + text + "'");
    return v;
}

OverlapDefinition parse_overlap(const std::string& text) {
    if (text == "jaccard") return OverlapDefinition::jaccard;
    if (text == "sum") return OverlapDefinition::intersection_over_sum;
    throw ConfigError("overlap definition must be 'jaccard' or 'sum', got '" + text + "'");
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw Error("failed to format a double");
    return std::string(buf, end);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw ConfigError("expected a comma-separated integer list, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ConfigError("empty integer list");
    return out;
}

std::string sample_dir_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "sample_%03d", index);
    return buf;
}

std::vector<Graph> load_samples_as_graphs(const std::filesystem::path& dir) {
    auto sample_dirs = list_sample_dirs(dir);
    if (sample_dirs.empty()) throw ConfigError("no sample_* bundles under " + dir.string());
    std::vector<Graph> graphs;
    graphs.reserve(sample_dirs.size());
    for (const auto& d : sample_dirs) graphs.push_back(load_bundle(d));
    return graphs;
}

} // namespace

void cmd_gen_sbm(const GenSbmOptions& opt) {
    std::vector<int> sizes = parse_int_list(opt.block_sizes);
    std::vector<NodeId> blocks(sizes.begin(), sizes.end());
    Graph g = generate_sbm(blocks, opt.p_in, opt.p_out, opt.feature_dim, opt.feature_signal,
                           opt.seed);
    g.set_name(opt.name);
    write_bundle(g, opt.out_dir);
    std::cout << "wrote " << opt.out_dir << ": n=" << g.node_count() << " edges="
              << g.edge_count() << " k=" << g.class_count() << " d=" << g.feature_dim() << "\n";
}

void cmd_sample(const SampleOptions& opt) {
    LoadStats load_stats;
    Graph parent = load_bundle(opt.graph_dir, &load_stats);

    SamplerConfig cfg;
    cfg.target_edges = opt.target_edges;
    cfg.sample_count = opt.count;
    cfg.max_attempts_per_sample = opt.max_attempts;
    cfg.rng_seed = opt.seed;
    cfg.node_kl_threshold = parse_threshold(opt.node_kl_thr);
    cfg.edge_kl_threshold = parse_threshold(opt.edge_kl_thr);

    json config;
    config["graph"] = opt.graph_dir;
    config["out"] = opt.out_dir;
    config["target_edges"] = cfg.target_edges;
    config["sample_count"] = cfg.sample_count;
    config["max_attempts_per_sample"] = cfg.max_attempts_per_sample;
    config["seed"] = cfg.rng_seed;
    config["workers"] = opt.workers;
    config["overlap_definition"] = opt.overlap_def;

    json calibration;
    if (opt.calibrate_percentile > 0.0) {
        ThresholdCalibration cal =
            calibrate_thresholds(parent, cfg, opt.pilot, opt.calibrate_percentile, opt.workers);
        cfg.node_kl_threshold = cal.node_threshold;
        cfg.edge_kl_threshold = cal.edge_threshold;
        calibration["percentile"] = opt.calibrate_percentile;
        calibration["pilot_count"] = opt.pilot;
        calibration["pilot_node_kl"] = cal.pilot_node_kl;
        calibration["pilot_edge_kl"] = cal.pilot_edge_kl;
        calibration["joint_acceptance_rate"] = cal.joint_acceptance_rate;
    }
    config["node_kl_threshold"] = json_real(cfg.node_kl_threshold);
    config["edge_kl_threshold"] = json_real(cfg.edge_kl_threshold);

    RejectSampleResult result = reject_sample(parent, cfg, opt.workers);

    std::filesystem::path out_dir(opt.out_dir);
    std::filesystem::create_directories(out_dir);
    for (int i = 0; i < cfg.sample_count; ++i) {
        auto name = sample_dir_name(i);
        write_sample_bundle(result.samples[i], parent, out_dir / name, name,
                            result.stream_seeds[i]);
    }

    DatasetStats stats =
        dataset_stats(result.samples, parent, parse_overlap(opt.overlap_def));

    json report;
    report["command"] = "sample";
    report["config"] = config;
    if (!calibration.is_null()) report["calibration"] = calibration;
    report["parent"] = {{"name", parent.name()},
                        {"n", parent.node_count()},
                        {"edges", parent.edge_count()},
                        {"k", parent.class_count()},
                        {"d", parent.feature_dim()},
                        {"dropped_self_loops", load_stats.dropped_self_loops},
                        {"dropped_duplicates", load_stats.dropped_duplicates}};
    report["stats"] = to_json(stats);
    report["acceptance_rate"] = result.acceptance_rate();
    report["attempts_per_sample"] = result.attempts;
    write_report(out_dir / "stats.json", report);
}

void cmd_stats(const StatsOptions& opt) {
    Graph parent = load_bundle(opt.graph_dir);
    auto dirs = list_sample_dirs(opt.samples_dir);
    if (dirs.size() < 2) throw ConfigError("need at least 2 sample bundles for stats");

    DiscreteDistribution parent_nodes = node_label_distribution(parent);
    DiscreteDistribution parent_edges = edge_category_distribution(parent);

    std::vector<SubgraphSample> samples;
    samples.reserve(dirs.size());
    for (const auto& d : dirs) {
        SubgraphSample s = load_sample_bundle(d);
        validate_subgraph(s, parent);
        // Divergences are recomputed from the data; provenance stamps are not trusted.
        s.node_kl = kl_divergence(subgraph_node_distribution(s, parent), parent_nodes);
        s.edge_kl = kl_divergence(subgraph_edge_distribution(s, parent), parent_edges);
        samples.push_back(std::move(s));
    }

    DatasetStats stats = dataset_stats(samples, parent, parse_overlap(opt.overlap_def));

    json report;
    report["command"] = "stats";
    report["config"] = {{"samples", opt.samples_dir},
                        {"graph", opt.graph_dir},
                        {"out", opt.out_path},
                        {"overlap_definition", opt.overlap_def}};
    report["sample_count"] = samples.size();
    report["stats"] = to_json(stats);
    write_report(opt.out_path, report);
}

void cmd_eval(const EvalOptions& opt) {
    auto model = make_model(opt.model);
    HyperGrid grid = opt.grid_path.empty() ? default_grid(opt.model)
                                           : load_grid_file(opt.grid_path);
    std::vector<Graph> graphs = load_samples_as_graphs(opt.samples_dir);

    EvaluationReport rep = pipeline_evaluate(*model, grid, graphs, opt.labeled_fraction,
                                             opt.valid_fraction, opt.seed, opt.workers);
    rep.dataset_name = opt.dataset_name.empty()
                           ? std::filesystem::path(opt.samples_dir).filename().string()
                           : opt.dataset_name;

    json report;
    report["command"] = "eval";
    report["config"] = {{"model", opt.model},
                        {"grid", opt.grid_path.empty() ? "<default>" : opt.grid_path},
                        {"samples", opt.samples_dir},
                        {"labeled_fraction", opt.labeled_fraction},
                        {"valid_fraction", opt.valid_fraction},
                        {"seed", opt.seed},
                        {"workers", opt.workers}};
    report["grid"] = to_json(grid);
    report["seeds"] = {{"master", opt.seed},
                       {"split", derive_seed(opt.seed, "split")},
                       {"subdivide", derive_seed(opt.seed, "subdivide")},
                       {"search", derive_seed(opt.seed, "search")},
                       {"final", derive_seed(opt.seed, "final")}};
    report["report"] = to_json(rep);
    write_report(opt.out_path, report);
}

void cmd_validutil(const ValidUtilOptions& opt) {
    auto model = make_model(opt.model);
    HyperParams base = opt.base_hparams_path.empty() ? default_hparams(opt.model)
                                                     : load_hparams_file(opt.base_hparams_path);
    HyperGrid grid = opt.grid_path.empty() ? default_grid(opt.model)
                                           : load_grid_file(opt.grid_path);

    Graph g = load_bundle(opt.graph_dir);
    Split split = subdivide(make_split(g, opt.labeled_fraction, derive_seed(opt.seed, "split")),
                            opt.valid_fraction, derive_seed(opt.seed, "subdivide"));

    auto log = std::make_shared<AccessLog>();
    GraphView view = make_view(g, split.train, log);
    LabelAssignment train = assignment_from(view.labels(), split.train);
    AccuracyOracle oracle(g, split.valid);
    oracle.attach_log(log);

    std::int64_t budget =
        opt.budget < 0 ? static_cast<std::int64_t>(split.valid.size()) : opt.budget;

    ValidUtilResult result =
        validutil_partial(*model, view, train, split.valid, oracle, split.unlabeled, g, base,
                          grid, budget, opt.seed, opt.workers);

    json report;
    report["command"] = "validutil";
    report["config"] = {{"model", opt.model},
                        {"graph", opt.graph_dir},
                        {"labeled_fraction", opt.labeled_fraction},
                        {"valid_fraction", opt.valid_fraction},
                        {"budget", budget},
                        {"seed", opt.seed},
                        {"workers", opt.workers},
                        {"base_hparams", to_json(base)},
                        {"final_grid", to_json(grid)}};
    report["split"] = {{"train", split.train.size()},
                       {"valid", split.valid.size()},
                       {"test", split.unlabeled.size()}};
    report["result"] = to_json(result);
    report["guard"] = {{"permitted_label_reads", log->permitted_label_reads.load()},
                       {"blocked_label_reads", log->blocked_label_reads.load()},
                       {"accuracy_queries", log->accuracy_queries.load()}};
    report["notes"] = json::array({"final grid search is scored on the same validation oracle "
                                   "the pseudo-label search already used"});
    write_report(opt.out_path, report);
}

void cmd_sweep(const SweepOptions& opt) {
    auto model = make_model(opt.model);
    HyperGrid grid = opt.grid_path.empty() ? default_grid(opt.model)
                                           : load_grid_file(opt.grid_path);
    std::vector<int> sizes = parse_int_list(opt.sizes);
    if (opt.num_seeds < 1) throw ConfigError("--num-seeds must be >= 1");

    Graph g = load_bundle(opt.graph_dir);
    Split split = subdivide(make_split(g, opt.labeled_fraction, derive_seed(opt.seed, "split")),
                            opt.valid_fraction, derive_seed(opt.seed, "subdivide"));

    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(opt.num_seeds));
    for (int i = 0; i < opt.num_seeds; ++i)
        seeds.push_back(derive_seed(opt.seed, "sweep-seed", static_cast<std::uint64_t>(i)));

    SweepReport sweep = sweep_validation_size(*model, grid, g, split, sizes, seeds, opt.workers);

    json report;
    report["command"] = "sweep";
    report["config"] = {{"model", opt.model},
                        {"graph", opt.graph_dir},
                        {"grid", to_json(grid)},
                        {"sizes", sizes},
                        {"num_seeds", opt.num_seeds},
                        {"labeled_fraction", opt.labeled_fraction},
                        {"valid_fraction", opt.valid_fraction},
                        {"seed", opt.seed},
                        {"workers", opt.workers}};
    report["seeds"] = seeds;
    report["sweep"] = to_json(sweep);
    write_report(opt.out_path, report);

    if (!opt.tsv_path.empty()) {
        std::ofstream tsv(opt.tsv_path, std::ios::binary);
        if (!tsv) throw ConfigError("cannot write " + opt.tsv_path);
        for (const auto& row : sweep.rows)
            tsv << row.validation_size << '\t' << format_double(row.mean_test_accuracy) << '\n';
    }
}

void cmd_stability(const StabilityOptions& opt) {
    if (opt.num_seeds < 2) throw ConfigError("--num-seeds must be >= 2");
    if (opt.num_splits < 2) throw ConfigError("--num-splits must be >= 2");

    std::ifstream models_in(opt.models_path);
    if (!models_in) throw ConfigError("cannot open " + opt.models_path);
    json models_spec;
    try {
        models_in >> models_spec;
    } catch (const json::exception& e) {
        throw ParseError(opt.models_path, 0, e.what());
    }
    if (!models_spec.is_array() || models_spec.empty())
        throw ConfigError("models file must be a nonempty JSON array");

    std::vector<RankedModel> models;
    for (const auto& entry : models_spec) {
        RankedModel rm;
        rm.name = entry.at("name").get<std::string>();
        std::string kind = entry.at("model").get<std::string>();
        rm.model = std::shared_ptr<const Model>(make_model(kind));
        rm.grid = entry.contains("grid") ? grid_from_json(entry["grid"]) : default_grid(kind);
        models.push_back(std::move(rm));
    }

    std::vector<Graph> graphs = load_samples_as_graphs(opt.samples_dir);
    Graph single = load_bundle(opt.graph_dir);

    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(opt.num_seeds));
    for (int i = 0; i < opt.num_seeds; ++i)
        seeds.push_back(derive_seed(opt.seed, "stability-seed", static_cast<std::uint64_t>(i)));

    StabilityResult stability = stability_experiment(models, graphs, seeds, opt.labeled_fraction,
                                                     opt.valid_fraction, opt.workers);

    std::filesystem::create_directories(opt.out_dir);
    json config;
    config["models"] = opt.models_path;
    config["samples"] = opt.samples_dir;
    config["graph"] = opt.graph_dir;
    config["num_seeds"] = opt.num_seeds;
    config["num_splits"] = opt.num_splits;
    config["labeled_fraction"] = opt.labeled_fraction;
    config["valid_fraction"] = opt.valid_fraction;
    config["splits_labeled_count"] = opt.splits_labeled_count;
    config["seed"] = opt.seed;
    config["workers"] = opt.workers;

    {
        json report;
        report["command"] = "stability";
        report["config"] = config;
        report["seeds"] = seeds;
        json rankings = json::array();
        for (const auto& r : stability.rankings) rankings.push_back(to_json(r));
        report["rankings"] = rankings;
        report["inversion_number"] = stability.inversions;
        write_report(std::filesystem::path(opt.out_dir) / "stability.json", report);
    }

    std::vector<std::uint64_t> split_seeds;
    split_seeds.reserve(static_cast<std::size_t>(opt.num_splits));
    for (int i = 0; i < opt.num_splits; ++i)
        split_seeds.push_back(derive_seed(opt.seed, "variance-split", static_cast<std::uint64_t>(i)));
    SplitStyle style;
    style.labeled_count = opt.splits_labeled_count;
    style.labeled_fraction = opt.labeled_fraction;
    style.valid_fraction = opt.valid_fraction;

    VarianceResult variance = variance_comparison(
        *models.front().model, models.front().grid, graphs, single, split_seeds,
        derive_seed(opt.seed, "variance-iid"), opt.labeled_fraction, opt.valid_fraction, style,
        opt.workers);

    {
        json report;
        report["command"] = "stability-variance";
        report["config"] = config;
        report["model"] = models.front().name;
        report["std_iid"] = variance.std_iid;
        report["std_splits"] = variance.std_splits;
        report["iid_accuracies"] = variance.iid_accuracies;
        report["split_accuracies"] = variance.split_accuracies;
        write_report(std::filesystem::path(opt.out_dir) / "variance.json", report);
    }
}

} // namespace graphbench::cli
