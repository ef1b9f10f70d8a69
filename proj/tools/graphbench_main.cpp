// Command-line front end: builds sampled benchmark datasets, evaluates
// classifiers under the two-set pipeline, probes validation-label over-tuning
// and measures benchmark stability. Every command takes a --seed and writes a
// machine-readable JSON report that embeds its resolved configuration; rerun
// with the same seed, the report bytes are identical except the timestamp.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "graphbench/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitModel = 4;

} // namespace

int main(int argc, char** argv) {
    using namespace graphbench;
    using namespace graphbench::cli;

    CLI::App app{"graphbench: i.i.d. subgraph benchmarks for node classification"};
    app.require_subcommand(1);

    GenSbmOptions gen;
    auto* cmd_gen_app = app.add_subcommand(
        "gen-sbm", "Generate a synthetic stochastic-block-model graph bundle");
    cmd_gen_app->add_option("--out", gen.out_dir, "Output bundle directory")->required();
    cmd_gen_app->add_option("--blocks", gen.block_sizes, "Comma-separated block sizes")
        ->required();
    cmd_gen_app->add_option("--p-in", gen.p_in, "Intra-block edge probability (default 0.05)");
    cmd_gen_app->add_option("--p-out", gen.p_out, "Inter-block edge probability (default 0.005)");
    cmd_gen_app->add_option("--feature-dim", gen.feature_dim, "Feature dimensions (default 32)");
    cmd_gen_app->add_option("--feature-signal", gen.feature_signal,
                            "Block-indicator feature scale (default 1.0)");
    cmd_gen_app->add_option("--seed", gen.seed, "Master RNG seed");
    cmd_gen_app->add_option("--name", gen.name, "Graph name for meta.json");

    SampleOptions sample;
    auto* cmd_sample_app = app.add_subcommand(
        "sample", "Draw KL-thresholded random-walk subgraphs and write sample bundles");
    cmd_sample_app->add_option("--graph", sample.graph_dir, "Parent graph bundle directory")
        ->required();
    cmd_sample_app->add_option("--out", sample.out_dir, "Output directory")->required();
    cmd_sample_app->add_option("--edges", sample.target_edges, "Edges per sample (default 5000)");
    cmd_sample_app->add_option("--count", sample.count, "Number of samples (default 100)");
    cmd_sample_app->add_option("--seed", sample.seed, "Master RNG seed");
    cmd_sample_app->add_option("--node-kl-thr", sample.node_kl_thr,
                               "Node KL acceptance threshold or 'inf'");
    cmd_sample_app->add_option("--edge-kl-thr", sample.edge_kl_thr,
                               "Edge KL acceptance threshold or 'inf'");
    cmd_sample_app->add_option("--calibrate-percentile", sample.calibrate_percentile,
                               "Calibrate thresholds at this pilot percentile (overrides --*-kl-thr)");
    cmd_sample_app->add_option("--pilot", sample.pilot, "Pilot walks for calibration (default 200)");
    cmd_sample_app->add_option("--max-attempts", sample.max_attempts,
                               "Attempt budget per sample (default 100)");
    cmd_sample_app->add_option("--workers", sample.workers, "Parallel workers (default 1)");
    cmd_sample_app->add_option("--overlap-def", sample.overlap_def,
                               "Overlap definition: jaccard|sum");

    StatsOptions stats;
    auto* cmd_stats_app =
        app.add_subcommand("stats", "Recompute dataset statistics for existing sample bundles");
    cmd_stats_app->add_option("--samples", stats.samples_dir, "Directory of sample_* bundles")
        ->required();
    cmd_stats_app->add_option("--graph", stats.graph_dir, "Parent graph bundle")->required();
    cmd_stats_app->add_option("--out", stats.out_path, "Output stats.json path")->required();
    cmd_stats_app->add_option("--overlap-def", stats.overlap_def,
                              "Overlap definition: jaccard|sum");

    EvalOptions eval;
    auto* cmd_eval_app =
        app.add_subcommand("eval", "Evaluate a model on sample graphs with the two-set pipeline");
    cmd_eval_app->add_option("--model", eval.model, "Model name: proplin|majority");
    cmd_eval_app->add_option("--grid", eval.grid_path, "Grid file (JSON name -> candidates)");
    cmd_eval_app->add_option("--samples", eval.samples_dir, "Directory of sample_* bundles")
        ->required();
    cmd_eval_app->add_option("--out", eval.out_path, "Output report.json path")->required();
    cmd_eval_app->add_option("--dataset", eval.dataset_name, "Dataset name for the report");
    cmd_eval_app->add_option("--labeled-fraction", eval.labeled_fraction,
                             "Labeled fraction (default 0.2)");
    cmd_eval_app->add_option("--valid-fraction", eval.valid_fraction,
                             "Validation fraction of the labeled set (default 0.5)");
    cmd_eval_app->add_option("--seed", eval.seed, "Master RNG seed");
    cmd_eval_app->add_option("--workers", eval.workers, "Parallel workers (default 1)");

    ValidUtilOptions vu;
    auto* cmd_vu_app = app.add_subcommand(
        "validutil", "Pseudo-label search that tunes per-validation-node hyper-parameters");
    cmd_vu_app->add_option("--model", vu.model, "Model name");
    cmd_vu_app->add_option("--graph", vu.graph_dir, "Graph bundle")->required();
    cmd_vu_app->add_option("--out", vu.out_path, "Output validutil.json path")->required();
    cmd_vu_app->add_option("--base-hparams", vu.base_hparams_path,
                           "Base hyper-parameters file (JSON name -> value)");
    cmd_vu_app->add_option("--grid", vu.grid_path, "Final grid file");
    cmd_vu_app->add_option("--labeled-fraction", vu.labeled_fraction,
                           "Labeled fraction (default 0.2)");
    cmd_vu_app->add_option("--valid-fraction", vu.valid_fraction,
                           "Validation fraction of the labeled set (default 0.5)");
    cmd_vu_app->add_option("--budget", vu.budget,
                           "Pseudo-label budget; -1 searches every validation node");
    cmd_vu_app->add_option("--seed", vu.seed, "Master RNG seed");
    cmd_vu_app->add_option("--workers", vu.workers, "Parallel workers (default 1)");

    SweepOptions sweep;
    auto* cmd_sweep_app = app.add_subcommand(
        "sweep", "Test accuracy as a function of the exposed validation-set size");
    cmd_sweep_app->add_option("--model", sweep.model, "Model name");
    cmd_sweep_app->add_option("--graph", sweep.graph_dir, "Graph bundle")->required();
    cmd_sweep_app->add_option("--grid", sweep.grid_path, "Grid file");
    cmd_sweep_app->add_option("--sizes", sweep.sizes, "Comma-separated validation sizes")
        ->required();
    cmd_sweep_app->add_option("--out", sweep.out_path, "Output sweep.json path")->required();
    cmd_sweep_app->add_option("--tsv", sweep.tsv_path, "Optional two-column TSV (size, mean accuracy)");
    cmd_sweep_app->add_option("--num-seeds", sweep.num_seeds, "Seeds per size (default 20)");
    cmd_sweep_app->add_option("--labeled-fraction", sweep.labeled_fraction,
                              "Labeled fraction (default 0.2)");
    cmd_sweep_app->add_option("--valid-fraction", sweep.valid_fraction,
                              "Validation fraction of the labeled set (default 0.5)");
    cmd_sweep_app->add_option("--seed", sweep.seed, "Master RNG seed");
    cmd_sweep_app->add_option("--workers", sweep.workers, "Parallel workers (default 1)");

    StabilityOptions stab;
    auto* cmd_stab_app = app.add_subcommand(
        "stability", "Ranking stability across seeds plus the subgraph-vs-splits variance contrast");
    cmd_stab_app->add_option("--models", stab.models_path, "Models file (JSON array)")->required();
    cmd_stab_app->add_option("--samples", stab.samples_dir, "Directory of sample_* bundles")
        ->required();
    cmd_stab_app->add_option("--graph", stab.graph_dir, "Single graph bundle for the splits arm")
        ->required();
    cmd_stab_app->add_option("--out-dir", stab.out_dir, "Output directory")->required();
    cmd_stab_app->add_option("--num-seeds", stab.num_seeds, "Ranking seeds (default 10)");
    cmd_stab_app->add_option("--num-splits", stab.num_splits,
                             "Random splits of the single graph (default 100)");
    cmd_stab_app->add_option("--labeled-fraction", stab.labeled_fraction,
                             "Labeled fraction (default 0.2)");
    cmd_stab_app->add_option("--valid-fraction", stab.valid_fraction,
                             "Validation fraction of the labeled set (default 0.5)");
    cmd_stab_app->add_option("--splits-labeled-count", stab.splits_labeled_count,
                             "Fixed labeled-set size for the splits arm (0 = use the fraction)");
    cmd_stab_app->add_option("--seed", stab.seed, "Master RNG seed");
    cmd_stab_app->add_option("--workers", stab.workers, "Parallel workers (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (cmd_gen_app->parsed()) cmd_gen_sbm(gen);
        if (cmd_sample_app->parsed()) cmd_sample(sample);
        if (cmd_stats_app->parsed()) cmd_stats(stats);
        if (cmd_eval_app->parsed()) cmd_eval(eval);
        if (cmd_vu_app->parsed()) cmd_validutil(vu);
        if (cmd_sweep_app->parsed()) cmd_sweep(sweep);
        if (cmd_stab_app->parsed()) cmd_stability(stab);
    } catch (const SamplingInfeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ExhaustionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitModel;
    } catch (const GuardViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitModel;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
