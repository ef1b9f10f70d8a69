#pragma once

#include <cstdint>
#include <string>

namespace graphbench::cli {

struct GenSbmOptions {
    std::string out_dir;
    std::string block_sizes; // comma separated
    double p_in = 0.05;
    double p_out = 0.005;
    int feature_dim = 32;
    double feature_signal = 1.0;
    std::uint64_t seed = 0;
    std::string name = "sbm";
};

struct SampleOptions {
    std::string graph_dir;
    std::string out_dir;
    std::int64_t target_edges = 5000;
    int count = 100;
    std::uint64_t seed = 0;
    std::string node_kl_thr = "inf";
    std::string edge_kl_thr = "inf";
    double calibrate_percentile = 0.0; // 0 = off
    int pilot = 200;
    int max_attempts = 100;
    int workers = 1;
    std::string overlap_def = "jaccard";
};

struct StatsOptions {
    std::string samples_dir;
    std::string graph_dir;
    std::string out_path;
    std::string overlap_def = "jaccard";
};

struct EvalOptions {
    std::string model = "proplin";
    std::string grid_path;
    std::string samples_dir;
    std::string out_path;
    std::string dataset_name;
    double labeled_fraction = 0.2;
    double valid_fraction = 0.5;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct ValidUtilOptions {
    std::string model = "proplin";
    std::string graph_dir;
    std::string out_path;
    std::string base_hparams_path;
    std::string grid_path;
    double labeled_fraction = 0.2;
    double valid_fraction = 0.5;
    std::int64_t budget = -1; // -1 = every validation node
    std::uint64_t seed = 0;
    int workers = 1;
};

struct SweepOptions {
    std::string model = "proplin";
    std::string graph_dir;
    std::string grid_path;
    std::string sizes; // comma separated
    std::string out_path;
    std::string tsv_path;
    int num_seeds = 20;
    double labeled_fraction = 0.2;
    double valid_fraction = 0.5;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct StabilityOptions {
    std::string models_path;
    std::string samples_dir;
    std::string graph_dir;
    std::string out_dir;
    int num_seeds = 10;
    int num_splits = 100;
    double labeled_fraction = 0.2;
    double valid_fraction = 0.5;
    int splits_labeled_count = 0; // 0 = use labeled_fraction on the single graph too
    std::uint64_t seed = 0;
    int workers = 1;
};

void cmd_gen_sbm(const GenSbmOptions& opt);
void cmd_sample(const SampleOptions& opt);
void cmd_stats(const StatsOptions& opt);
void cmd_eval(const EvalOptions& opt);
void cmd_validutil(const ValidUtilOptions& opt);
void cmd_sweep(const SweepOptions& opt);
void cmd_stability(const StabilityOptions& opt);

} // namespace graphbench::cli
