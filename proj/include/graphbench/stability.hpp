#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "graphbench/evaluator.hpp"

namespace graphbench {

/// Models ordered best-accuracy-first for one evaluation seed. Exact accuracy
/// ties are broken by ascending model name, so the order is total.
struct RankingSequence {
    std::uint64_t seed = 0;
    std::vector<std::string> models;
    std::vector<double> accuracies; // non-increasing, parallel to models
};

/// Sorts (accuracy desc, name asc) into a RankingSequence.
RankingSequence make_ranking(std::uint64_t seed, std::span<const std::string> names,
                             std::span<const double> accuracies);

/// Sum over all non-reference sequences of the number of unordered model
/// pairs ranked one way by the reference and the other way by the sequence.
/// Throws DomainError when any sequence ranks a different model set.
std::int64_t inversion_number(const RankingSequence& reference,
                              std::span<const RankingSequence> others);

/// A named contender in a stability experiment.
struct RankedModel {
    std::string name;
    std::shared_ptr<const Model> model;
    HyperGrid grid;
};

struct StabilityResult {
    std::vector<RankingSequence> rankings;            // one per seed; [0] is the reference
    std::int64_t inversions = 0;
    std::vector<std::vector<double>> mean_accuracy;   // [seed][model], pre-ranking order
};

/// Evaluates every model with pipeline_evaluate under every seed, ranks by
/// mean accuracy per seed, and counts inversions against the first seed's
/// ranking. The same seed feeds every model, so contenders see identical
/// splits.
StabilityResult stability_experiment(std::span<const RankedModel> models,
                                     std::span<const Graph> samples,
                                     std::span<const std::uint64_t> seeds,
                                     double labeled_fraction, double valid_fraction,
                                     int workers = 1);

/// Split policy for the single-graph arm of variance_comparison. A positive
/// labeled_count pins the labeled-set size (classic fixed-size benchmark
/// splits); otherwise labeled_fraction applies.
struct SplitStyle {
    NodeId labeled_count = 0;
    double labeled_fraction = 0.2;
    double valid_fraction = 0.5;
};

struct VarianceResult {
    double std_iid = 0.0;    // per-subgraph accuracy spread under the pipeline
    double std_splits = 0.0; // per-split accuracy spread on the single graph
    std::vector<double> iid_accuracies;
    std::vector<double> split_accuracies;
};

/// Contrast of the two evaluation protocols: accuracy spread across i.i.d.
/// subgraphs (one pipeline run) versus across repeated random splits of one
/// graph (one grid-searched run per split seed).
VarianceResult variance_comparison(const Model& model, const HyperGrid& grid,
                                   std::span<const Graph> samples, const Graph& single_graph,
                                   std::span<const std::uint64_t> split_seeds,
                                   std::uint64_t iid_seed, double labeled_fraction,
                                   double valid_fraction, const SplitStyle& splits_style,
                                   int workers = 1);

} // namespace graphbench
