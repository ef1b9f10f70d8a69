#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graphbench/model.hpp"
#include "graphbench/split.hpp"

namespace graphbench {

struct GridSearchResult {
    HyperParams best;
    double valid_accuracy = 0.0;
    std::size_t best_index = 0;            // position in grid enumeration order
    std::vector<double> all_accuracies;    // one per grid point, enumeration order
};

/// Exhaustive search over the grid's Cartesian product: fit on split.train,
/// score on split.valid, return the argmax. Ties go to the earliest grid
/// point (names alphabetical, candidates in listed order). Validation labels
/// are read through the view's guarded channel; they are part of the labeled
/// set, so those reads are permitted.
GridSearchResult grid_search(const Model& model, const HyperGrid& grid, const GraphView& g,
                             const Split& split, std::uint64_t rng_seed, int workers = 1);

struct EvaluationReport {
    std::vector<double> per_graph_accuracy;
    double mean = 0.0;
    double std = 0.0; // population std, matching the "x ± y" presentation
    std::vector<HyperParams> best_hparams_per_graph;
    std::string model_name;
    std::string dataset_name;
};

/// How the pipeline picks the setting to retrain with, given the per-graph
/// view and its train/valid split. Anything that selects hyper-parameters
/// using only the labeled set can stand in for the default grid search.
using HyperSelector = std::function<HyperParams(
    const Model& model, const HyperGrid& grid, const GraphView& g, const Split& split,
    std::uint64_t rng_seed)>;

/// The two-set evaluation pipeline, run per sample graph:
///   1. split nodes into labeled/unlabeled (labeled_fraction),
///   2. subdivide labeled into train/valid (valid_fraction),
///   3. grid-search hyper-parameters on train vs valid,
///   4. retrain the winner on the full labeled set (fresh derived seed),
///   5. score on the unlabeled set,
/// then aggregate mean +- std across graphs. All per-graph sub-seeds derive
/// from rng_seed alone (not the graph index), so identical graphs get
/// identical treatment. A per-graph failure aborts with the graph index.
EvaluationReport pipeline_evaluate(const Model& model, const HyperGrid& grid,
                                   std::span<const Graph> samples, double labeled_fraction,
                                   double valid_fraction, std::uint64_t rng_seed,
                                   int workers = 1, const HyperSelector& selector = {});

} // namespace graphbench
