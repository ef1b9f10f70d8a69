#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphbench/evaluator.hpp"
#include "graphbench/guard.hpp"
#include "graphbench/model.hpp"

namespace graphbench {

/// State of the per-validation-node pseudo-label search.
struct PseudoLabelState {
    std::vector<NodeId> nodes;                 // searched validation nodes, ascending
    std::vector<ClassId> initial_predictions;  // the base model's predictions on them
    std::vector<ClassId> pseudo_labels;        // final searched values
    std::vector<double> per_node_chosen_acc;   // max candidate accuracy at each node's turn
    std::int64_t t = 0;                        // number of pseudo-label hyper-parameters
    ClassId k = 0;
};

struct ValidUtilResult {
    double test_accuracy = 0.0;
    PseudoLabelState state;
    HyperParams final_hparams;
    double final_valid_accuracy = 0.0; // oracle score of the final grid winner
    double train_accuracy = 0.0;       // final model on its own training labels (overfit check)
    std::int64_t search_queries = 0;   // oracle queries in the pseudo-label loop: t * k
    std::int64_t grid_queries = 0;     // oracle queries in the final grid search
};

/// How the per-node argmax result is adopted. The contract is strict
/// improvement; the weak variant exists for tie audits only.
enum class AdoptRule { strict_improvement, weak_improvement };

/// Pseudo-label coordinate search over the validation set:
///   1. fit on train_labels with base_hparams, predict the validation nodes;
///   2. initialize the pseudo-labels from those predictions;
///   3. per validation node (ascending id), per class: plant the class as the
///      node's pseudo-label, refit on train_labels + pseudo-labels with the
///      dropout hyper-parameter forced to 0, query the oracle;
///   4. adopt the argmax class (ties to the lowest id) only if it beats the
///      accuracy at the node's own predicted class STRICTLY;
///   5. grid-search final_grid (dropout searchable again) training on
///      train_labels + pseudo-labels, scored by the same oracle, then return
///      the winner's accuracy on test_nodes.
///
/// Only the first `budget` validation nodes (ascending) get a pseudo-label;
/// budget = 0 degenerates to the plain grid-searched model. The hidden
/// validation labels reach the search only through the oracle's scalar
/// answers; the view's permitted set should not contain them.
ValidUtilResult validutil_partial(const Model& model, const GraphView& g,
                                  const LabelAssignment& train_labels,
                                  std::span<const NodeId> valid_nodes,
                                  const ValidationOracle& oracle,
                                  std::span<const NodeId> test_nodes, const Graph& truth,
                                  const HyperParams& base_hparams, const HyperGrid& final_grid,
                                  std::int64_t budget, std::uint64_t rng_seed, int workers = 1,
                                  AdoptRule rule = AdoptRule::strict_improvement);

/// validutil_partial with budget = |valid_nodes|.
ValidUtilResult validutil(const Model& model, const GraphView& g,
                          const LabelAssignment& train_labels,
                          std::span<const NodeId> valid_nodes, const ValidationOracle& oracle,
                          std::span<const NodeId> test_nodes, const Graph& truth,
                          const HyperParams& base_hparams, const HyperGrid& final_grid,
                          std::uint64_t rng_seed, int workers = 1);

struct SweepRow {
    int validation_size = 0;
    HyperParams best_hparams;              // winner under the first seed
    double mean_test_accuracy = 0.0;
    double std_test_accuracy = 0.0;
    std::vector<double> per_seed_accuracy;
    std::vector<HyperParams> per_seed_winner;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::vector<NodeId> exposure_order; // validation nodes; size-s runs expose the first s
    std::uint64_t permutation_seed = 0;
};

/// For each size s (strictly increasing, each <= |split.valid|): expose only
/// the first s validation labels of a fixed random order (nested, so smaller
/// sets are subsets of larger ones), grid-search against that reduced
/// validation set, train the winner on the training set, and score on the
/// unlabeled set; repeated for every seed. The exposure order derives from
/// seeds[0].
SweepReport sweep_validation_size(const Model& model, const HyperGrid& grid, const Graph& g,
                                  const Split& split, std::span<const int> sizes,
                                  std::span<const std::uint64_t> seeds, int workers = 1);

} // namespace graphbench
