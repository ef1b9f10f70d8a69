#include "graphbench/overtuning.hpp"

#include <algorithm>
#include <string>

#include "graphbench/errors.hpp"
#include "graphbench/parallel.hpp"
#include "graphbench/rng.hpp"
#include "graphbench/split.hpp"
#include "graphbench/stats.hpp"

namespace graphbench {

namespace {

// Final-stage grid search: fits on `assignment`, scores on the oracle.
struct OracleGridResult {
    HyperParams best;
    double best_score = 0.0;
};

OracleGridResult oracle_grid_search(const Model& model, const HyperGrid& grid, const GraphView& g,
                                    const LabelAssignment& assignment,
                                    const ValidationOracle& oracle, std::uint64_t rng_seed,
                                    int workers) {
    if (grid.empty()) throw DomainError("grid search over an empty grid");
    const std::size_t total = grid.size();
    std::vector<double> scores(total);
    std::vector<NodeId> nodes(oracle.nodes().begin(), oracle.nodes().end());

    parallel_for(total, workers, [&](std::size_t j) {
        auto fitted = model.fit(g, assignment, grid.at(j), derive_seed(rng_seed, "grid", j));
        scores[j] = oracle.score(fitted->predict(nodes));
    });

    std::size_t best = 0;
    for (std::size_t j = 1; j < total; ++j)
        if (scores[j] > scores[best]) best = j;
    return {grid.at(best), scores[best]};
}

} // namespace

ValidUtilResult validutil_partial(const Model& model, const GraphView& g,
                                  const LabelAssignment& train_labels,
                                  std::span<const NodeId> valid_nodes,
                                  const ValidationOracle& oracle,
                                  std::span<const NodeId> test_nodes, const Graph& truth,
                                  const HyperParams& base_hparams, const HyperGrid& final_grid,
                                  std::int64_t budget, std::uint64_t rng_seed, int workers,
                                  AdoptRule rule) {
    const auto t_full = static_cast<std::int64_t>(valid_nodes.size());
    if (budget < 0 || budget > t_full)
        throw DomainError("budget must lie in [0, |valid|]; got " + std::to_string(budget));
    if (oracle.nodes().size() != valid_nodes.size() ||
        !std::equal(oracle.nodes().begin(), oracle.nodes().end(), valid_nodes.begin()))
        throw DomainError("oracle node set does not match the validation nodes");
    const ClassId k = g.class_count();

    std::vector<NodeId> ordered(valid_nodes.begin(), valid_nodes.end());
    std::sort(ordered.begin(), ordered.end());
    if (!std::equal(ordered.begin(), ordered.end(), valid_nodes.begin()))
        throw DomainError("validation nodes must be sorted ascending");

    ValidUtilResult result;
    result.state.k = k;
    result.state.t = budget;
    result.state.nodes.assign(ordered.begin(), ordered.begin() + budget);

    // Step 1-2: predictions of the base model seed the pseudo-labels.
    const std::int64_t q0 = oracle.query_count();
    {
        auto fitted = model.fit(g, train_labels, base_hparams, derive_seed(rng_seed, "init"));
        auto preds = fitted->predict(result.state.nodes);
        result.state.initial_predictions = preds;
        result.state.pseudo_labels = std::move(preds);
    }
    result.state.per_node_chosen_acc.assign(static_cast<std::size_t>(budget), 0.0);

    // Step 3: coordinate search, dropout pinned to 0 while searching.
    HyperParams search_hp = base_hparams;
    search_hp.set("dropout", 0.0);

    LabelAssignment assignment = train_labels;
    const std::size_t pseudo_base = assignment.size();
    for (std::int64_t i = 0; i < budget; ++i)
        assignment.push_back({result.state.nodes[i], result.state.pseudo_labels[i]});

    std::vector<NodeId> oracle_nodes(valid_nodes.begin(), valid_nodes.end());
    for (std::int64_t i = 0; i < budget; ++i) {
        std::vector<double> acc(static_cast<std::size_t>(k), 0.0);
        parallel_for(static_cast<std::size_t>(k), workers, [&](std::size_t c) {
            LabelAssignment candidate = assignment; // frozen except entry i
            candidate[pseudo_base + i].label = static_cast<ClassId>(c);
            auto fitted = model.fit(g, candidate, search_hp,
                                    derive_seed(rng_seed, "node", static_cast<std::uint64_t>(i), c));
            acc[c] = oracle.score(fitted->predict(oracle_nodes));
        });

        ClassId best = 0;
        for (ClassId c = 1; c < k; ++c)
            if (acc[c] > acc[best]) best = c; // ties keep the lowest class id

        const ClassId predicted = result.state.initial_predictions[i];
        const bool adopt = rule == AdoptRule::strict_improvement ? acc[best] > acc[predicted]
                                                                 : acc[best] >= acc[predicted];
        const ClassId chosen = adopt ? best : predicted;
        result.state.pseudo_labels[i] = chosen;
        assignment[pseudo_base + i].label = chosen;
        result.state.per_node_chosen_acc[i] = acc[best];
    }
    result.search_queries = oracle.query_count() - q0;

    // Step 4-5: ordinary grid search with the pseudo-labels fixed, then score
    // the winner on the test set. The same (already exhausted) validation set
    // scores the final grid.
    const std::int64_t q1 = oracle.query_count();
    OracleGridResult final_best =
        oracle_grid_search(model, final_grid, g, assignment, oracle,
                           derive_seed(rng_seed, "final-grid"), workers);
    result.grid_queries = oracle.query_count() - q1;
    result.final_hparams = final_best.best;
    result.final_valid_accuracy = final_best.best_score;

    auto fitted = model.fit(g, assignment, final_best.best, derive_seed(rng_seed, "retrain"));
    {
        std::vector<NodeId> train_nodes;
        train_nodes.reserve(assignment.size());
        std::vector<ClassId> train_truth;
        train_truth.reserve(assignment.size());
        for (const auto& ln : assignment) {
            train_nodes.push_back(ln.node);
            train_truth.push_back(ln.label);
        }
        auto train_preds = fitted->predict(train_nodes);
        std::size_t hits = 0;
        for (std::size_t j = 0; j < train_preds.size(); ++j)
            if (train_preds[j] == train_truth[j]) ++hits;
        result.train_accuracy = static_cast<double>(hits) / static_cast<double>(assignment.size());
    }
    result.test_accuracy = accuracy(fitted->predict(test_nodes), test_nodes, truth);
    return result;
}

ValidUtilResult validutil(const Model& model, const GraphView& g,
                          const LabelAssignment& train_labels,
                          std::span<const NodeId> valid_nodes, const ValidationOracle& oracle,
                          std::span<const NodeId> test_nodes, const Graph& truth,
                          const HyperParams& base_hparams, const HyperGrid& final_grid,
                          std::uint64_t rng_seed, int workers) {
    return validutil_partial(model, g, train_labels, valid_nodes, oracle, test_nodes, truth,
                             base_hparams, final_grid,
                             static_cast<std::int64_t>(valid_nodes.size()), rng_seed, workers);
}

SweepReport sweep_validation_size(const Model& model, const HyperGrid& grid, const Graph& g,
                                  const Split& split, std::span<const int> sizes,
                                  std::span<const std::uint64_t> seeds, int workers) {
    if (!split.has_subdivision()) throw DomainError("sweep: split has no train/valid");
    if (sizes.empty()) throw DomainError("sweep: no sizes given");
    if (seeds.empty()) throw DomainError("sweep: no seeds given");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1 || static_cast<std::size_t>(sizes[i]) > split.valid.size())
            throw DomainError("sweep: size " + std::to_string(sizes[i]) +
                              " exceeds the validation set (" + std::to_string(split.valid.size()) +
                              ")");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw DomainError("sweep: sizes must be strictly increasing");
    }

    SweepReport report;
    report.permutation_seed = derive_seed(seeds[0], "sweep-permutation");
    report.exposure_order = split.valid;
    Rng perm_rng(report.permutation_seed);
    perm_rng.shuffle(report.exposure_order);

    GraphView view = make_view(g, split.train);
    const LabelAssignment train = assignment_from(view.labels(), split.train);

    for (int size : sizes) {
        std::vector<NodeId> visible(report.exposure_order.begin(),
                                    report.exposure_order.begin() + size);
        AccuracyOracle oracle(g, visible);

        SweepRow row;
        row.validation_size = size;
        row.per_seed_accuracy.resize(seeds.size());
        row.per_seed_winner.resize(seeds.size());

        parallel_for(seeds.size(), workers, [&](std::size_t si) {
            const std::uint64_t seed = seeds[si];
            OracleGridResult best = oracle_grid_search(model, grid, view, train, oracle, seed, 1);
            auto fitted = model.fit(view, train, best.best, derive_seed(seed, "final"));
            row.per_seed_accuracy[si] =
                accuracy(fitted->predict(split.unlabeled), split.unlabeled, g);
            row.per_seed_winner[si] = std::move(best.best);
        });

        row.best_hparams = row.per_seed_winner.front();
        row.mean_test_accuracy = mean(row.per_seed_accuracy);
        row.std_test_accuracy = population_std(row.per_seed_accuracy);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace graphbench
