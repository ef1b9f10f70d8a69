#include "graphbench/stability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "graphbench/errors.hpp"
#include "graphbench/parallel.hpp"
#include "graphbench/rng.hpp"
#include "graphbench/stats.hpp"

namespace graphbench {

RankingSequence make_ranking(std::uint64_t seed, std::span<const std::string> names,
                             std::span<const double> accuracies) {
    if (names.size() != accuracies.size()) throw DomainError("ranking: size mismatch");
    std::vector<std::size_t> order(names.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (accuracies[a] != accuracies[b]) return accuracies[a] > accuracies[b];
        return names[a] < names[b];
    });
    RankingSequence seq;
    seq.seed = seed;
    for (std::size_t i : order) {
        seq.models.push_back(names[i]);
        seq.accuracies.push_back(accuracies[i]);
    }
    return seq;
}

namespace {

// Inversions of a permutation array by merge sort.
std::int64_t count_inversions(std::vector<std::size_t>& a, std::vector<std::size_t>& scratch,
                              std::size_t lo, std::size_t hi) {
    if (hi - lo <= 1) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t inv = count_inversions(a, scratch, lo, mid) + count_inversions(a, scratch, mid, hi);
    std::merge(a.begin() + lo, a.begin() + mid, a.begin() + mid, a.begin() + hi,
               scratch.begin() + lo);
    // Count pairs (left element > right element) during a second pass.
    std::size_t i = lo, j = mid;
    while (i < mid && j < hi) {
        if (a[i] <= a[j]) {
            ++i;
        } else {
            inv += static_cast<std::int64_t>(mid - i);
            ++j;
        }
    }
    std::copy(scratch.begin() + lo, scratch.begin() + hi, a.begin() + lo);
    return inv;
}

} // namespace

std::int64_t inversion_number(const RankingSequence& reference,
                              std::span<const RankingSequence> others) {
    std::map<std::string, std::size_t> ref_rank;
    for (std::size_t i = 0; i < reference.models.size(); ++i) {
        if (!ref_rank.emplace(reference.models[i], i).second)
            throw DomainError("reference ranks a model twice: " + reference.models[i]);
    }

    std::int64_t total = 0;
    std::vector<std::size_t> ranks, scratch;
    for (const auto& seq : others) {
        if (seq.models.size() != reference.models.size())
            throw DomainError("sequence ranks a different number of models");
        ranks.clear();
        for (const auto& m : seq.models) {
            auto it = ref_rank.find(m);
            if (it == ref_rank.end()) throw DomainError("sequence ranks unknown model: " + m);
            ranks.push_back(it->second);
        }
        if (std::set<std::size_t>(ranks.begin(), ranks.end()).size() != ranks.size())
            throw DomainError("sequence ranks a model twice");
        scratch.assign(ranks.size(), 0);
        total += count_inversions(ranks, scratch, 0, ranks.size());
    }
    return total;
}

StabilityResult stability_experiment(std::span<const RankedModel> models,
                                     std::span<const Graph> samples,
                                     std::span<const std::uint64_t> seeds,
                                     double labeled_fraction, double valid_fraction, int workers) {
    if (models.empty()) throw DomainError("stability: no models");
    if (seeds.empty()) throw DomainError("stability: no seeds");

    StabilityResult result;
    result.mean_accuracy.assign(seeds.size(), std::vector<double>(models.size(), 0.0));

    std::vector<std::string> names;
    for (const auto& m : models) names.push_back(m.name);

    for (std::size_t si = 0; si < seeds.size(); ++si) {
        for (std::size_t mi = 0; mi < models.size(); ++mi) {
            EvaluationReport rep =
                pipeline_evaluate(*models[mi].model, models[mi].grid, samples, labeled_fraction,
                                  valid_fraction, seeds[si], workers);
            result.mean_accuracy[si][mi] = rep.mean;
        }
        result.rankings.push_back(make_ranking(seeds[si], names, result.mean_accuracy[si]));
    }

    result.inversions = inversion_number(
        result.rankings.front(),
        std::span<const RankingSequence>(result.rankings).subspan(1));
    return result;
}

VarianceResult variance_comparison(const Model& model, const HyperGrid& grid,
                                   std::span<const Graph> samples, const Graph& single_graph,
                                   std::span<const std::uint64_t> split_seeds,
                                   std::uint64_t iid_seed, double labeled_fraction,
                                   double valid_fraction, const SplitStyle& splits_style,
                                   int workers) {
    if (split_seeds.empty()) throw DomainError("variance: no split seeds");

    VarianceResult result;

    EvaluationReport rep = pipeline_evaluate(model, grid, samples, labeled_fraction,
                                             valid_fraction, iid_seed, workers);
    result.iid_accuracies = rep.per_graph_accuracy;
    result.std_iid = rep.std;

    result.split_accuracies.resize(split_seeds.size());
    parallel_for(split_seeds.size(), workers, [&](std::size_t si) {
        const std::uint64_t seed = split_seeds[si];
        Split base = splits_style.labeled_count > 0
                         ? make_split_exact(single_graph, splits_style.labeled_count,
                                            derive_seed(seed, "split"))
                         : make_split(single_graph, splits_style.labeled_fraction,
                                      derive_seed(seed, "split"));
        Split split = subdivide(base, splits_style.valid_fraction, derive_seed(seed, "subdivide"));
        GraphView view = make_view(single_graph, split.labeled);

        GridSearchResult best =
            grid_search(model, grid, view, split, derive_seed(seed, "search"), 1);
        LabelAssignment full = assignment_from(view.labels(), split.labeled);
        auto fitted = model.fit(view, full, best.best, derive_seed(seed, "final"));
        result.split_accuracies[si] =
            accuracy(fitted->predict(split.unlabeled), split.unlabeled, single_graph);
    });
    result.std_splits = population_std(result.split_accuracies);
    return result;
}

} // namespace graphbench
