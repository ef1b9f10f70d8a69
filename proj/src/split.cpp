#include "graphbench/split.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphbench/errors.hpp"
#include "graphbench/rng.hpp"

namespace graphbench {

void Split::validate(NodeId n) const {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    auto mark = [&](const std::vector<NodeId>& nodes, const char* which) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            NodeId u = nodes[i];
            if (u < 0 || u >= n) throw IntegrityError(std::string(which) + ": node out of range");
            if (i > 0 && nodes[i - 1] >= u)
                throw IntegrityError(std::string(which) + ": not strictly ascending");
            if (seen[u]) throw IntegrityError(std::string(which) + ": node in both sets");
            seen[u] = 1;
        }
    };
    mark(labeled, "labeled");
    mark(unlabeled, "unlabeled");
    if (static_cast<NodeId>(labeled.size() + unlabeled.size()) != n)
        throw IntegrityError("labeled + unlabeled does not cover all nodes");
    if (has_subdivision()) {
        std::vector<NodeId> merged(train);
        merged.insert(merged.end(), valid.begin(), valid.end());
        std::sort(merged.begin(), merged.end());
        if (merged != labeled) throw IntegrityError("train + valid != labeled");
        if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
            throw IntegrityError("train and valid overlap");
    }
}

Split make_split_exact(const Graph& g, NodeId labeled_count, std::uint64_t rng_seed) {
    const NodeId n = g.node_count();
    if (labeled_count < g.class_count())
        throw SplitError("labeled set smaller than the class count");
    if (labeled_count >= n) throw SplitError("labeled set must leave unlabeled nodes");

    Rng rng(rng_seed);
    std::vector<NodeId> order(static_cast<std::size_t>(n));
    for (NodeId i = 0; i < n; ++i) order[i] = i;

    for (int attempt = 0; attempt < 100; ++attempt) {
        rng.shuffle(order);
        std::vector<char> present(static_cast<std::size_t>(g.class_count()), 0);
        ClassId covered = 0;
        for (NodeId i = 0; i < labeled_count; ++i) {
            ClassId c = g.label(order[i]);
            if (!present[c]) {
                present[c] = 1;
                ++covered;
            }
        }
        if (covered == g.class_count()) {
            Split s;
            s.labeled.assign(order.begin(), order.begin() + labeled_count);
            s.unlabeled.assign(order.begin() + labeled_count, order.end());
            std::sort(s.labeled.begin(), s.labeled.end());
            std::sort(s.unlabeled.begin(), s.unlabeled.end());
            return s;
        }
    }
    throw SplitError("could not cover every class with " + std::to_string(labeled_count) +
                     " labeled nodes after 100 resamples");
}

Split make_split(const Graph& g, double labeled_fraction, std::uint64_t rng_seed) {
    if (!(labeled_fraction > 0.0 && labeled_fraction < 1.0))
        throw SplitError("labeled_fraction must lie in (0, 1)");
    auto count = static_cast<NodeId>(
        std::llround(labeled_fraction * static_cast<double>(g.node_count())));
    return make_split_exact(g, count, rng_seed);
}

Split subdivide(const Split& split, double valid_fraction, std::uint64_t rng_seed) {
    if (split.has_subdivision()) throw SplitError("split already has a train/valid subdivision");
    if (!(valid_fraction > 0.0 && valid_fraction < 1.0))
        throw SplitError("valid_fraction must lie in (0, 1)");
    const auto l = static_cast<NodeId>(split.labeled.size());
    if (l < 2) throw SplitError("labeled set too small to subdivide");

    auto valid_count =
        static_cast<NodeId>(std::llround(valid_fraction * static_cast<double>(l)));
    valid_count = std::clamp<NodeId>(valid_count, 1, l - 1);

    Rng rng(rng_seed);
    std::vector<NodeId> order = split.labeled;
    rng.shuffle(order);

    Split out = split;
    out.valid.assign(order.begin(), order.begin() + valid_count);
    out.train.assign(order.begin() + valid_count, order.end());
    std::sort(out.valid.begin(), out.valid.end());
    std::sort(out.train.begin(), out.train.end());
    return out;
}

double accuracy(std::span<const ClassId> predictions, std::span<const NodeId> node_set,
                const Graph& truth) {
    if (predictions.size() != node_set.size())
        throw DomainError("accuracy: prediction missing for some nodes");
    if (node_set.empty()) throw DomainError("accuracy over an empty node set");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < node_set.size(); ++i)
        if (predictions[i] == truth.label(node_set[i])) ++hits;
    return static_cast<double>(hits) / static_cast<double>(node_set.size());
}

} // namespace graphbench
