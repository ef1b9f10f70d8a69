#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphbench/graph.hpp"

namespace graphbench {

/// Partition of a graph's nodes into a labeled and an unlabeled (test) set,
/// optionally with a train/validation sub-partition of the labeled set.
/// All four node lists are sorted ascending.
struct Split {
    std::vector<NodeId> labeled;
    std::vector<NodeId> unlabeled;
    std::vector<NodeId> train; // empty until subdivide
    std::vector<NodeId> valid;

    bool has_subdivision() const { return !train.empty() || !valid.empty(); }

    /// labeled/unlabeled disjoint and covering [0, n); train/valid (when
    /// present) disjoint with union = labeled. Throws IntegrityError.
    void validate(NodeId n) const;
};

/// Uniform random partition with |labeled| = round(labeled_fraction * n).
/// Resamples up to 100 times until every class has a labeled node, then
/// throws SplitError. Deterministic per seed.
Split make_split(const Graph& g, double labeled_fraction, std::uint64_t rng_seed);

/// Same, with an explicit labeled-set size.
Split make_split_exact(const Graph& g, NodeId labeled_count, std::uint64_t rng_seed);

/// Splits the labeled set into train/valid with |valid| = round(valid_fraction
/// * |labeled|), clamped so both sides are nonempty. The input must not be
/// subdivided yet.
Split subdivide(const Split& split, double valid_fraction, std::uint64_t rng_seed);

/// Fraction of node_set where the prediction equals the graph's label.
/// predictions[i] belongs to node_set[i]; a size mismatch (a missing
/// prediction) is a DomainError.
double accuracy(std::span<const ClassId> predictions, std::span<const NodeId> node_set,
                const Graph& truth);

} // namespace graphbench
