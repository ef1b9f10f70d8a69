#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphbench/graph.hpp"

namespace graphbench {

/// A subgraph extracted from a parent graph. Local node id i corresponds to
/// parent node parent_ids[i]; parent_ids is sorted ascending and duplicate
/// free. Edges are local index pairs with first < second, sorted.
///
/// Walk-produced samples are connected by construction and carry the walk
/// provenance; vertex samples waive the connectivity invariant and use
/// seed_node = -1, walk_steps = 0.
struct SubgraphSample {
    std::vector<NodeId> parent_ids;
    std::vector<std::pair<NodeId, NodeId>> edges;
    NodeId seed_node = -1; // parent id of the walk start
    std::int64_t walk_steps = 0;
    double node_kl = 0.0;
    double edge_kl = 0.0;

    NodeId node_count() const { return static_cast<NodeId>(parent_ids.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
};

/// Label histogram of the sample's nodes in the parent's class space.
DiscreteDistribution subgraph_node_distribution(const SubgraphSample& s, const Graph& parent);

/// Category histogram of the sample's edges in the parent's class space.
/// Throws DomainError when the sample has no edges.
DiscreteDistribution subgraph_edge_distribution(const SubgraphSample& s, const Graph& parent);

/// True iff every local node touches at least one edge and the edge set is
/// connected (BFS over the local adjacency).
bool subgraph_connected(const SubgraphSample& s);

/// Full structural audit against the parent: sorted unique parent_ids, valid
/// local endpoints, every edge present in the parent, connectivity.
/// Throws IntegrityError on the first violation.
void validate_subgraph(const SubgraphSample& s, const Graph& parent);

/// Materializes the sample as a standalone Graph. Labels are re-densified for
/// the sample's own class set; the parent class ids survive in
/// original_labels() and the parent node ids in original_node_ids().
Graph subgraph_to_graph(const SubgraphSample& s, const Graph& parent);

} // namespace graphbench
