#include "graphbench/subgraph.hpp"

#include <algorithm>
#include <queue>

#include "graphbench/errors.hpp"

namespace graphbench {

DiscreteDistribution subgraph_node_distribution(const SubgraphSample& s, const Graph& parent) {
    if (s.parent_ids.empty()) throw DomainError("node distribution of empty sample");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(parent.class_count()), 0);
    for (NodeId p : s.parent_ids) ++counts[parent.label(p)];
    return DiscreteDistribution::from_counts(counts);
}

DiscreteDistribution subgraph_edge_distribution(const SubgraphSample& s, const Graph& parent) {
    if (s.edges.empty()) throw DomainError("edge category distribution of edgeless sample");
    std::vector<std::int64_t> counts(edge_category_count(parent.class_count()), 0);
    for (auto [a, b] : s.edges) {
        ClassId la = parent.label(s.parent_ids[a]);
        ClassId lb = parent.label(s.parent_ids[b]);
        ++counts[edge_category_index(la, lb, parent.class_count())];
    }
    return DiscreteDistribution::from_counts(counts);
}

bool subgraph_connected(const SubgraphSample& s) {
    const auto n = static_cast<std::size_t>(s.node_count());
    if (n == 0) return false;

    std::vector<std::vector<NodeId>> adj(n);
    for (auto [a, b] : s.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (adj[i].empty()) return false;

    std::vector<char> seen(n, 0);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n;
}

void validate_subgraph(const SubgraphSample& s, const Graph& parent) {
    const NodeId n = s.node_count();
    for (NodeId i = 0; i < n; ++i) {
        NodeId p = s.parent_ids[i];
        if (p < 0 || p >= parent.node_count())
            throw IntegrityError("parent id out of range: " + std::to_string(p));
        if (i > 0 && s.parent_ids[i - 1] >= p)
            throw IntegrityError("parent_ids not strictly ascending");
    }
    for (auto [a, b] : s.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw IntegrityError("edge endpoint out of local range");
        if (a >= b) throw IntegrityError("edge not canonically oriented");
        if (!parent.has_edge(s.parent_ids[a], s.parent_ids[b]))
            throw IntegrityError("edge (" + std::to_string(s.parent_ids[a]) + ", " +
                                 std::to_string(s.parent_ids[b]) + ") missing in parent");
    }
    if (!subgraph_connected(s)) throw IntegrityError("sample is not connected");
}

Graph subgraph_to_graph(const SubgraphSample& s, const Graph& parent) {
    const NodeId n = s.node_count();
    std::vector<ClassId> labels(static_cast<std::size_t>(n));
    std::vector<std::vector<FeatureEntry>> features(static_cast<std::size_t>(n));
    for (NodeId i = 0; i < n; ++i) {
        NodeId p = s.parent_ids[i];
        labels[i] = parent.label(p);
        auto row = parent.features(p);
        features[i].assign(row.begin(), row.end());
    }
    Graph g = Graph::build(n, s.edges, std::move(labels), std::move(features),
                           parent.feature_dim());
    std::vector<std::int64_t> ids(s.parent_ids.begin(), s.parent_ids.end());
    g.set_original_node_ids(std::move(ids));
    return g;
}

} // namespace graphbench
