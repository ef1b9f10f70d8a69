#include "graphbench/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "graphbench/errors.hpp"

namespace graphbench {

Graph Graph::build(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                   std::vector<ClassId> labels,
                   std::vector<std::vector<FeatureEntry>> features,
                   std::int32_t feature_dim, BuildReport* report) {
    if (n < 0) throw IntegrityError("negative node count");
    if (static_cast<NodeId>(labels.size()) != n)
        throw IntegrityError("label count does not match node count");
    if (static_cast<NodeId>(features.size()) > n)
        throw IntegrityError("more feature rows than nodes");

    BuildReport local;
    BuildReport& rep = report ? *report : local;
    rep = BuildReport{};

    // Canonicalize: orient u < v, drop self-loops, sort, dedup.
    std::vector<std::pair<NodeId, NodeId>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IntegrityError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                 std::to_string(v) + ")");
        if (u == v) {
            ++rep.dropped_self_loops;
            continue;
        }
        if (u > v) std::swap(u, v);
        canon.emplace_back(u, v);
    }
    std::sort(canon.begin(), canon.end());
    auto last = std::unique(canon.begin(), canon.end());
    rep.dropped_duplicates = static_cast<std::size_t>(canon.end() - last);
    canon.erase(last, canon.end());

    Graph g;
    g.n_ = n;

    // Densify labels; keep the original values as a sidecar.
    std::map<ClassId, ClassId> remap;
    for (ClassId c : labels) remap.emplace(c, 0);
    ClassId next = 0;
    for (auto& [orig, dense] : remap) dense = next++;
    g.k_ = next;
    g.labels_.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) g.labels_[i] = remap.at(labels[i]);
    g.original_labels_.reserve(remap.size());
    for (const auto& [orig, dense] : remap) g.original_labels_.push_back(orig);

    // CSR adjacency (both directions).
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : canon) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (NodeId u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
    g.adj_.resize(static_cast<std::size_t>(g.offsets_[n]));
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : canon) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (NodeId u = 0; u < n; ++u)
        std::sort(g.adj_.begin() + g.offsets_[u], g.adj_.begin() + g.offsets_[u + 1]);

    // Sparse features; rows sorted by dimension, zero entries dropped.
    features.resize(static_cast<std::size_t>(n));
    g.feat_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::int32_t max_dim = -1;
    for (NodeId u = 0; u < n; ++u) {
        auto& row = features[u];
        std::sort(row.begin(), row.end(),
                  [](const FeatureEntry& a, const FeatureEntry& b) { return a.dim < b.dim; });
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].dim < 0) throw IntegrityError("negative feature dimension");
            if (i > 0 && row[i].dim == row[i - 1].dim)
                throw IntegrityError("duplicate feature dimension for node " + std::to_string(u));
            max_dim = std::max(max_dim, row[i].dim);
        }
    }
    g.d_ = std::max(feature_dim, max_dim + 1);
    for (NodeId u = 0; u < n; ++u) {
        for (const auto& e : features[u])
            if (e.value != 0.0) g.feat_.push_back(e);
        g.feat_offsets_[u + 1] = static_cast<std::int64_t>(g.feat_.size());
    }
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<NodeId> Graph::positive_degree_nodes() const {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < n_; ++u)
        if (degree(u) > 0) out.push_back(u);
    return out;
}

void Graph::validate() const {
    if (static_cast<NodeId>(labels_.size()) != n_) throw IntegrityError("label array size mismatch");
    if (offsets_.size() != static_cast<std::size_t>(n_) + 1)
        throw IntegrityError("offset array size mismatch");
    std::vector<std::int64_t> class_counts(static_cast<std::size_t>(k_), 0);
    for (NodeId u = 0; u < n_; ++u) {
        if (labels_[u] < 0 || labels_[u] >= k_)
            throw IntegrityError("label out of range at node " + std::to_string(u));
        ++class_counts[labels_[u]];
        auto nb = neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            NodeId v = nb[i];
            if (v < 0 || v >= n_) throw IntegrityError("neighbor out of range");
            if (v == u) throw IntegrityError("self-loop stored at node " + std::to_string(u));
            if (i > 0 && nb[i - 1] >= v)
                throw IntegrityError("neighbor list not strictly ascending at node " +
                                     std::to_string(u));
            if (!has_edge(v, u))
                throw IntegrityError("asymmetric edge (" + std::to_string(u) + ", " +
                                     std::to_string(v) + ")");
        }
        if (degree(u) != static_cast<std::int32_t>(nb.size()))
            throw IntegrityError("degree cache mismatch");
    }
    for (ClassId c = 0; c < k_; ++c)
        if (class_counts[c] == 0)
            throw IntegrityError("class " + std::to_string(c) + " has no nodes (k not tight)");
    for (NodeId u = 0; u < n_; ++u)
        for (const auto& e : features(u))
            if (e.dim < 0 || e.dim >= d_) throw IntegrityError("feature dimension out of range");
}

DiscreteDistribution DiscreteDistribution::from_counts(std::span<const std::int64_t> counts) {
    std::int64_t total = 0;
    for (auto c : counts) {
        if (c < 0) throw DomainError("negative count");
        total += c;
    }
    if (total == 0) throw DomainError("empty distribution (all counts zero)");
    DiscreteDistribution d;
    d.probs.reserve(counts.size());
    for (auto c : counts) d.probs.push_back(static_cast<double>(c) / static_cast<double>(total));
    return d;
}

void DiscreteDistribution::validate() const {
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw DomainError("negative probability entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw DomainError("probabilities do not sum to 1");
}

DiscreteDistribution node_label_distribution(const Graph& g) {
    if (g.node_count() == 0) throw DomainError("node distribution of empty graph");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.class_count()), 0);
    for (NodeId u = 0; u < g.node_count(); ++u) ++counts[g.label(u)];
    return DiscreteDistribution::from_counts(counts);
}

std::size_t edge_category_count(ClassId k) {
    return static_cast<std::size_t>(k) * (static_cast<std::size_t>(k) + 1) / 2;
}

std::size_t edge_category_index(ClassId a, ClassId b, ClassId k) {
    if (a > b) std::swap(a, b);
    // Categories {a, b}, a <= b, enumerated in ascending a*k+b order:
    // block for a starts after the k-a, k-a+1, ..., k-1 earlier rows.
    auto au = static_cast<std::size_t>(a);
    auto ku = static_cast<std::size_t>(k);
    return au * ku - au * (au - 1) / 2 + static_cast<std::size_t>(b - a);
}

DiscreteDistribution edge_category_distribution(const Graph& g) {
    if (g.edge_count() == 0) throw DomainError("edge category distribution of edgeless graph");
    std::vector<std::int64_t> counts(edge_category_count(g.class_count()), 0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) ++counts[edge_category_index(g.label(u), g.label(v), g.class_count())];
    return DiscreteDistribution::from_counts(counts);
}

Graph truncate_features(const Graph& g, std::int32_t max_dims) {
    if (max_dims < 0) throw DomainError("max_dims must be nonnegative");
    const NodeId n = g.node_count();

    std::vector<std::pair<std::int64_t, std::int32_t>> freq; // (-row count, dim)
    {
        std::vector<std::int64_t> rows(static_cast<std::size_t>(g.feature_dim()), 0);
        for (NodeId u = 0; u < n; ++u)
            for (const auto& e : g.features(u)) ++rows[e.dim];
        for (std::int32_t d = 0; d < g.feature_dim(); ++d)
            if (rows[d] > 0) freq.emplace_back(-rows[d], d);
    }
    std::sort(freq.begin(), freq.end());
    if (static_cast<std::int32_t>(freq.size()) > max_dims) freq.resize(max_dims);

    std::vector<std::int32_t> kept;
    kept.reserve(freq.size());
    for (auto& [neg, d] : freq) kept.push_back(d);
    std::sort(kept.begin(), kept.end());
    std::vector<std::int32_t> remap(static_cast<std::size_t>(g.feature_dim()), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) remap[kept[i]] = static_cast<std::int32_t>(i);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);

    std::vector<std::vector<FeatureEntry>> features(static_cast<std::size_t>(n));
    for (NodeId u = 0; u < n; ++u)
        for (const auto& e : g.features(u))
            if (remap[e.dim] >= 0) features[u].push_back({remap[e.dim], e.value});

    std::vector<ClassId> labels(g.labels().begin(), g.labels().end());
    Graph out = Graph::build(n, edges, std::move(labels), std::move(features),
                             std::min<std::int32_t>(max_dims, static_cast<std::int32_t>(kept.size())));
    out.set_name(g.name());
    return out;
}

} // namespace graphbench
