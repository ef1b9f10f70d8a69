#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphbench {

using NodeId = std::int32_t;
using ClassId = std::int32_t;

struct FeatureEntry {
    std::int32_t dim = 0;
    double value = 0.0;

    friend bool operator==(const FeatureEntry&, const FeatureEntry&) = default;
};

/// What Graph::build dropped while canonicalizing the edge list.
struct BuildReport {
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;
};

/// Immutable undirected simple graph in compressed sparse row form, with one
/// class label per node and an optional sparse feature row per node.
///
/// Invariants (checked by validate()):
///   - adjacency is symmetric, self-loop free, duplicate free, lists sorted;
///   - labels are dense in [0, k) and every class is populated;
///   - degree(u) == |N(u)|; isolated nodes are allowed.
///
/// Instances never mutate after build() and are safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Canonicalizes and stores the given edge list. Duplicate edges and
    /// self-loops are dropped (counted in `report`). Labels are densified to
    /// [0, k); the original label values survive in original_labels().
    /// Feature rows may be shorter than n; missing rows mean "no features".
    static Graph build(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                       std::vector<ClassId> labels,
                       std::vector<std::vector<FeatureEntry>> features = {},
                       std::int32_t feature_dim = 0,
                       BuildReport* report = nullptr);

    NodeId node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.size()) / 2; }
    ClassId class_count() const { return k_; }
    std::int32_t feature_dim() const { return d_; }

    std::int32_t degree(NodeId u) const {
        return static_cast<std::int32_t>(offsets_[u + 1] - offsets_[u]);
    }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }

    ClassId label(NodeId u) const { return labels_[u]; }
    std::span<const ClassId> labels() const { return labels_; }

    std::span<const FeatureEntry> features(NodeId u) const {
        return {feat_.data() + feat_offsets_[u], feat_.data() + feat_offsets_[u + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    std::vector<NodeId> positive_degree_nodes() const;

    /// Sidecar mappings back to the input id spaces; empty means identity.
    const std::vector<std::int64_t>& original_node_ids() const { return original_node_ids_; }
    const std::vector<std::int64_t>& original_labels() const { return original_labels_; }
    void set_original_node_ids(std::vector<std::int64_t> ids) { original_node_ids_ = std::move(ids); }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Full invariant scan; throws IntegrityError on the first violation.
    void validate() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.d_ == b.d_ && a.offsets_ == b.offsets_ &&
               a.adj_ == b.adj_ && a.labels_ == b.labels_ && a.feat_offsets_ == b.feat_offsets_ &&
               a.feat_ == b.feat_;
    }

private:
    NodeId n_ = 0;
    ClassId k_ = 0;
    std::int32_t d_ = 0;
    std::vector<std::int64_t> offsets_;      // n + 1
    std::vector<NodeId> adj_;                // both directions, lists sorted
    std::vector<ClassId> labels_;            // dense in [0, k)
    std::vector<std::int64_t> feat_offsets_; // n + 1
    std::vector<FeatureEntry> feat_;         // per-row dims sorted ascending
    std::vector<std::int64_t> original_node_ids_;
    std::vector<std::int64_t> original_labels_;
    std::string name_;
};

/// Distribution over a finite category set: entries >= 0, summing to 1.
struct DiscreteDistribution {
    std::vector<double> probs;

    std::size_t support_size() const { return probs.size(); }

    static DiscreteDistribution from_counts(std::span<const std::int64_t> counts);

    /// Throws DomainError unless entries are >= 0 and sum to 1 within 1e-9.
    void validate() const;
};

/// probs[c] = |{v : y_v = c}| / n.
DiscreteDistribution node_label_distribution(const Graph& g);

/// Distribution over unordered endpoint-label pairs {a, b}, a <= b, indexed by
/// edge_category_index. Throws DomainError on an empty edge set.
DiscreteDistribution edge_category_distribution(const Graph& g);

/// Number of unordered label pairs {a, b} with a <= b: k (k + 1) / 2.
std::size_t edge_category_count(ClassId k);

/// Canonical index of the pair {a, b}: categories enumerated in ascending
/// a * k + b order over a <= b.
std::size_t edge_category_index(ClassId a, ClassId b, ClassId k);

/// Keeps the `max_dims` feature dimensions with the highest nonzero-row count
/// (ties broken toward lower dimension ids) and renumbers them by ascending
/// original dimension. Frequency here means the number of nodes with a nonzero
/// entry, not the total value mass.
Graph truncate_features(const Graph& g, std::int32_t max_dims);

} // namespace graphbench
