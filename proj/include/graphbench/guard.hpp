#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "graphbench/graph.hpp"

namespace graphbench {

/// Access accounting for the label channels the evaluation pipeline exposes.
/// Counters are atomic so concurrent grid points can share one log.
struct AccessLog {
    std::atomic<std::int64_t> permitted_label_reads{0};
    std::atomic<std::int64_t> blocked_label_reads{0};
    std::atomic<std::int64_t> accuracy_queries{0};
};

/// Guarded per-node label access: only nodes in the permitted set may be
/// read. Reading any other node is recorded in the log and throws
/// GuardViolation, so a label leak is an error, not a silent advantage.
class LabelView {
public:
    LabelView(const Graph& g, std::vector<NodeId> permitted, std::shared_ptr<AccessLog> log);

    ClassId label_of(NodeId u) const;
    bool is_permitted(NodeId u) const;
    std::span<const NodeId> permitted_nodes() const { return permitted_; }
    const std::shared_ptr<AccessLog>& log() const { return log_; }
    const Graph& graph() const { return *g_; }

private:
    const Graph* g_;
    std::vector<NodeId> permitted_; // sorted
    std::vector<char> allowed_;     // indexed by node
    std::shared_ptr<AccessLog> log_;
};

/// What a classifier is allowed to see: the full structure and features of a
/// graph, plus labels only through the guarded view. There is deliberately no
/// way to reach Graph::label from here.
class GraphView {
public:
    GraphView(const Graph& g, LabelView labels) : g_(&g), labels_(std::move(labels)) {}

    NodeId node_count() const { return g_->node_count(); }
    std::int64_t edge_count() const { return g_->edge_count(); }
    ClassId class_count() const { return g_->class_count(); }
    std::int32_t feature_dim() const { return g_->feature_dim(); }
    std::int32_t degree(NodeId u) const { return g_->degree(u); }
    std::span<const NodeId> neighbors(NodeId u) const { return g_->neighbors(u); }
    std::span<const FeatureEntry> features(NodeId u) const { return g_->features(u); }

    /// Guarded label channel.
    ClassId label_of(NodeId u) const { return labels_.label_of(u); }
    const LabelView& labels() const { return labels_; }

private:
    const Graph* g_;
    LabelView labels_;
};

/// Convenience: a view whose permitted label set is `permitted`, logging into
/// a fresh or shared AccessLog.
GraphView make_view(const Graph& g, std::vector<NodeId> permitted,
                    std::shared_ptr<AccessLog> log = nullptr);

/// Scores predictions for a fixed hidden node set without revealing any
/// individual label. Every call is counted; the scalar score is the only
/// channel from the hidden labels to the caller.
class ValidationOracle {
public:
    explicit ValidationOracle(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {}
    virtual ~ValidationOracle() = default;

    /// predictions[i] is the predicted label of nodes()[i].
    double score(std::span<const ClassId> predictions) const;

    std::span<const NodeId> nodes() const { return nodes_; }
    std::int64_t query_count() const { return queries_.load(); }
    void attach_log(std::shared_ptr<AccessLog> log) { log_ = std::move(log); }

protected:
    virtual double evaluate(std::span<const ClassId> predictions) const = 0;

private:
    std::vector<NodeId> nodes_;
    mutable std::atomic<std::int64_t> queries_{0};
    std::shared_ptr<AccessLog> log_;
};

/// The standard oracle: fraction of predictions matching the ground truth,
/// where the truth is copied out of the graph once at construction.
class AccuracyOracle final : public ValidationOracle {
public:
    AccuracyOracle(const Graph& truth, std::vector<NodeId> nodes);

protected:
    double evaluate(std::span<const ClassId> predictions) const override;

private:
    std::vector<ClassId> truth_;
};

} // namespace graphbench
