#include "graphbench/guard.hpp"

#include <algorithm>
#include <string>

#include "graphbench/errors.hpp"

namespace graphbench {

LabelView::LabelView(const Graph& g, std::vector<NodeId> permitted, std::shared_ptr<AccessLog> log)
    : g_(&g), permitted_(std::move(permitted)), log_(std::move(log)) {
    if (!log_) log_ = std::make_shared<AccessLog>();
    std::sort(permitted_.begin(), permitted_.end());
    permitted_.erase(std::unique(permitted_.begin(), permitted_.end()), permitted_.end());
    allowed_.assign(static_cast<std::size_t>(g.node_count()), 0);
    for (NodeId u : permitted_) {
        if (u < 0 || u >= g.node_count()) throw DomainError("permitted node out of range");
        allowed_[u] = 1;
    }
}

bool LabelView::is_permitted(NodeId u) const {
    return u >= 0 && u < g_->node_count() && allowed_[u];
}

ClassId LabelView::label_of(NodeId u) const {
    if (!is_permitted(u)) {
        log_->blocked_label_reads.fetch_add(1);
        throw GuardViolation("label of node " + std::to_string(u) +
                             " is outside the permitted set");
    }
    log_->permitted_label_reads.fetch_add(1);
    return g_->label(u);
}

GraphView make_view(const Graph& g, std::vector<NodeId> permitted,
                    std::shared_ptr<AccessLog> log) {
    if (!log) log = std::make_shared<AccessLog>();
    return GraphView(g, LabelView(g, std::move(permitted), std::move(log)));
}

double ValidationOracle::score(std::span<const ClassId> predictions) const {
    if (predictions.size() != nodes_.size())
        throw DomainError("oracle: prediction count does not match the hidden node set");
    queries_.fetch_add(1);
    if (log_) log_->accuracy_queries.fetch_add(1);
    return evaluate(predictions);
}

AccuracyOracle::AccuracyOracle(const Graph& truth, std::vector<NodeId> nodes)
    : ValidationOracle(std::move(nodes)) {
    truth_.reserve(this->nodes().size());
    for (NodeId u : this->nodes()) {
        if (u < 0 || u >= truth.node_count()) throw DomainError("oracle node out of range");
        truth_.push_back(truth.label(u));
    }
}

double AccuracyOracle::evaluate(std::span<const ClassId> predictions) const {
    if (truth_.empty()) throw DomainError("oracle over an empty node set");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth_.size(); ++i)
        if (predictions[i] == truth_[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(truth_.size());
}

} // namespace graphbench
