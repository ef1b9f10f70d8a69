#include "graphbench/proplin.hpp"

#include <algorithm>
#include <cmath>

#include "graphbench/errors.hpp"
#include "graphbench/rng.hpp"

namespace graphbench {

std::vector<double> propagate_features(const GraphView& g, int depth) {
    const auto n = static_cast<std::size_t>(g.node_count());
    const auto d = static_cast<std::size_t>(g.feature_dim());

    std::vector<double> x(n * d, 0.0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (const auto& e : g.features(u)) x[u * d + e.dim] = e.value;
    if (depth <= 0) return x;

    std::vector<double> inv_sqrt(n);
    for (NodeId u = 0; u < g.node_count(); ++u)
        inv_sqrt[u] = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) + 2.0);

    std::vector<double> next(n * d);
    for (int round = 0; round < depth; ++round) {
        for (NodeId u = 0; u < g.node_count(); ++u) {
            double* out = next.data() + static_cast<std::size_t>(u) * d;
            const double self = 2.0 * inv_sqrt[u] * inv_sqrt[u]; // (A + 2I) diagonal
            const double* xu = x.data() + static_cast<std::size_t>(u) * d;
            for (std::size_t j = 0; j < d; ++j) out[j] = self * xu[j];
            for (NodeId v : g.neighbors(u)) {
                const double w = inv_sqrt[u] * inv_sqrt[v];
                const double* xv = x.data() + static_cast<std::size_t>(v) * d;
                for (std::size_t j = 0; j < d; ++j) out[j] += w * xv[j];
            }
        }
        std::swap(x, next);
    }
    return x;
}

namespace {

class PropLinFit final : public FittedModel {
public:
    PropLinFit(std::vector<double> propagated, std::size_t dim, std::vector<double> weights,
               ClassId k)
        : x_(std::move(propagated)), d_(dim), w_(std::move(weights)), k_(k) {}

    std::vector<ClassId> predict(std::span<const NodeId> nodes) const override {
        std::vector<ClassId> out;
        out.reserve(nodes.size());
        for (NodeId u : nodes) {
            const double* row = x_.data() + static_cast<std::size_t>(u) * d_;
            ClassId best = 0;
            double best_score = score(row, 0);
            for (ClassId c = 1; c < k_; ++c) {
                double s = score(row, c);
                if (s > best_score) { // ties keep the lowest class id
                    best_score = s;
                    best = c;
                }
            }
            out.push_back(best);
        }
        return out;
    }

private:
    double score(const double* row, ClassId c) const {
        const double* wc = w_.data() + static_cast<std::size_t>(c) * (d_ + 1);
        double s = wc[d_]; // bias
        for (std::size_t j = 0; j < d_; ++j) s += wc[j] * row[j];
        return s;
    }

    std::vector<double> x_;
    std::size_t d_;
    std::vector<double> w_; // k rows of (d weights + bias)
    ClassId k_;
};

} // namespace

std::unique_ptr<FittedModel> PropLinModel::fit(const GraphView& g, const LabelAssignment& labels,
                                               const HyperParams& hp, std::uint64_t seed) const {
    if (g.feature_dim() == 0) throw ModelError("proplin: graph has no features");
    if (labels.empty()) throw ModelError("proplin: empty label assignment");

    const auto depth = static_cast<int>(hp.get_int("depth", 2));
    const double lr = hp.get_double("learning_rate", 0.5);
    const auto epochs = static_cast<int>(hp.get_int("epochs", 200));
    const double l2 = hp.get_double("l2", 0.0);
    const double dropout = hp.get_double("dropout", 0.0);
    if (depth < 0) throw ModelError("proplin: depth must be >= 0");
    if (epochs < 1) throw ModelError("proplin: epochs must be >= 1");
    if (!(dropout >= 0.0 && dropout < 1.0)) throw ModelError("proplin: dropout must lie in [0, 1)");

    const auto d = static_cast<std::size_t>(g.feature_dim());
    const auto k = static_cast<std::size_t>(g.class_count());
    const std::size_t m = labels.size();

    std::vector<double> x = propagate_features(g, depth);

    // Training rows (copied so dropout can mask them per epoch).
    std::vector<double> rows(m * d);
    std::vector<ClassId> y(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& ln = labels[i];
        if (ln.node < 0 || ln.node >= g.node_count()) throw ModelError("proplin: node out of range");
        if (ln.label < 0 || ln.label >= g.class_count())
            throw ModelError("proplin: label out of range");
        std::copy_n(x.data() + static_cast<std::size_t>(ln.node) * d, d, rows.data() + i * d);
        y[i] = ln.label;
    }

    std::vector<double> w(k * (d + 1), 0.0);
    std::vector<double> grad(k * (d + 1));
    std::vector<double> logits(k);
    std::vector<double> masked(d);
    Rng rng(seed);
    const double keep = 1.0 - dropout;

    for (int epoch = 0; epoch < epochs; ++epoch) {
        std::fill(grad.begin(), grad.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            const double* row = rows.data() + i * d;
            if (dropout > 0.0) {
                for (std::size_t j = 0; j < d; ++j)
                    masked[j] = rng.next_unit() < keep ? row[j] / keep : 0.0;
                row = masked.data();
            }
            for (std::size_t c = 0; c < k; ++c) {
                const double* wc = w.data() + c * (d + 1);
                double s = wc[d];
                for (std::size_t j = 0; j < d; ++j) s += wc[j] * row[j];
                logits[c] = s;
            }
            double mx = *std::max_element(logits.begin(), logits.end());
            double z = 0.0;
            for (std::size_t c = 0; c < k; ++c) {
                logits[c] = std::exp(logits[c] - mx);
                z += logits[c];
            }
            for (std::size_t c = 0; c < k; ++c) {
                double delta = logits[c] / z - (y[i] == static_cast<ClassId>(c) ? 1.0 : 0.0);
                double* gc = grad.data() + c * (d + 1);
                for (std::size_t j = 0; j < d; ++j) gc[j] += delta * row[j];
                gc[d] += delta;
            }
        }
        const double scale = lr / static_cast<double>(m);
        for (std::size_t c = 0; c < k; ++c) {
            double* wc = w.data() + c * (d + 1);
            const double* gc = grad.data() + c * (d + 1);
            for (std::size_t j = 0; j < d; ++j) wc[j] -= scale * gc[j] + lr * l2 * wc[j];
            wc[d] -= scale * gc[d];
        }
    }

    return std::make_unique<PropLinFit>(std::move(x), d, std::move(w),
                                        static_cast<ClassId>(k));
}

} // namespace graphbench
