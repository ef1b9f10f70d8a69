#include "graphbench/model.hpp"

#include <algorithm>

#include "graphbench/errors.hpp"
#include "graphbench/proplin.hpp"

namespace graphbench {

std::int64_t HyperParams::get_int(const std::string& name, std::int64_t fallback) const {
    auto it = values_.find(name);
    if (it == values_.end()) return fallback;
    if (const auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
    throw ConfigError("hyper-parameter '" + name + "' is not an integer");
}

double HyperParams::get_double(const std::string& name, double fallback) const {
    auto it = values_.find(name);
    if (it == values_.end()) return fallback;
    if (const auto* d = std::get_if<double>(&it->second)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
    throw ConfigError("hyper-parameter '" + name + "' is not numeric");
}

std::string HyperParams::get_string(const std::string& name, const std::string& fallback) const {
    auto it = values_.find(name);
    if (it == values_.end()) return fallback;
    if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
    throw ConfigError("hyper-parameter '" + name + "' is not a string");
}

void HyperGrid::add(const std::string& name, std::vector<ParamValue> candidates) {
    if (candidates.empty()) throw ConfigError("empty candidate list for '" + name + "'");
    axes_[name] = std::move(candidates);
}

std::size_t HyperGrid::size() const {
    if (axes_.empty()) return 0;
    std::size_t total = 1;
    for (const auto& [name, cands] : axes_) total *= cands.size();
    return total;
}

HyperParams HyperGrid::at(std::size_t index) const {
    if (index >= size()) throw DomainError("grid index out of range");
    // Mixed-radix decode; the last (alphabetically greatest) axis varies fastest.
    HyperParams hp;
    std::size_t stride = size();
    for (const auto& [name, cands] : axes_) {
        stride /= cands.size();
        hp.set(name, cands[index / stride]);
        index %= stride;
    }
    return hp;
}

LabelAssignment assignment_from(const LabelView& labels, std::span<const NodeId> nodes) {
    LabelAssignment out;
    out.reserve(nodes.size());
    for (NodeId u : nodes) out.push_back({u, labels.label_of(u)});
    return out;
}

namespace {

/// Predicts the most frequent class of its training assignment everywhere.
class MajorityModel final : public Model {
public:
    std::string name() const override { return "majority"; }

    std::unique_ptr<FittedModel> fit(const GraphView& g, const LabelAssignment& labels,
                                     const HyperParams&, std::uint64_t) const override {
        if (labels.empty()) throw ModelError("majority: empty label assignment");
        std::vector<std::int64_t> counts(static_cast<std::size_t>(g.class_count()), 0);
        for (const auto& ln : labels) {
            if (ln.label < 0 || ln.label >= g.class_count())
                throw ModelError("majority: label out of range");
            ++counts[ln.label];
        }
        ClassId best = 0;
        for (ClassId c = 1; c < g.class_count(); ++c)
            if (counts[c] > counts[best]) best = c; // ties keep the lowest class id

        class Fit final : public FittedModel {
        public:
            explicit Fit(ClassId c) : c_(c) {}
            std::vector<ClassId> predict(std::span<const NodeId> nodes) const override {
                return std::vector<ClassId>(nodes.size(), c_);
            }

        private:
            ClassId c_;
        };
        return std::make_unique<Fit>(best);
    }
};

} // namespace

std::unique_ptr<Model> make_model(const std::string& name) {
    if (name == "proplin") return std::make_unique<PropLinModel>();
    if (name == "majority") return std::make_unique<MajorityModel>();
    throw ConfigError("unknown model '" + name + "' (available: proplin, majority)");
}

HyperGrid default_grid(const std::string& model_name) {
    HyperGrid grid;
    if (model_name == "proplin") {
        grid.add("depth", {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}, std::int64_t{3}});
        grid.add("dropout", {0.0, 0.5});
        grid.add("epochs", {std::int64_t{200}});
        grid.add("l2", {1e-4});
        grid.add("learning_rate", {0.5});
    } else if (model_name == "majority") {
        grid.add("unused", {std::int64_t{0}});
    } else {
        throw ConfigError("no default grid for model '" + model_name + "'");
    }
    return grid;
}

HyperParams default_hparams(const std::string& model_name) {
    HyperParams hp;
    if (model_name == "proplin") {
        hp.set("depth", std::int64_t{2});
        hp.set("dropout", 0.5);
        hp.set("epochs", std::int64_t{200});
        hp.set("l2", 1e-4);
        hp.set("learning_rate", 0.5);
    } else if (model_name != "majority") {
        throw ConfigError("no default hyper-parameters for model '" + model_name + "'");
    }
    return hp;
}

} // namespace graphbench
