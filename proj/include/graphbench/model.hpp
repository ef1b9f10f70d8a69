#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "graphbench/guard.hpp"

namespace graphbench {

using ParamValue = std::variant<std::int64_t, double, std::string>;

/// A concrete hyper-parameter setting: named integer / real / categorical
/// values. Keys are kept sorted so enumeration and serialization are stable.
class HyperParams {
public:
    HyperParams() = default;

    void set(const std::string& name, ParamValue value) { values_[name] = std::move(value); }
    bool has(const std::string& name) const { return values_.count(name) > 0; }

    /// Typed getters with a default for absent keys. get_double coerces
    /// integer-typed values.
    std::int64_t get_int(const std::string& name, std::int64_t fallback) const;
    double get_double(const std::string& name, double fallback) const;
    std::string get_string(const std::string& name, const std::string& fallback) const;

    const std::map<std::string, ParamValue>& values() const { return values_; }

    friend bool operator==(const HyperParams&, const HyperParams&) = default;

private:
    std::map<std::string, ParamValue> values_;
};

/// Per-name finite candidate lists. The Cartesian product is enumerated with
/// names in alphabetical order (the map order) and candidates in listed
/// order; the alphabetically first name varies slowest.
class HyperGrid {
public:
    HyperGrid() = default;

    void add(const std::string& name, std::vector<ParamValue> candidates);

    bool empty() const { return axes_.empty(); }
    std::size_t size() const; // product of candidate counts
    HyperParams at(std::size_t index) const;

    const std::map<std::string, std::vector<ParamValue>>& axes() const { return axes_; }

private:
    std::map<std::string, std::vector<ParamValue>> axes_;
};

struct LabeledNode {
    NodeId node;
    ClassId label;
};

/// The training labels handed to a classifier. This is the only label channel
/// an honest model needs; entries may be pseudo-labels rather than truth.
using LabelAssignment = std::vector<LabeledNode>;

/// Reads the labels of `nodes` through the guarded view (so the reads are
/// audited) and packages them for Model::fit.
LabelAssignment assignment_from(const LabelView& labels, std::span<const NodeId> nodes);

/// A trained classifier. Everything needed for inference is captured at fit
/// time; predict never touches labels.
class FittedModel {
public:
    virtual ~FittedModel() = default;

    /// One label in [0, k) per requested node.
    virtual std::vector<ClassId> predict(std::span<const NodeId> nodes) const = 0;
};

/// The contract every pluggable classifier satisfies: fit is deterministic
/// given (inputs, seed), predictions stay in [0, k), and distinct fitted
/// instances are safe to use concurrently.
class Model {
public:
    virtual ~Model() = default;

    virtual std::string name() const = 0;
    virtual std::unique_ptr<FittedModel> fit(const GraphView& g, const LabelAssignment& labels,
                                             const HyperParams& hp, std::uint64_t seed) const = 0;
};

/// Built-in models by name: "proplin" (propagated-features linear classifier)
/// and "majority" (constant majority-class baseline). Unknown names throw
/// ConfigError.
std::unique_ptr<Model> make_model(const std::string& name);

/// Sensible search grid / single setting for a built-in model.
HyperGrid default_grid(const std::string& model_name);
HyperParams default_hparams(const std::string& model_name);

} // namespace graphbench
