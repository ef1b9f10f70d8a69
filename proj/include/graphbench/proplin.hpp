#pragma once

#include <vector>

#include "graphbench/model.hpp"

namespace graphbench {

/// Dense, row-major copy of the view's features after `depth` rounds of
/// symmetric-normalized propagation with doubled self-loops:
///   S = D~^{-1/2} (A + 2 I) D~^{-1/2},  d~_u = deg(u) + 2,  X~ = S^depth X.
/// depth = 0 returns the raw features densified. Exposed for tests.
std::vector<double> propagate_features(const GraphView& g, int depth);

/// Reference classifier: feature propagation (above) followed by a
/// multinomial logistic head trained by full-batch gradient descent on the
/// propagated rows of the assigned nodes.
///
/// Hyper-parameters (all optional, defaults in parentheses):
///   depth (2)        propagation rounds, int >= 0
///   learning_rate (0.5)
///   epochs (200)     full-batch steps, int >= 1
///   l2 (0)           ridge strength on the weights (bias unregularized)
///   dropout (0)      entry dropout on the training rows, rate in [0, 1)
///
/// Throws ModelError on a zero-feature graph or an empty assignment.
class PropLinModel final : public Model {
public:
    std::string name() const override { return "proplin"; }

    std::unique_ptr<FittedModel> fit(const GraphView& g, const LabelAssignment& labels,
                                     const HyperParams& hp, std::uint64_t seed) const override;
};

} // namespace graphbench
