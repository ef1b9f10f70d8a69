#pragma once

#include <cstdint>
#include <vector>

#include "graphbench/graph.hpp"

namespace graphbench {

/// Stochastic-block-model graph: node label = block id, each intra-block node
/// pair is an edge with probability p_in, each inter-block pair with p_out.
/// Features are a one-hot block indicator scaled by feature_signal in the
/// first |blocks| coordinates plus independent unit-variance Gaussian noise in
/// the remaining feature_dim - |blocks| coordinates.
///
/// Deterministic for a fixed seed. Throws GenerationError on an empty block
/// and DomainError on out-of-range parameters.
Graph generate_sbm(const std::vector<NodeId>& block_sizes, double p_in, double p_out,
                   std::int32_t feature_dim, double feature_signal, std::uint64_t rng_seed);

} // namespace graphbench
