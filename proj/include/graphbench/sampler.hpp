#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "graphbench/graph.hpp"
#include "graphbench/rng.hpp"
#include "graphbench/subgraph.hpp"

namespace graphbench {

/// Additive smoothing applied inside kl_divergence.
inline constexpr double kKlEpsilon = 1e-9;

struct SamplerConfig {
    std::int64_t target_edges = 5000;
    double node_kl_threshold = std::numeric_limits<double>::infinity();
    double edge_kl_threshold = std::numeric_limits<double>::infinity();
    int sample_count = 100;
    int max_attempts_per_sample = 100;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

struct DatasetStats {
    double mean_node_kl = 0.0, std_node_kl = 0.0;
    double mean_edge_kl = 0.0, std_edge_kl = 0.0;
    double overlap_rate = 0.0;
    double coverage_rate = 0.0;
    double mean_nodes = 0.0, std_nodes = 0.0;
};

/// KL(p || q) = sum_c p_c * ln((p_c + eps) / (q_c + eps)) with natural log;
/// terms with p_c = 0 contribute 0 and the result is clamped to >= 0 (the
/// epsilon shift can push it a hair below zero). Throws DomainError when the
/// support sizes differ.
double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Simple random walk from seed_node; each step moves to a uniformly random
/// neighbor (transition probability 1/deg). Every traversed edge goes into a
/// set; the walk stops once the set holds exactly target_edges distinct
/// undirected edges. The node set is the endpoints of the collected edges, so
/// the sample is connected by construction. node_kl/edge_kl are stamped
/// against the parent distributions.
///
/// Throws DomainError for a degree-0 seed and ExhaustionError when the walk
/// exceeds 10,000 * target_edges transitions (component too small).
SubgraphSample random_walk_sample(const Graph& g, NodeId seed_node, std::int64_t target_edges,
                                  Rng& rng);

/// Uniform sample of node_count nodes without replacement plus the induced
/// edges. The baseline the walk sampler replaces: the result may be
/// disconnected and the edge count is whatever induction yields. edge_kl is
/// +inf when no edges are induced.
SubgraphSample vertex_sample(const Graph& g, NodeId node_count, Rng& rng);

struct RejectSampleResult {
    std::vector<SubgraphSample> samples;   // exactly cfg.sample_count, in sample-index order
    std::vector<int> attempts;             // walks drawn per accepted sample
    std::vector<std::uint64_t> stream_seeds; // derived rng stream per sample

    std::int64_t total_attempts() const;
    double acceptance_rate() const;
};

/// Draws uniform positive-degree seed nodes and random walks until each of the
/// cfg.sample_count slots holds a sample with node_kl <= node_kl_threshold and
/// edge_kl <= edge_kl_threshold. Sample i uses an rng stream derived from
/// (cfg.rng_seed, i), so the result is identical for any worker count.
///
/// Throws SamplingInfeasible (with the best divergences seen) when a slot
/// exceeds cfg.max_attempts_per_sample rejections.
RejectSampleResult reject_sample(const Graph& g, const SamplerConfig& cfg, int workers = 1);

struct ThresholdCalibration {
    double node_threshold = 0.0;
    double edge_threshold = 0.0;
    std::vector<double> pilot_node_kl; // raw pilot observations, walk order
    std::vector<double> pilot_edge_kl;
    double joint_acceptance_rate = 0.0; // pilot fraction within both bounds
};

/// Runs pilot_count unthresholded walks and returns the given percentile of
/// the observed node and edge divergences. pct = 100 accepts every pilot
/// sample. Requires pilot_count >= 10 and pct in (0, 100].
ThresholdCalibration calibrate_thresholds(const Graph& g, const SamplerConfig& cfg,
                                          int pilot_count, double pct, int workers = 1);

enum class OverlapDefinition {
    jaccard,            // |Vi n Vj| / |Vi u Vj|
    intersection_over_sum, // |Vi n Vj| / (|Vi| + |Vj|)
};

/// Mean pairwise node-set overlap across all unordered sample pairs.
double overlap_rate(std::span<const SubgraphSample> samples,
                    OverlapDefinition def = OverlapDefinition::jaccard);

/// |union of sample node sets| / n(parent).
double coverage_rate(std::span<const SubgraphSample> samples, const Graph& parent);

/// Aggregates the stamped divergences (mean +- population std), overlap,
/// coverage and node counts. Requires >= 2 samples.
DatasetStats dataset_stats(std::span<const SubgraphSample> samples, const Graph& parent,
                           OverlapDefinition def = OverlapDefinition::jaccard);

} // namespace graphbench
