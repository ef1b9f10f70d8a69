#include "graphbench/sbm.hpp"

#include <string>

#include "graphbench/errors.hpp"
#include "graphbench/rng.hpp"

namespace graphbench {

Graph generate_sbm(const std::vector<NodeId>& block_sizes, double p_in, double p_out,
                   std::int32_t feature_dim, double feature_signal, std::uint64_t rng_seed) {
    if (block_sizes.empty()) throw DomainError("block_sizes must be nonempty");
    if (!(0.0 <= p_out && p_out <= p_in && p_in <= 1.0))
        throw DomainError("require 0 <= p_out <= p_in <= 1");
    const auto blocks = static_cast<std::int32_t>(block_sizes.size());
    if (feature_dim < blocks) throw DomainError("feature_dim must be >= number of blocks");

    NodeId n = 0;
    for (NodeId s : block_sizes) {
        if (s <= 0)
            throw GenerationError("block of size " + std::to_string(s) + " would leave a class empty");
        n += s;
    }

    std::vector<ClassId> labels(static_cast<std::size_t>(n));
    {
        NodeId u = 0;
        for (std::size_t b = 0; b < block_sizes.size(); ++b)
            for (NodeId i = 0; i < block_sizes[b]; ++i) labels[u++] = static_cast<ClassId>(b);
    }

    Rng edge_rng(derive_seed(rng_seed, "sbm-edges"));
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            double p = labels[u] == labels[v] ? p_in : p_out;
            if (p > 0.0 && edge_rng.next_bool(p)) edges.emplace_back(u, v);
        }
    }

    Rng feat_rng(derive_seed(rng_seed, "sbm-features"));
    std::vector<std::vector<FeatureEntry>> features(static_cast<std::size_t>(n));
    for (NodeId u = 0; u < n; ++u) {
        auto& row = features[u];
        row.reserve(static_cast<std::size_t>(feature_dim - blocks) + 1);
        if (feature_signal != 0.0) row.push_back({labels[u], feature_signal});
        for (std::int32_t d = blocks; d < feature_dim; ++d)
            row.push_back({d, feat_rng.next_normal()});
    }

    Graph g = Graph::build(n, edges, std::move(labels), std::move(features), feature_dim);
    g.set_name("sbm");
    return g;
}

} // namespace graphbench
