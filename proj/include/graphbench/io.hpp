#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "graphbench/graph.hpp"
#include "graphbench/subgraph.hpp"

namespace graphbench {

struct LoadStats {
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;
};

/// Loads a graph from TSV files:
///   edge file:    `u<TAB>v` per line, `#` starts a comment line;
///   label file:   `node<TAB>label` per line (defines the node universe, so
///                 isolated nodes are label-file-only nodes);
///   feature file: `node<TAB>dim<TAB>value` triplets; absent -> 0-dim features.
/// Node ids may be arbitrary integers; they are remapped to [0, n) by
/// ascending original id (kept in original_node_ids()). Duplicate edges and
/// self-loops are dropped and counted in `stats`.
Graph load_graph(const std::filesystem::path& edge_path, const std::filesystem::path& label_path,
                 const std::optional<std::filesystem::path>& feature_path = std::nullopt,
                 LoadStats* stats = nullptr);

/// Bundle directory: edges.tsv, labels.tsv, features.tsv (optional) and
/// meta.json (name, n, k, d). meta.json is validated when present.
Graph load_bundle(const std::filesystem::path& dir, LoadStats* stats = nullptr);

/// Writes the canonical bundle for a graph (node ids are the dense local ids).
void write_bundle(const Graph& g, const std::filesystem::path& dir);

/// Sample bundle: a graph bundle for the materialized subgraph plus
/// provenance.json carrying the walk metadata and the local -> parent id map.
void write_sample_bundle(const SubgraphSample& s, const Graph& parent,
                         const std::filesystem::path& dir, const std::string& name,
                         std::uint64_t stream_seed);

/// Rebuilds the subgraph (parent id space) from provenance.json + edges.tsv.
SubgraphSample load_sample_bundle(const std::filesystem::path& dir);

/// All sample_* subdirectories of `dir`, sorted by name.
std::vector<std::filesystem::path> list_sample_dirs(const std::filesystem::path& dir);

} // namespace graphbench
