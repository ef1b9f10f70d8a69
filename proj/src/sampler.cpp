#include "graphbench/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "graphbench/errors.hpp"
#include "graphbench/parallel.hpp"
#include "graphbench/stats.hpp"

namespace graphbench {

void SamplerConfig::validate() const {
    if (target_edges < 1) throw DomainError("target_edges must be >= 1");
    if (sample_count < 1) throw DomainError("sample_count must be >= 1");
    if (max_attempts_per_sample < 1) throw DomainError("max_attempts_per_sample must be >= 1");
    if (node_kl_threshold < 0.0 || std::isnan(node_kl_threshold))
        throw DomainError("node_kl_threshold must be >= 0");
    if (edge_kl_threshold < 0.0 || std::isnan(edge_kl_threshold))
        throw DomainError("edge_kl_threshold must be >= 0");
}

double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    if (p.support_size() != q.support_size())
        throw DomainError("kl_divergence: support sizes differ (" +
                          std::to_string(p.support_size()) + " vs " +
                          std::to_string(q.support_size()) + ")");
    double sum = 0.0;
    for (std::size_t c = 0; c < p.probs.size(); ++c) {
        double pc = p.probs[c];
        if (pc > 0.0) sum += pc * std::log((pc + kKlEpsilon) / (q.probs[c] + kKlEpsilon));
    }
    return sum < 0.0 ? 0.0 : sum;
}

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
}

// Largest per-component edge count; lets the samplers fail fast instead of
// burning the full walk budget on an impossible target.
std::int64_t max_component_edges(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<NodeId> stack;
    std::int64_t best = 0;
    for (NodeId start = 0; start < g.node_count(); ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        stack.assign(1, start);
        std::int64_t half_edges = 0;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            half_edges += g.degree(u);
            for (NodeId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        best = std::max(best, half_edges / 2);
    }
    return best;
}

void require_feasible_target(const Graph& g, std::int64_t target_edges) {
    std::int64_t available = max_component_edges(g);
    if (available < target_edges)
        throw ExhaustionError("no connected component holds " + std::to_string(target_edges) +
                              " edges (largest has " + std::to_string(available) + ")");
}

// Builds the sample from a list of parent-id edge pairs; stamps divergences.
SubgraphSample finish_sample(const std::vector<std::pair<NodeId, NodeId>>& parent_edges,
                             const Graph& parent, NodeId seed_node, std::int64_t walk_steps) {
    SubgraphSample s;
    s.seed_node = seed_node;
    s.walk_steps = walk_steps;

    s.parent_ids.reserve(parent_edges.size() * 2);
    for (auto [u, v] : parent_edges) {
        s.parent_ids.push_back(u);
        s.parent_ids.push_back(v);
    }
    std::sort(s.parent_ids.begin(), s.parent_ids.end());
    s.parent_ids.erase(std::unique(s.parent_ids.begin(), s.parent_ids.end()), s.parent_ids.end());

    auto local = [&](NodeId p) {
        return static_cast<NodeId>(std::lower_bound(s.parent_ids.begin(), s.parent_ids.end(), p) -
                                   s.parent_ids.begin());
    };
    s.edges.reserve(parent_edges.size());
    for (auto [u, v] : parent_edges) {
        NodeId a = local(u), b = local(v);
        if (a > b) std::swap(a, b);
        s.edges.emplace_back(a, b);
    }
    std::sort(s.edges.begin(), s.edges.end());

    s.node_kl = kl_divergence(subgraph_node_distribution(s, parent), node_label_distribution(parent));
    if (!s.edges.empty()) {
        s.edge_kl =
            kl_divergence(subgraph_edge_distribution(s, parent), edge_category_distribution(parent));
    } else {
        s.edge_kl = std::numeric_limits<double>::infinity();
    }
    return s;
}

} // namespace

SubgraphSample random_walk_sample(const Graph& g, NodeId seed_node, std::int64_t target_edges,
                                  Rng& rng) {
    if (target_edges < 1) throw DomainError("target_edges must be >= 1");
    if (seed_node < 0 || seed_node >= g.node_count())
        throw DomainError("seed node out of range");
    if (g.degree(seed_node) == 0)
        throw DomainError("seed node " + std::to_string(seed_node) + " has degree 0");

    const std::int64_t step_budget = 10000 * target_edges;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(target_edges) * 2);
    std::vector<std::pair<NodeId, NodeId>> collected;
    collected.reserve(static_cast<std::size_t>(target_edges));

    NodeId u = seed_node;
    std::int64_t steps = 0;
    while (static_cast<std::int64_t>(collected.size()) < target_edges) {
        if (steps >= step_budget)
            throw ExhaustionError("random walk exhausted its step budget (" +
                                  std::to_string(step_budget) + " steps) before collecting " +
                                  std::to_string(target_edges) + " edges; the seed's component is "
                                  "too small");
        auto nb = g.neighbors(u);
        NodeId v = nb[rng.next_below(nb.size())];
        ++steps;
        if (seen.insert(edge_key(u, v)).second) collected.emplace_back(std::min(u, v), std::max(u, v));
        u = v;
    }
    return finish_sample(collected, g, seed_node, steps);
}

SubgraphSample vertex_sample(const Graph& g, NodeId node_count, Rng& rng) {
    if (node_count < 1) throw DomainError("node_count must be >= 1");
    if (node_count > g.node_count()) throw DomainError("node_count exceeds graph size");

    // Partial Fisher-Yates over the node range.
    std::vector<NodeId> pool(static_cast<std::size_t>(g.node_count()));
    for (NodeId i = 0; i < g.node_count(); ++i) pool[i] = i;
    for (NodeId i = 0; i < node_count; ++i) {
        auto j = i + static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(g.node_count() - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(node_count));
    std::sort(pool.begin(), pool.end());

    SubgraphSample s;
    s.parent_ids = std::move(pool);
    for (NodeId a = 0; a < node_count; ++a) {
        NodeId pu = s.parent_ids[a];
        for (NodeId pv : g.neighbors(pu)) {
            if (pv <= pu) continue;
            auto it = std::lower_bound(s.parent_ids.begin(), s.parent_ids.end(), pv);
            if (it != s.parent_ids.end() && *it == pv)
                s.edges.emplace_back(a, static_cast<NodeId>(it - s.parent_ids.begin()));
        }
    }
    std::sort(s.edges.begin(), s.edges.end());

    s.node_kl = kl_divergence(subgraph_node_distribution(s, g), node_label_distribution(g));
    s.edge_kl = s.edges.empty()
                    ? std::numeric_limits<double>::infinity()
                    : kl_divergence(subgraph_edge_distribution(s, g), edge_category_distribution(g));
    return s;
}

std::int64_t RejectSampleResult::total_attempts() const {
    std::int64_t t = 0;
    for (int a : attempts) t += a;
    return t;
}

double RejectSampleResult::acceptance_rate() const {
    std::int64_t t = total_attempts();
    return t == 0 ? 0.0 : static_cast<double>(samples.size()) / static_cast<double>(t);
}

RejectSampleResult reject_sample(const Graph& g, const SamplerConfig& cfg, int workers) {
    cfg.validate();
    const std::vector<NodeId> seeds = g.positive_degree_nodes();
    if (seeds.empty()) throw DomainError("graph has no positive-degree nodes");
    require_feasible_target(g, cfg.target_edges);

    RejectSampleResult result;
    result.samples.resize(static_cast<std::size_t>(cfg.sample_count));
    result.attempts.resize(static_cast<std::size_t>(cfg.sample_count), 0);
    result.stream_seeds.resize(static_cast<std::size_t>(cfg.sample_count), 0);

    parallel_for(static_cast<std::size_t>(cfg.sample_count), workers, [&](std::size_t i) {
        const std::uint64_t stream = derive_seed(cfg.rng_seed, "sample", i);
        result.stream_seeds[i] = stream;
        Rng rng(stream);
        double best_node = std::numeric_limits<double>::infinity();
        double best_edge = std::numeric_limits<double>::infinity();
        for (int attempt = 1; attempt <= cfg.max_attempts_per_sample; ++attempt) {
            NodeId seed_node = seeds[rng.next_below(seeds.size())];
            SubgraphSample s = random_walk_sample(g, seed_node, cfg.target_edges, rng);
            best_node = std::min(best_node, s.node_kl);
            best_edge = std::min(best_edge, s.edge_kl);
            if (s.node_kl <= cfg.node_kl_threshold && s.edge_kl <= cfg.edge_kl_threshold) {
                result.attempts[i] = attempt;
                result.samples[i] = std::move(s);
                return;
            }
        }
        throw SamplingInfeasible(
            "sample " + std::to_string(i) + ": no walk satisfied the KL thresholds within " +
                std::to_string(cfg.max_attempts_per_sample) + " attempts (best node KL " +
                std::to_string(best_node) + ", best edge KL " + std::to_string(best_edge) + ")",
            best_node, best_edge, cfg.max_attempts_per_sample);
    });
    return result;
}

ThresholdCalibration calibrate_thresholds(const Graph& g, const SamplerConfig& cfg,
                                          int pilot_count, double pct, int workers) {
    if (pilot_count < 10) throw DomainError("pilot_count must be >= 10");
    if (!(pct > 0.0 && pct <= 100.0)) throw DomainError("percentile must lie in (0, 100]");
    const std::vector<NodeId> seeds = g.positive_degree_nodes();
    if (seeds.empty()) throw DomainError("graph has no positive-degree nodes");
    require_feasible_target(g, cfg.target_edges);

    ThresholdCalibration cal;
    cal.pilot_node_kl.resize(static_cast<std::size_t>(pilot_count));
    cal.pilot_edge_kl.resize(static_cast<std::size_t>(pilot_count));

    parallel_for(static_cast<std::size_t>(pilot_count), workers, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.rng_seed, "pilot", i));
        NodeId seed_node = seeds[rng.next_below(seeds.size())];
        SubgraphSample s = random_walk_sample(g, seed_node, cfg.target_edges, rng);
        cal.pilot_node_kl[i] = s.node_kl;
        cal.pilot_edge_kl[i] = s.edge_kl;
    });

    cal.node_threshold = percentile(cal.pilot_node_kl, pct);
    cal.edge_threshold = percentile(cal.pilot_edge_kl, pct);
    int joint = 0;
    for (int i = 0; i < pilot_count; ++i)
        if (cal.pilot_node_kl[i] <= cal.node_threshold && cal.pilot_edge_kl[i] <= cal.edge_threshold)
            ++joint;
    cal.joint_acceptance_rate = static_cast<double>(joint) / static_cast<double>(pilot_count);
    return cal;
}

double overlap_rate(std::span<const SubgraphSample> samples, OverlapDefinition def) {
    if (samples.size() < 2) throw DomainError("overlap_rate needs at least 2 samples");
    double total = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const auto& a = samples[i].parent_ids;
            const auto& b = samples[j].parent_ids;
            std::size_t inter = 0, ia = 0, ib = 0;
            while (ia < a.size() && ib < b.size()) {
                if (a[ia] < b[ib]) ++ia;
                else if (b[ib] < a[ia]) ++ib;
                else { ++inter; ++ia; ++ib; }
            }
            double denom = def == OverlapDefinition::jaccard
                               ? static_cast<double>(a.size() + b.size() - inter)
                               : static_cast<double>(a.size() + b.size());
            total += denom == 0.0 ? 0.0 : static_cast<double>(inter) / denom;
            ++pairs;
        }
    }
    return total / static_cast<double>(pairs);
}

double coverage_rate(std::span<const SubgraphSample> samples, const Graph& parent) {
    if (samples.empty()) throw DomainError("coverage_rate needs at least 1 sample");
    std::vector<char> covered(static_cast<std::size_t>(parent.node_count()), 0);
    std::int64_t count = 0;
    for (const auto& s : samples) {
        for (NodeId p : s.parent_ids) {
            if (!covered[p]) {
                covered[p] = 1;
                ++count;
            }
        }
    }
    return static_cast<double>(count) / static_cast<double>(parent.node_count());
}

DatasetStats dataset_stats(std::span<const SubgraphSample> samples, const Graph& parent,
                           OverlapDefinition def) {
    if (samples.size() < 2) throw DomainError("dataset_stats needs at least 2 samples");
    std::vector<double> node_kls, edge_kls, nodes;
    node_kls.reserve(samples.size());
    edge_kls.reserve(samples.size());
    nodes.reserve(samples.size());
    for (const auto& s : samples) {
        node_kls.push_back(s.node_kl);
        edge_kls.push_back(s.edge_kl);
        nodes.push_back(static_cast<double>(s.node_count()));
    }
    DatasetStats st;
    st.mean_node_kl = mean(node_kls);
    st.std_node_kl = population_std(node_kls);
    st.mean_edge_kl = mean(edge_kls);
    st.std_edge_kl = population_std(edge_kls);
    st.overlap_rate = overlap_rate(samples, def);
    st.coverage_rate = coverage_rate(samples, parent);
    st.mean_nodes = mean(nodes);
    st.std_nodes = population_std(nodes);
    return st;
}

} // namespace graphbench
