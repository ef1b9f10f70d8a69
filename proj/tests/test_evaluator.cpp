#include <doctest.h>

#include <atomic>
#include <memory>

#include "graphbench/errors.hpp"
#include "graphbench/evaluator.hpp"
#include "graphbench/rng.hpp"
#include "graphbench/sbm.hpp"

using namespace graphbench;

namespace {

// Labels alternate 0/1 so a mock can hit a target accuracy by construction.
Graph parity_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    std::vector<ClassId> labels(static_cast<std::size_t>(n));
    for (NodeId u = 0; u < n; ++u) labels[u] = u % 2;
    std::vector<std::vector<FeatureEntry>> feats(static_cast<std::size_t>(n));
    for (NodeId u = 0; u < n; ++u) feats[u] = {{0, 1.0}};
    return Graph::build(n, std::move(edges), std::move(labels), std::move(feats), 1);
}

// Predicts the parity label for a node-dependent `quality` percent of nodes
// and the opposite elsewhere; validation accuracy is a deterministic,
// monotone function of the hyper-parameter.
class QualityModel final : public Model {
public:
    std::string name() const override { return "quality-mock"; }

    std::unique_ptr<FittedModel> fit(const GraphView&, const LabelAssignment&,
                                     const HyperParams& hp, std::uint64_t) const override {
        class Fit final : public FittedModel {
        public:
            explicit Fit(std::int64_t quality) : quality_(quality) {}
            std::vector<ClassId> predict(std::span<const NodeId> nodes) const override {
                std::vector<ClassId> out;
                for (NodeId u : nodes) {
                    ClassId truth = u % 2;
                    bool correct = (u * 7 + 13) % 100 < quality_;
                    out.push_back(correct ? truth : 1 - truth);
                }
                return out;
            }

        private:
            std::int64_t quality_;
        };
        return std::make_unique<Fit>(hp.get_int("quality", 0));
    }
};

// Records the assignment size of every fit call.
class RecordingModel final : public Model {
public:
    std::string name() const override { return "recording-mock"; }

    std::unique_ptr<FittedModel> fit(const GraphView&, const LabelAssignment& labels,
                                     const HyperParams&, std::uint64_t) const override {
        sizes_.push_back(labels.size());
        class Fit final : public FittedModel {
        public:
            std::vector<ClassId> predict(std::span<const NodeId> nodes) const override {
                return std::vector<ClassId>(nodes.size(), 0);
            }
        };
        return std::make_unique<Fit>();
    }

    mutable std::vector<std::size_t> sizes_;
};

// Deliberately reads a label it was not granted.
class LeakyModel final : public Model {
public:
    std::string name() const override { return "leaky-mock"; }

    std::unique_ptr<FittedModel> fit(const GraphView& g, const LabelAssignment& labels,
                                     const HyperParams&, std::uint64_t) const override {
        for (NodeId u = 0; u < g.node_count(); ++u) {
            if (!g.labels().is_permitted(u)) {
                g.label_of(u); // throws GuardViolation
                break;
            }
        }
        (void)labels;
        class Fit final : public FittedModel {
        public:
            std::vector<ClassId> predict(std::span<const NodeId> nodes) const override {
                return std::vector<ClassId>(nodes.size(), 0);
            }
        };
        return std::make_unique<Fit>();
    }
};

HyperGrid quality_grid(std::vector<std::int64_t> qualities) {
    HyperGrid grid;
    std::vector<ParamValue> cands(qualities.begin(), qualities.end());
    grid.add("quality", cands);
    return grid;
}

} // namespace

TEST_SUITE("grid_search") {

TEST_CASE("single-config grid returns that config") {
    Graph g = parity_graph(40);
    Split split = subdivide(make_split(g, 0.5, 1), 0.5, 2);
    GraphView view = make_view(g, split.labeled);
    QualityModel model;
    auto grid = quality_grid({70});
    GridSearchResult r = grid_search(model, grid, view, split, 3);
    CHECK(r.best.get_int("quality", -1) == 70);
    CHECK(r.best_index == 0);
}

TEST_CASE("winner beats every configuration (exhaustive re-scoring)") {
    Graph g = parity_graph(60);
    Split split = subdivide(make_split(g, 0.5, 4), 0.5, 5);
    GraphView view = make_view(g, split.labeled);
    QualityModel model;
    auto grid = quality_grid({10, 85, 40, 60});
    GridSearchResult r = grid_search(model, grid, view, split, 7);

    // Brute-force oracle: refit and rescore every config independently.
    for (std::size_t j = 0; j < grid.size(); ++j) {
        auto fitted = model.fit(view, {}, grid.at(j), 0);
        auto preds = fitted->predict(split.valid);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < preds.size(); ++i)
            if (preds[i] == g.label(split.valid[i])) ++hits;
        double acc = static_cast<double>(hits) / static_cast<double>(split.valid.size());
        CHECK(acc == doctest::Approx(r.all_accuracies[j]));
        CHECK(r.valid_accuracy >= acc);
    }
    CHECK(r.best.get_int("quality", -1) == 85);
}

TEST_CASE("a dominated config never changes the winner") {
    Graph g = parity_graph(60);
    Split split = subdivide(make_split(g, 0.5, 4), 0.5, 5);
    GraphView view = make_view(g, split.labeled);
    QualityModel model;
    GridSearchResult before = grid_search(model, quality_grid({85, 40}), view, split, 7);
    GridSearchResult after = grid_search(model, quality_grid({85, 40, 0}), view, split, 7);
    CHECK(before.best.get_int("quality", -1) == after.best.get_int("quality", -1));
    CHECK(before.valid_accuracy == doctest::Approx(after.valid_accuracy));
}

TEST_CASE("candidate order only matters within tie groups") {
    Graph g = parity_graph(60);
    Split split = subdivide(make_split(g, 0.5, 4), 0.5, 5);
    GraphView view = make_view(g, split.labeled);
    QualityModel model;
    GridSearchResult a = grid_search(model, quality_grid({10, 85, 40}), view, split, 7);
    GridSearchResult b = grid_search(model, quality_grid({85, 40, 10}), view, split, 7);
    CHECK(a.valid_accuracy == doctest::Approx(b.valid_accuracy));
    CHECK(a.best.get_int("quality", -1) == b.best.get_int("quality", -1));
    // Exact ties resolve to the earliest enumeration position.
    GridSearchResult tie = grid_search(model, quality_grid({85, 85}), view, split, 7);
    CHECK(tie.best_index == 0);
}

TEST_CASE("empty grid and missing subdivision are domain errors") {
    Graph g = parity_graph(20);
    Split split = make_split(g, 0.5, 1);
    GraphView view = make_view(g, split.labeled);
    QualityModel model;
    CHECK_THROWS_AS(grid_search(model, HyperGrid{}, view, split, 1), DomainError);
    auto grid = quality_grid({50});
    CHECK_THROWS_AS(grid_search(model, grid, view, split, 1), DomainError);
}

} // TEST_SUITE("grid_search")

TEST_SUITE("pipeline") {

TEST_CASE("majority model scores the test-set frequency of the labeled majority") {
    std::vector<Graph> samples;
    samples.push_back(generate_sbm({12, 20}, 0.4, 0.1, 2, 1.0, 3));
    samples.push_back(generate_sbm({25, 10}, 0.4, 0.1, 2, 1.0, 4));
    auto model = make_model("majority");
    HyperGrid grid;
    grid.add("unused", {std::int64_t{0}});
    const std::uint64_t seed = 17;
    EvaluationReport rep = pipeline_evaluate(*model, grid, samples, 0.3, 0.5, seed);

    for (std::size_t i = 0; i < samples.size(); ++i) {
        // Recompute the split the pipeline used (same derived seeds).
        Split split = make_split(samples[i], 0.3, derive_seed(seed, "split"));
        std::vector<std::int64_t> counts(2, 0);
        for (NodeId u : split.labeled) ++counts[samples[i].label(u)];
        ClassId majority = counts[1] > counts[0] ? 1 : 0;
        std::int64_t hits = 0;
        for (NodeId u : split.unlabeled)
            if (samples[i].label(u) == majority) ++hits;
        double expected = static_cast<double>(hits) / static_cast<double>(split.unlabeled.size());
        CHECK(rep.per_graph_accuracy[i] == doctest::Approx(expected));
    }
}

TEST_CASE("the final retrain sees more labels than the search fits") {
    std::vector<Graph> samples{generate_sbm({20, 20}, 0.3, 0.1, 2, 1.0, 9)};
    RecordingModel model;
    HyperGrid grid;
    grid.add("a", {std::int64_t{0}, std::int64_t{1}});
    pipeline_evaluate(model, grid, samples, 0.4, 0.5, 21);
    REQUIRE(model.sizes_.size() == 3); // 2 grid fits + 1 final fit
    CHECK(model.sizes_[0] == model.sizes_[1]);
    CHECK(model.sizes_[2] > model.sizes_[0]); // full labeled > train subset
}

TEST_CASE("bit-for-bit reproducible and worker-count independent") {
    std::vector<Graph> samples;
    for (std::uint64_t s = 0; s < 4; ++s)
        samples.push_back(generate_sbm({15, 15}, 0.3, 0.08, 4, 1.0, s));
    auto model = make_model("proplin");
    HyperGrid grid;
    grid.add("depth", {std::int64_t{0}, std::int64_t{1}});
    grid.add("epochs", {std::int64_t{40}});
    grid.add("dropout", {0.4});

    EvaluationReport a = pipeline_evaluate(*model, grid, samples, 0.4, 0.5, 5, 1);
    EvaluationReport b = pipeline_evaluate(*model, grid, samples, 0.4, 0.5, 5, 4);
    EvaluationReport c = pipeline_evaluate(*model, grid, samples, 0.4, 0.5, 5, 1);
    CHECK(a.per_graph_accuracy == b.per_graph_accuracy);
    CHECK(a.per_graph_accuracy == c.per_graph_accuracy);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(a.best_hparams_per_graph[i] == b.best_hparams_per_graph[i]);
    }
    CHECK(a.mean == b.mean);
    CHECK(a.std == b.std);
}

TEST_CASE("identical sample graphs get identical accuracies") {
    Graph g = generate_sbm({20, 20}, 0.3, 0.08, 3, 1.0, 2);
    std::vector<Graph> samples{g, g, g};
    auto model = make_model("proplin");
    HyperGrid grid;
    grid.add("depth", {std::int64_t{1}});
    grid.add("epochs", {std::int64_t{40}});
    EvaluationReport rep = pipeline_evaluate(*model, grid, samples, 0.4, 0.5, 13);
    CHECK(rep.per_graph_accuracy[0] == rep.per_graph_accuracy[1]);
    CHECK(rep.per_graph_accuracy[0] == rep.per_graph_accuracy[2]);
    CHECK(rep.std == doctest::Approx(0.0));
}

TEST_CASE("mean and std agree with the per-graph list") {
    std::vector<Graph> samples;
    for (std::uint64_t s = 10; s < 15; ++s)
        samples.push_back(generate_sbm({12, 12}, 0.4, 0.1, 2, 1.0, s));
    auto model = make_model("majority");
    HyperGrid grid;
    grid.add("unused", {std::int64_t{0}});
    EvaluationReport rep = pipeline_evaluate(*model, grid, samples, 0.3, 0.5, 1);
    double m = 0;
    for (double a : rep.per_graph_accuracy) m += a;
    m /= static_cast<double>(rep.per_graph_accuracy.size());
    CHECK(rep.mean == doctest::Approx(m).epsilon(1e-12));
}

TEST_CASE("a leaky model trips the guard; honest runs never do") {
    std::vector<Graph> samples{generate_sbm({15, 15}, 0.3, 0.1, 2, 1.0, 7)};
    LeakyModel leaky;
    HyperGrid grid;
    grid.add("a", {std::int64_t{0}});
    CHECK_THROWS_AS(pipeline_evaluate(leaky, grid, samples, 0.4, 0.5, 3), GuardViolation);

    // An honest run through the same machinery records no blocked reads.
    Graph g = samples[0];
    Split split = subdivide(make_split(g, 0.4, derive_seed(3, "split")), 0.5,
                            derive_seed(3, "subdivide"));
    auto log = std::make_shared<AccessLog>();
    GraphView view = make_view(g, split.labeled, log);
    auto model = make_model("proplin");
    HyperGrid pgrid;
    pgrid.add("depth", {std::int64_t{1}});
    pgrid.add("epochs", {std::int64_t{30}});
    GridSearchResult r = grid_search(*model, pgrid, view, split, 3);
    LabelAssignment full = assignment_from(view.labels(), split.labeled);
    model->fit(view, full, r.best, 4);
    CHECK(log->blocked_label_reads.load() == 0);
    CHECK(log->permitted_label_reads.load() > 0);
}

TEST_CASE("a custom selection strategy replaces the grid search") {
    std::vector<Graph> samples{generate_sbm({15, 15}, 0.3, 0.1, 2, 1.0, 4)};
    auto model = make_model("proplin");
    HyperGrid grid;
    grid.add("depth", {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}});
    grid.add("epochs", {std::int64_t{30}});

    int calls = 0;
    HyperSelector pick_last = [&](const Model&, const HyperGrid& gr, const GraphView&,
                                  const Split&, std::uint64_t) {
        ++calls;
        return gr.at(gr.size() - 1);
    };
    EvaluationReport rep = pipeline_evaluate(*model, grid, samples, 0.4, 0.5, 8, 1, pick_last);
    CHECK(calls == 1);
    CHECK(rep.best_hparams_per_graph[0].get_int("depth", -1) == 2);
}

TEST_CASE("per-graph failures carry the graph index") {
    std::vector<Graph> samples{generate_sbm({10, 10}, 0.4, 0.1, 2, 1.0, 1),
                               Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 0, 1, 1})};
    auto model = make_model("proplin"); // graph 1 has no features
    HyperGrid grid;
    grid.add("epochs", {std::int64_t{10}});
    try {
        pipeline_evaluate(*model, grid, samples, 0.5, 0.5, 2);
        FAIL("expected ModelError");
    } catch (const ModelError& e) {
        CHECK(std::string(e.what()).find("graph 1") != std::string::npos);
    }
}

} // TEST_SUITE("pipeline")
