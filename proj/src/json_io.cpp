#include "graphbench/json_io.hpp"

#include <cmath>
#include <fstream>

#include "graphbench/errors.hpp"

namespace graphbench {

using nlohmann::json;

json json_real(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return v;
}

json to_json(const ParamValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    if (const auto* d = std::get_if<double>(&v)) return *d;
    return std::get<std::string>(v);
}

ParamValue param_from_json(const json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) return j.get<double>();
    if (j.is_string()) return j.get<std::string>();
    throw ConfigError("hyper-parameter value must be a number or a string, got " + j.dump());
}

json to_json(const HyperParams& hp) {
    json j = json::object();
    for (const auto& [name, value] : hp.values()) j[name] = to_json(value);
    return j;
}

HyperParams hparams_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("hyper-parameters must be a JSON object");
    HyperParams hp;
    for (const auto& [name, value] : j.items()) hp.set(name, param_from_json(value));
    return hp;
}

json to_json(const HyperGrid& grid) {
    json j = json::object();
    for (const auto& [name, cands] : grid.axes()) {
        json arr = json::array();
        for (const auto& c : cands) arr.push_back(to_json(c));
        j[name] = arr;
    }
    return j;
}

HyperGrid grid_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("a grid must be a JSON object of candidate lists");
    HyperGrid grid;
    for (const auto& [name, arr] : j.items()) {
        if (!arr.is_array()) throw ConfigError("grid entry '" + name + "' must be an array");
        std::vector<ParamValue> cands;
        for (const auto& c : arr) cands.push_back(param_from_json(c));
        grid.add(name, std::move(cands));
    }
    return grid;
}

namespace {

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path.string(), 0, e.what());
    }
    return j;
}

} // namespace

HyperGrid load_grid_file(const std::filesystem::path& path) {
    return grid_from_json(read_json_file(path));
}

HyperParams load_hparams_file(const std::filesystem::path& path) {
    return hparams_from_json(read_json_file(path));
}

json to_json(const DatasetStats& stats) {
    json j;
    j["mean_node_kl"] = json_real(stats.mean_node_kl);
    j["std_node_kl"] = json_real(stats.std_node_kl);
    j["mean_edge_kl"] = json_real(stats.mean_edge_kl);
    j["std_edge_kl"] = json_real(stats.std_edge_kl);
    j["overlap_rate"] = stats.overlap_rate;
    j["coverage_rate"] = stats.coverage_rate;
    j["mean_nodes"] = stats.mean_nodes;
    j["std_nodes"] = stats.std_nodes;
    return j;
}

json to_json(const EvaluationReport& report) {
    json j;
    j["model"] = report.model_name;
    j["dataset"] = report.dataset_name;
    j["per_graph_accuracy"] = report.per_graph_accuracy;
    json hp = json::array();
    for (const auto& h : report.best_hparams_per_graph) hp.push_back(to_json(h));
    j["best_hparams_per_graph"] = hp;
    j["mean"] = report.mean;
    j["std"] = report.std;
    return j;
}

json to_json(const SweepReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["validation_size"] = row.validation_size;
        r["best_hparams"] = to_json(row.best_hparams);
        r["mean_test_accuracy"] = row.mean_test_accuracy;
        r["std_test_accuracy"] = row.std_test_accuracy;
        r["per_seed_accuracy"] = row.per_seed_accuracy;
        json winners = json::array();
        for (const auto& w : row.per_seed_winner) winners.push_back(to_json(w));
        r["per_seed_winner"] = winners;
        rows.push_back(r);
    }
    json j;
    j["rows"] = rows;
    j["exposure_order"] = report.exposure_order;
    j["permutation_seed"] = report.permutation_seed;
    return j;
}

json to_json(const ValidUtilResult& result) {
    json per_node = json::array();
    for (std::size_t i = 0; i < result.state.nodes.size(); ++i) {
        json n;
        n["node"] = result.state.nodes[i];
        n["initial_prediction"] = result.state.initial_predictions[i];
        n["pseudo_label"] = result.state.pseudo_labels[i];
        n["chosen_accuracy"] = result.state.per_node_chosen_acc[i];
        per_node.push_back(n);
    }
    json j;
    j["test_accuracy"] = result.test_accuracy;
    j["pseudo_labels"] = result.state.pseudo_labels;
    j["per_node"] = per_node;
    j["t"] = result.state.t;
    j["k"] = result.state.k;
    j["final_hparams"] = to_json(result.final_hparams);
    j["final_valid_accuracy"] = result.final_valid_accuracy;
    j["train_accuracy"] = result.train_accuracy;
    j["query_count"] = {{"search", result.search_queries},
                        {"final_grid", result.grid_queries},
                        {"total", result.search_queries + result.grid_queries}};
    return j;
}

json to_json(const RankingSequence& seq) {
    json j;
    j["seed"] = seq.seed;
    j["models"] = seq.models;
    j["accuracies"] = seq.accuracies;
    return j;
}

} // namespace graphbench
