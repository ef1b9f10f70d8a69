#include "graphbench/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "graphbench/errors.hpp"

namespace graphbench {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw Error("failed to format a double");
    return std::string(buf, end);
}

// Splits a data line into whitespace-separated fields.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::int64_t parse_int(std::string_view field, const std::string& path, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(path, line_no, "expected an integer, got '" + std::string(field) + "'");
    return value;
}

double parse_double(std::string_view field, const std::string& path, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(path, line_no, "expected a number, got '" + std::string(field) + "'");
    return value;
}

// Applies fn(line_number, fields) to every non-comment, non-blank line.
template <typename Fn>
void for_each_data_line(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (!fields[0].empty() && fields[0][0] == '#') continue;
        fn(line_no, fields);
    }
}

json read_json(const std::filesystem::path& path) {
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

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << text;
    if (!out) throw ConfigError("write failed for " + path.string());
}

} // namespace

Graph load_graph(const std::filesystem::path& edge_path, const std::filesystem::path& label_path,
                 const std::optional<std::filesystem::path>& feature_path, LoadStats* stats) {
    // The label file defines the node universe.
    std::map<std::int64_t, ClassId> raw_labels;
    for_each_data_line(label_path, [&](std::size_t line_no, const auto& fields) {
        if (fields.size() != 2)
            throw ParseError(label_path.string(), line_no, "expected `node<TAB>label`");
        std::int64_t node = parse_int(fields[0], label_path.string(), line_no);
        std::int64_t label = parse_int(fields[1], label_path.string(), line_no);
        auto [it, inserted] = raw_labels.emplace(node, static_cast<ClassId>(label));
        if (!inserted && it->second != static_cast<ClassId>(label))
            throw IntegrityError(label_path.string() + ":" + std::to_string(line_no) +
                                 ": conflicting labels for node " + std::to_string(node));
    });
    if (raw_labels.empty()) throw IntegrityError(label_path.string() + ": no labels");

    std::vector<std::int64_t> ids;
    ids.reserve(raw_labels.size());
    for (const auto& [id, label] : raw_labels) ids.push_back(id);
    std::map<std::int64_t, NodeId> dense;
    for (std::size_t i = 0; i < ids.size(); ++i) dense.emplace(ids[i], static_cast<NodeId>(i));
    const auto n = static_cast<NodeId>(ids.size());

    auto lookup = [&](std::int64_t raw, const std::string& path, std::size_t line_no) {
        auto it = dense.find(raw);
        if (it == dense.end())
            throw IntegrityError(path + ":" + std::to_string(line_no) + ": node " +
                                 std::to_string(raw) + " has no label");
        return it->second;
    };

    std::vector<std::pair<NodeId, NodeId>> edges;
    for_each_data_line(edge_path, [&](std::size_t line_no, const auto& fields) {
        if (fields.size() != 2)
            throw ParseError(edge_path.string(), line_no, "expected `u<TAB>v`");
        NodeId u = lookup(parse_int(fields[0], edge_path.string(), line_no), edge_path.string(),
                          line_no);
        NodeId v = lookup(parse_int(fields[1], edge_path.string(), line_no), edge_path.string(),
                          line_no);
        edges.emplace_back(u, v);
    });

    std::vector<std::vector<FeatureEntry>> features(static_cast<std::size_t>(n));
    if (feature_path) {
        for_each_data_line(*feature_path, [&](std::size_t line_no, const auto& fields) {
            if (fields.size() != 3)
                throw ParseError(feature_path->string(), line_no, "expected `node<TAB>dim<TAB>value`");
            NodeId u = lookup(parse_int(fields[0], feature_path->string(), line_no),
                              feature_path->string(), line_no);
            std::int64_t dim = parse_int(fields[1], feature_path->string(), line_no);
            if (dim < 0)
                throw ParseError(feature_path->string(), line_no, "negative feature dimension");
            double value = parse_double(fields[2], feature_path->string(), line_no);
            features[u].push_back({static_cast<std::int32_t>(dim), value});
        });
    }

    std::vector<ClassId> labels;
    labels.reserve(raw_labels.size());
    for (const auto& [id, label] : raw_labels) labels.push_back(label);

    BuildReport rep;
    Graph g = Graph::build(n, edges, std::move(labels), std::move(features), 0, &rep);
    if (stats) {
        stats->dropped_self_loops = rep.dropped_self_loops;
        stats->dropped_duplicates = rep.dropped_duplicates;
    }

    bool identity = true;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != static_cast<std::int64_t>(i)) {
            identity = false;
            break;
        }
    if (!identity) g.set_original_node_ids(std::move(ids));
    return g;
}

Graph load_bundle(const std::filesystem::path& dir, LoadStats* stats) {
    auto edges = dir / "edges.tsv";
    auto labels = dir / "labels.tsv";
    auto features = dir / "features.tsv";
    std::optional<std::filesystem::path> feat;
    if (std::filesystem::exists(features)) feat = features;

    Graph g = load_graph(edges, labels, feat, stats);

    auto meta_path = dir / "meta.json";
    if (std::filesystem::exists(meta_path)) {
        json meta = read_json(meta_path);
        if (meta.contains("name")) g.set_name(meta["name"].get<std::string>());
        auto check = [&](const char* key, std::int64_t actual) {
            if (meta.contains(key) && meta[key].get<std::int64_t>() != actual)
                throw IntegrityError(meta_path.string() + ": " + key + " = " +
                                     meta[key].dump() + " but the data has " +
                                     std::to_string(actual));
        };
        check("n", g.node_count());
        check("k", g.class_count());
        check("d", g.feature_dim());
    } else if (g.name().empty()) {
        g.set_name(dir.filename().string());
    }
    return g;
}

void write_bundle(const Graph& g, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    std::ostringstream edges;
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) edges << u << '\t' << v << '\n';
    write_text(dir / "edges.tsv", edges.str());

    std::ostringstream labels;
    for (NodeId u = 0; u < g.node_count(); ++u) labels << u << '\t' << g.label(u) << '\n';
    write_text(dir / "labels.tsv", labels.str());

    bool any_features = false;
    std::ostringstream features;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (const auto& e : g.features(u)) {
            features << u << '\t' << e.dim << '\t' << format_double(e.value) << '\n';
            any_features = true;
        }
    }
    if (any_features || g.feature_dim() > 0) write_text(dir / "features.tsv", features.str());

    json meta;
    meta["name"] = g.name().empty() ? dir.filename().string() : g.name();
    meta["n"] = g.node_count();
    meta["k"] = g.class_count();
    meta["d"] = g.feature_dim();
    if (!g.original_node_ids().empty()) meta["original_node_ids"] = g.original_node_ids();
    write_text(dir / "meta.json", meta.dump(2) + "\n");
}

void write_sample_bundle(const SubgraphSample& s, const Graph& parent,
                         const std::filesystem::path& dir, const std::string& name,
                         std::uint64_t stream_seed) {
    Graph g = subgraph_to_graph(s, parent);
    g.set_name(name);
    write_bundle(g, dir);

    // Sample labels stay in the parent's class space so the bundle is
    // comparable to the parent without the graph's re-densified ids.
    std::ostringstream labels;
    for (NodeId i = 0; i < s.node_count(); ++i)
        labels << i << '\t' << parent.label(s.parent_ids[i]) << '\n';
    write_text(dir / "labels.tsv", labels.str());

    json prov;
    prov["seed_node"] = s.seed_node;
    prov["walk_steps"] = s.walk_steps;
    prov["node_kl"] = s.node_kl;
    prov["edge_kl"] = s.edge_kl;
    prov["rng_seed"] = stream_seed;
    prov["parent_ids"] = s.parent_ids;
    write_text(dir / "provenance.json", prov.dump(2) + "\n");
}

SubgraphSample load_sample_bundle(const std::filesystem::path& dir) {
    json prov = read_json(dir / "provenance.json");
    SubgraphSample s;
    s.seed_node = prov.at("seed_node").get<NodeId>();
    s.walk_steps = prov.at("walk_steps").get<std::int64_t>();
    s.node_kl = prov.at("node_kl").get<double>();
    s.edge_kl = prov.at("edge_kl").get<double>();
    s.parent_ids = prov.at("parent_ids").get<std::vector<NodeId>>();

    auto edge_path = dir / "edges.tsv";
    const auto n = static_cast<NodeId>(s.parent_ids.size());
    for_each_data_line(edge_path, [&](std::size_t line_no, const auto& fields) {
        if (fields.size() != 2)
            throw ParseError(edge_path.string(), line_no, "expected `u<TAB>v`");
        auto a = static_cast<NodeId>(parse_int(fields[0], edge_path.string(), line_no));
        auto b = static_cast<NodeId>(parse_int(fields[1], edge_path.string(), line_no));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw IntegrityError(edge_path.string() + ":" + std::to_string(line_no) +
                                 ": edge endpoint outside the sample");
        if (a > b) std::swap(a, b);
        s.edges.emplace_back(a, b);
    });
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

std::vector<std::filesystem::path> list_sample_dirs(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw ConfigError(dir.string() + " is not a directory");
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_directory() && entry.path().filename().string().rfind("sample_", 0) == 0)
            out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace graphbench
