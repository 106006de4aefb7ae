#ifndef DTW_JSON_IO_HPP
#define DTW_JSON_IO_HPP

#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtw/decomp.hpp"
#include "dtw/digraph.hpp"
#include "dtw/game.hpp"
#include "dtw/minors.hpp"
#include "dtw/obstructions.hpp"

namespace dtw {

using json = nlohmann::json;

// digraph: {"vertices": ["0","0p",...], "edges": [["0","0p"],...]}
// digons appear as two entries; primed names use the "p" suffix, negatives
// the "m" prefix.

inline json to_json(const Digraph& d) {
    json j;
    j["vertices"] = d.names();
    json edges = json::array();
    for (auto [t, h] : d.edges()) edges.push_back({d.name(t), d.name(h)});
    j["edges"] = edges;
    return j;
}

inline Digraph digraph_from_json(const json& j) {
    std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return Digraph::build(names, edges);
}

inline json to_json(const TreeDecomposition& T) {
    const Digraph& d = *T.host;
    json j;
    j["flavor"] = to_string(T.flavor);
    j["root"] = T.node_ids[static_cast<std::size_t>(T.root)];
    json nodes = json::array();
    for (int t = 0; t < T.node_count(); ++t)
        nodes.push_back({{"id", T.node_ids[static_cast<std::size_t>(t)]},
                         {"bag", d.names_of(T.bag[static_cast<std::size_t>(t)])}});
    j["nodes"] = nodes;
    json edges = json::array();
    for (int t = 0; t < T.node_count(); ++t) {
        if (t == T.root) continue;
        edges.push_back({{"from", T.node_ids[static_cast<std::size_t>(T.parent[static_cast<std::size_t>(t)])]},
                         {"to", T.node_ids[static_cast<std::size_t>(t)]},
                         {"guard", d.names_of(T.guard[static_cast<std::size_t>(t)])}});
    }
    j["edges"] = edges;
    return j;
}

inline TreeDecomposition decomposition_from_json(const json& j, std::shared_ptr<const Digraph> host) {
    TreeDecomposition T;
    T.host = std::move(host);
    T.flavor = flavor_from_string(j.at("flavor").get<std::string>());
    for (const auto& n : j.at("nodes")) {
        T.node_ids.push_back(n.at("id").get<std::string>());
        T.bag.push_back(T.host->set_of(n.at("bag").get<std::vector<std::string>>()));
        T.guard.push_back(VertexSet{});
        T.parent.push_back(-1);
    }
    T.root = T.node_index(j.at("root").get<std::string>());
    for (const auto& e : j.at("edges")) {
        int from = T.node_index(e.at("from").get<std::string>());
        int to = T.node_index(e.at("to").get<std::string>());
        if (T.parent[static_cast<std::size_t>(to)] != -1 || to == T.root)
            throw Error("decomposition edge re-parents node " + T.node_ids[static_cast<std::size_t>(to)]);
        T.parent[static_cast<std::size_t>(to)] = from;
        T.guard[static_cast<std::size_t>(to)] = T.host->set_of(e.at("guard").get<std::vector<std::string>>());
    }
    T.check_structure();
    return T;
}

inline json to_json(const Digraph& d, const StrategyTree& T) {
    json j;
    j["root"] = T.node_ids[static_cast<std::size_t>(T.root)];
    json nodes = json::array();
    for (int t = 0; t < T.node_count(); ++t)
        nodes.push_back({{"id", T.node_ids[static_cast<std::size_t>(t)]},
                         {"cops", d.names_of(T.cops[static_cast<std::size_t>(t)])}});
    j["nodes"] = nodes;
    json edges = json::array();
    for (int t = 0; t < T.node_count(); ++t) {
        if (t == T.root) continue;
        edges.push_back({{"from", T.node_ids[static_cast<std::size_t>(T.parent[static_cast<std::size_t>(t)])]},
                         {"to", T.node_ids[static_cast<std::size_t>(t)]},
                         {"robber", d.names_of(T.robber[static_cast<std::size_t>(t)])}});
    }
    j["edges"] = edges;
    return j;
}

inline StrategyTree strategy_from_json(const json& j, const Digraph& d) {
    StrategyTree T;
    for (const auto& n : j.at("nodes")) {
        T.node_ids.push_back(n.at("id").get<std::string>());
        T.cops.push_back(d.set_of(n.at("cops").get<std::vector<std::string>>()));
        T.robber.push_back(VertexSet{});
        T.parent.push_back(-1);
    }
    T.root = T.node_index(j.at("root").get<std::string>());
    for (const auto& e : j.at("edges")) {
        int from = T.node_index(e.at("from").get<std::string>());
        int to = T.node_index(e.at("to").get<std::string>());
        if (T.parent[static_cast<std::size_t>(to)] != -1 || to == T.root)
            throw Error("strategy edge re-parents node " + T.node_ids[static_cast<std::size_t>(to)]);
        T.parent[static_cast<std::size_t>(to)] = from;
        T.robber[static_cast<std::size_t>(to)] = d.set_of(e.at("robber").get<std::vector<std::string>>());
    }
    T.check_structure();
    return T;
}

// witness: {"keep_vertices":[...], "drop_edges":[...], "steps":[{"edge":["u","v"],"name":"x"}],
//           "map":{"x":"0"} (optional)}
inline json to_json(const MinorWitness& w) {
    json j;
    j["keep_vertices"] = w.script.keep_vertices;
    json drops = json::array();
    for (const auto& [a, b] : w.script.drop_edges) drops.push_back({a, b});
    j["drop_edges"] = drops;
    json steps = json::array();
    for (const auto& s : w.script.steps)
        steps.push_back({{"edge", {s.tail, s.head}}, {"name", s.merged}});
    j["steps"] = steps;
    if (!w.rename.empty()) j["map"] = w.rename;
    return j;
}

inline MinorWitness witness_from_json(const json& j) {
    MinorWitness w;
    w.script.keep_vertices = j.at("keep_vertices").get<std::vector<std::string>>();
    for (const auto& e : j.at("drop_edges"))
        w.script.drop_edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    for (const auto& s : j.at("steps"))
        w.script.steps.push_back({s.at("edge").at(0).get<std::string>(), s.at("edge").at(1).get<std::string>(),
                                  s.at("name").get<std::string>()});
    if (j.contains("map")) w.rename = j.at("map").get<std::map<std::string, std::string>>();
    return w;
}

// bramble: {"kind":"strong","elements":[["1","2","3"],["4","5","6"]]}
inline json to_json(const Digraph& d, const Bramble& b) {
    json j;
    j["kind"] = b.kind == BrambleKind::Strong ? "strong" : "weak";
    json els = json::array();
    for (const VertexSet& el : b.elements) els.push_back(d.names_of(el));
    j["elements"] = els;
    return j;
}

inline Bramble bramble_from_json(const json& j, const Digraph& d) {
    Bramble b;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "strong") b.kind = BrambleKind::Strong;
    else if (kind == "weak") b.kind = BrambleKind::Weak;
    else throw Error("unknown bramble kind: " + kind);
    for (const auto& el : j.at("elements")) b.elements.push_back(d.set_of(el.get<std::vector<std::string>>()));
    return b;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// DOT export: node label = bag / cop set, edge label = guard / robber space.

inline std::string join_names(const Digraph& d, VertexSet s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ",";
        out += d.name(v);
    }
    return out.empty() ? std::string("{}") : out;
}

inline std::string to_dot(const Digraph& d) {
    std::string out = "digraph G {\n";
    for (int v = 0; v < d.n(); ++v) out += "  \"" + d.name(v) + "\";\n";
    std::vector<std::vector<bool>> done(static_cast<std::size_t>(d.n()), std::vector<bool>(static_cast<std::size_t>(d.n()), false));
    for (auto [t, h] : d.edges()) {
        if (done[static_cast<std::size_t>(t)][static_cast<std::size_t>(h)]) continue;
        if (d.has_edge(h, t)) {
            out += "  \"" + d.name(std::min(t, h)) + "\" -> \"" + d.name(std::max(t, h)) + "\" [dir=both];\n";
            done[static_cast<std::size_t>(t)][static_cast<std::size_t>(h)] = true;
            done[static_cast<std::size_t>(h)][static_cast<std::size_t>(t)] = true;
        } else {
            out += "  \"" + d.name(t) + "\" -> \"" + d.name(h) + "\";\n";
            done[static_cast<std::size_t>(t)][static_cast<std::size_t>(h)] = true;
        }
    }
    out += "}\n";
    return out;
}

inline std::string to_dot(const TreeDecomposition& T) {
    const Digraph& d = *T.host;
    std::string out = "digraph dtd {\n  node [shape=box];\n";
    for (int t = 0; t < T.node_count(); ++t)
        out += "  \"" + T.node_ids[static_cast<std::size_t>(t)] + "\" [label=\"" +
               join_names(d, T.bag[static_cast<std::size_t>(t)]) + "\"];\n";
    for (int t = 0; t < T.node_count(); ++t) {
        if (t == T.root) continue;
        out += "  \"" + T.node_ids[static_cast<std::size_t>(T.parent[static_cast<std::size_t>(t)])] + "\" -> \"" +
               T.node_ids[static_cast<std::size_t>(t)] + "\" [label=\"" +
               join_names(d, T.guard[static_cast<std::size_t>(t)]) + "\"];\n";
    }
    out += "}\n";
    return out;
}

inline std::string to_dot(const Digraph& d, const StrategyTree& T) {
    std::string out = "digraph strategy {\n  node [shape=box];\n";
    for (int t = 0; t < T.node_count(); ++t)
        out += "  \"" + T.node_ids[static_cast<std::size_t>(t)] + "\" [label=\"" +
               join_names(d, T.cops[static_cast<std::size_t>(t)]) + "\"];\n";
    for (int t = 0; t < T.node_count(); ++t) {
        if (t == T.root) continue;
        out += "  \"" + T.node_ids[static_cast<std::size_t>(T.parent[static_cast<std::size_t>(t)])] + "\" -> \"" +
               T.node_ids[static_cast<std::size_t>(t)] + "\" [label=\"" +
               join_names(d, T.robber[static_cast<std::size_t>(t)]) + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace dtw

#endif
