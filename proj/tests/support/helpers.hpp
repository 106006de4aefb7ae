#ifndef DTW_TEST_HELPERS_HPP
#define DTW_TEST_HELPERS_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "dtw/digraph.hpp"
#include "dtw/iso.hpp"
#include "dtw/minors.hpp"

namespace dtw::testing {

inline Digraph cycle(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>((i + 1) % n)]);
    return Digraph::build(names, edges);
}

inline Digraph bidirected_clique(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
    return Digraph::build(names, edges);
}

inline Digraph random_digraph(std::mt19937& rng, int n, double p) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng) < p)
                edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
    return Digraph::build(names, edges);
}

inline Digraph random_dag(std::mt19937& rng, int n, double p) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
    return Digraph::build(names, edges);
}

/// Floyd-Warshall closure; independent of the library's bitset BFS.
inline std::vector<std::vector<bool>> closure_oracle(const Digraph& d, VertexSet removed) {
    int n = d.n();
    std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [t, h] : d.edges())
        if (!removed.contains(t) && !removed.contains(h))
            r[static_cast<std::size_t>(t)][static_cast<std::size_t>(h)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    return r;
}

/// All non-isomorphic digraphs on exactly n labelled-then-canonicalised
/// vertices (n <= 4 is exhaustive and quick).
inline std::vector<Digraph> all_nonisomorphic_digraphs(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) arcs.emplace_back(i, j);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::set<std::uint64_t> seen;
    std::vector<Digraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(arcs[i]);
        Digraph d = Digraph::build_indexed(names, edges);
        if (seen.insert(canonical_key8(d)).second) out.push_back(std::move(d));
    }
    return out;
}

/// Random butterfly-minor script: a random subgraph followed by random
/// contractions of whatever is contractible. Returns the witness (against
/// the replay result, identity names) and the replayed graph.
inline std::pair<MinorWitness, Digraph> random_minor(std::mt19937& rng, const Digraph& d,
                                                     double keep_vertex_p = 0.9, double keep_edge_p = 0.9,
                                                     int max_contractions = 3) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    MinorWitness w;
    VertexSet keep;
    for (int v = 0; v < d.n(); ++v)
        if (coin(rng) < keep_vertex_p) keep.insert(v);
    if (keep.empty() && d.n() > 0) keep.insert(static_cast<int>(rng() % static_cast<unsigned>(d.n())));
    Digraph g = d.induced_subgraph(keep);
    w.script.keep_vertices = g.names();
    std::vector<std::pair<int, int>> drop;
    for (auto [t, h] : g.edges())
        if (coin(rng) >= keep_edge_p) {
            drop.emplace_back(t, h);
            w.script.drop_edges.emplace_back(g.name(t), g.name(h));
        }
    g = g.delete_edges(drop);
    int contractions = static_cast<int>(rng() % static_cast<unsigned>(max_contractions + 1));
    for (int c = 0; c < contractions; ++c) {
        std::vector<std::pair<int, int>> options;
        for (auto [t, h] : g.edges())
            if (g.butterfly_contractible(t, h)) options.emplace_back(t, h);
        if (options.empty()) break;
        auto [t, h] = options[rng() % options.size()];
        std::string merged = "w" + std::to_string(c);
        w.script.steps.push_back({g.name(t), g.name(h), merged});
        g = g.contract_edge(t, h, merged);
    }
    return {w, g};
}

/// Independent butterfly-minor oracle: the closure of a host under single
/// deletions and contractions, collected as canonical keys per size. Usable
/// for hosts with at most 5 vertices.
struct MinorClosure {
    std::set<std::pair<int, std::uint64_t>> keys;

    explicit MinorClosure(const Digraph& host) {
        std::vector<Digraph> queue{host};
        keys.insert(key_of(host));
        while (!queue.empty()) {
            Digraph g = std::move(queue.back());
            queue.pop_back();
            for (int v = 0; v < g.n(); ++v) {
                VertexSet k = g.vertex_set();
                k.erase(v);
                push(g.induced_subgraph(k), queue);
            }
            for (auto [t, h] : g.edges()) {
                push(g.delete_edges({{t, h}}), queue);
                if (g.butterfly_contractible(t, h)) push(g.contract_edge(t, h, fresh_name(g)), queue);
            }
        }
    }

    bool contains(const Digraph& target) const { return keys.count(key_of(target)) > 0; }

private:
    static std::pair<int, std::uint64_t> key_of(const Digraph& g) { return {g.n(), canonical_key8(g)}; }

    static std::string fresh_name(const Digraph& g) {
        for (int i = 0;; ++i) {
            std::string cand = "#" + std::to_string(i);
            if (!g.has_vertex(cand)) return cand;
        }
    }

    void push(Digraph g, std::vector<Digraph>& queue) {
        if (keys.insert(key_of(g)).second) queue.push_back(std::move(g));
    }
};

}  // namespace dtw::testing

#endif
