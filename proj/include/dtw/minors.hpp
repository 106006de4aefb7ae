#ifndef DTW_MINORS_HPP
#define DTW_MINORS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dtw/digraph.hpp"

namespace dtw {

struct ContractionStep {
    std::string tail, head, merged;
};

/// Replayable recipe for a butterfly minor: keep a subgraph of the host,
/// then contract butterfly contractible edges one by one. Each step's edge
/// must be contractible at the moment it is applied.
struct ContractionScript {
    std::vector<std::string> keep_vertices;
    std::vector<std::pair<std::string, std::string>> drop_edges;
    std::vector<ContractionStep> steps;
};

/// Certifies target <=_b host. `rename` maps replay-result names to target
/// names where they differ; an omitted entry means the name carries over.
struct MinorWitness {
    ContractionScript script;
    std::map<std::string, std::string> rename;
};

inline Digraph replay_script(const Digraph& host, const ContractionScript& s) {
    Digraph g = host.induced_subgraph(host.set_of(s.keep_vertices));
    std::vector<std::pair<int, int>> drop;
    for (const auto& [a, b] : s.drop_edges) drop.emplace_back(g.index_of(a), g.index_of(b));
    g = g.delete_edges(drop);
    for (const auto& step : s.steps) {
        int t = g.index_of(step.tail), h = g.index_of(step.head);
        g = g.contract_edge(t, h, step.merged);
    }
    return g;
}

/// Equality of the named graphs regardless of vertex order.
inline bool same_named_digraph(const Digraph& a, const Digraph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    for (const auto& nm : a.names())
        if (!b.has_vertex(nm)) return false;
    for (auto [t, h] : a.edges())
        if (!b.has_edge(b.index_of(a.name(t)), b.index_of(a.name(h)))) return false;
    return true;
}

inline Digraph apply_rename(const Digraph& g, const std::map<std::string, std::string>& rename) {
    if (rename.empty()) return g;
    std::vector<std::string> names;
    for (const auto& nm : g.names()) {
        auto it = rename.find(nm);
        names.push_back(it == rename.end() ? nm : it->second);
    }
    return Digraph::build_indexed(names, g.edges());
}

/// nullopt when the witness checks out; otherwise the reason it does not.
inline std::optional<std::string> verify_witness(const Digraph& target, const Digraph& host,
                                                 const MinorWitness& w) {
    try {
        Digraph f = apply_rename(replay_script(host, w.script), w.rename);
        if (!same_named_digraph(f, target)) return "replay result does not match the target graph";
        return std::nullopt;
    } catch (const Error& e) {
        return std::string(e.what());
    }
}

// ---------------------------------------------------------------------------
// Butterfly models

/// One model blob: an in-branching and an out-branching over host vertices
/// that share exactly their root. `in_parent[v]` is the next vertex on v's
/// path toward the root (host edge (v, in_parent[v])); `out_parent[v]` is
/// v's predecessor away from the root (host edge (out_parent[v], v)).
struct Branching {
    int root = -1;
    std::map<int, int> in_parent;
    std::map<int, int> out_parent;

    VertexSet in_tree() const {
        VertexSet s = VertexSet::single(root);
        for (auto [v, p] : in_parent) { s.insert(v); (void)p; }
        return s;
    }
    VertexSet out_tree() const {
        VertexSet s = VertexSet::single(root);
        for (auto [v, p] : out_parent) { s.insert(v); (void)p; }
        return s;
    }
    VertexSet vertices() const { return in_tree() | out_tree(); }
};

/// Butterfly model of a target digraph inside a host digraph: vertex-disjoint
/// blobs plus one host edge per target edge.
struct ButterflyModel {
    std::vector<Branching> blob;                                   // per target vertex index
    std::map<std::pair<int, int>, std::pair<int, int>> edge_image;  // target edge -> host edge
};

struct ModelVerdict {
    bool valid = true;
    std::vector<std::string> violations;
};

inline ModelVerdict verify_model(const Digraph& target, const Digraph& host, const ButterflyModel& mu) {
    ModelVerdict v;
    auto bad = [&](const std::string& s) {
        v.valid = false;
        v.violations.push_back(s);
    };
    if (static_cast<int>(mu.blob.size()) != target.n()) {
        bad("model has " + std::to_string(mu.blob.size()) + " blobs for " + std::to_string(target.n()) + " vertices");
        return v;
    }
    // branching structure
    for (int tv = 0; tv < target.n(); ++tv) {
        const Branching& b = mu.blob[static_cast<std::size_t>(tv)];
        const std::string loc = "blob of " + target.name(tv);
        if (b.root < 0 || b.root >= host.n()) {
            bad(loc + ": missing root");
            continue;
        }
        if ((b.in_tree() & b.out_tree()) != VertexSet::single(b.root))
            bad(loc + ": in- and out-branching share more than the root");
        for (auto [x, p] : b.in_parent) {
            if (x == b.root) bad(loc + ": root has an in-branching parent");
            if (!host.has_edge(x, p)) bad(loc + ": in-branching uses missing edge " + host.name(x) + "->" + host.name(p));
        }
        for (auto [x, p] : b.out_parent) {
            if (x == b.root) bad(loc + ": root has an out-branching parent");
            if (!host.has_edge(p, x)) bad(loc + ": out-branching uses missing edge " + host.name(p) + "->" + host.name(x));
        }
        // chains must reach the root acyclically
        for (const auto* tree : {&b.in_parent, &b.out_parent}) {
            for (auto [x, p] : *tree) {
                (void)p;
                int cur = x, hops = 0;
                while (cur != b.root) {
                    auto it = tree->find(cur);
                    if (it == tree->end() || ++hops > host.n()) {
                        bad(loc + ": branching chain does not reach the root");
                        break;
                    }
                    cur = it->second;
                }
            }
        }
    }
    // disjointness
    for (int a = 0; a < target.n(); ++a)
        for (int b2 = a + 1; b2 < target.n(); ++b2)
            if (mu.blob[static_cast<std::size_t>(a)].vertices().intersects(mu.blob[static_cast<std::size_t>(b2)].vertices()))
                bad("disjointness: blobs of " + target.name(a) + " and " + target.name(b2) + " overlap");
    // edge images
    for (auto [t, h] : target.edges()) {
        auto it = mu.edge_image.find({t, h});
        if (it == mu.edge_image.end()) {
            bad("edge " + target.name(t) + "->" + target.name(h) + " has no image");
            continue;
        }
        auto [p, q] = it->second;
        if (!host.has_edge(p, q)) {
            bad("image of " + target.name(t) + "->" + target.name(h) + " is not a host edge");
            continue;
        }
        if (!mu.blob[static_cast<std::size_t>(t)].out_tree().contains(p))
            bad("tail of image of " + target.name(t) + "->" + target.name(h) + " is outside the out-branching of " + target.name(t));
        if (!mu.blob[static_cast<std::size_t>(h)].in_tree().contains(q))
            bad("head of image of " + target.name(t) + "->" + target.name(h) + " is outside the in-branching of " + target.name(h));
    }
    return v;
}

/// Identity model: every blob a single vertex, every edge its own image.
/// Requires the target's names to appear in the host.
inline ButterflyModel identity_model(const Digraph& target, const Digraph& host) {
    ButterflyModel mu;
    mu.blob.resize(static_cast<std::size_t>(target.n()));
    for (int v = 0; v < target.n(); ++v) mu.blob[static_cast<std::size_t>(v)].root = host.index_of(target.name(v));
    for (auto [t, h] : target.edges())
        mu.edge_image[{t, h}] = {host.index_of(target.name(t)), host.index_of(target.name(h))};
    return mu;
}

namespace detail {

struct ModelBookkeeping {
    Digraph current;                                   // the partially contracted graph
    std::vector<Branching> blob;                        // per current vertex, over host indices
    std::map<std::pair<int, int>, std::pair<int, int>> image;  // current edge -> host edge

    explicit ModelBookkeeping(Digraph g) : current(std::move(g)) {}

    /// Drops blob material no current edge image attaches to. Keeps exactly
    /// the root paths of the attachment points, so in-/out-branchings stay
    /// well-formed after merges and parallel-edge drops.
    void prune_all() {
        for (int v = 0; v < current.n(); ++v) {
            Branching& b = blob[static_cast<std::size_t>(v)];
            VertexSet need_in, need_out;
            for (auto& [ce, he] : image) {
                if (ce.second == v) need_in.insert(he.second);
                if (ce.first == v) need_out.insert(he.first);
            }
            Branching nb;
            nb.root = b.root;
            for (int x : need_in) {
                int cur = x;
                while (cur != b.root) {
                    int p = b.in_parent.at(cur);
                    nb.in_parent[cur] = p;
                    cur = p;
                }
            }
            for (int x : need_out) {
                int cur = x;
                while (cur != b.root) {
                    int p = b.out_parent.at(cur);
                    nb.out_parent[cur] = p;
                    cur = p;
                }
            }
            b = std::move(nb);
        }
    }
};

}  // namespace detail

/// Replays the script while growing a butterfly model of the result in the
/// host; the returned model's vertex order matches the replayed graph's.
inline std::pair<Digraph, ButterflyModel> derive_model(const Digraph& host, const ContractionScript& s) {
    detail::ModelBookkeeping bk(host.induced_subgraph(host.set_of(s.keep_vertices)));
    {
        std::vector<std::pair<int, int>> drop;
        for (const auto& [a, b] : s.drop_edges) drop.emplace_back(bk.current.index_of(a), bk.current.index_of(b));
        bk.current = bk.current.delete_edges(drop);
    }
    bk.blob.resize(static_cast<std::size_t>(bk.current.n()));
    for (int v = 0; v < bk.current.n(); ++v)
        bk.blob[static_cast<std::size_t>(v)].root = host.index_of(bk.current.name(v));
    for (auto [t, h] : bk.current.edges())
        bk.image[{t, h}] = {host.index_of(bk.current.name(t)), host.index_of(bk.current.name(h))};

    for (const auto& step : s.steps) {
        const Digraph& g = bk.current;
        int u = g.index_of(step.tail), v = g.index_of(step.head);
        bool tail_case = g.out_degree(u) == 1;
        if (!g.butterfly_contractible(u, v))
            throw Error("derive_model: step edge not contractible");
        auto [p, q] = bk.image.at({u, v});

        Branching merged;
        const Branching& bu = bk.blob[static_cast<std::size_t>(u)];
        const Branching& bv = bk.blob[static_cast<std::size_t>(v)];
        if (tail_case) {
            // Only out-edge of u is (u,v): the merged blob is rooted at v's
            // root; u's material funnels into the in-branching through (p,q).
            merged.root = bv.root;
            merged.out_parent = bv.out_parent;
            merged.in_parent = bv.in_parent;
            for (auto [x, par] : bu.in_parent) merged.in_parent[x] = par;
            // out-path of u from its root to p, re-read as in-branching links
            std::vector<int> path{p};
            while (path.back() != bu.root) path.push_back(bu.out_parent.at(path.back()));
            for (std::size_t i = path.size(); i-- > 1;) merged.in_parent[path[i]] = path[i - 1];
            merged.in_parent[p] = q;
        } else {
            merged.root = bu.root;
            merged.in_parent = bu.in_parent;
            merged.out_parent = bu.out_parent;
            for (auto [x, par] : bv.out_parent) merged.out_parent[x] = par;
            std::vector<int> path{q};
            while (path.back() != bv.root) path.push_back(bv.in_parent.at(path.back()));
            for (std::size_t i = path.size(); i-- > 1;) merged.out_parent[path[i]] = path[i - 1];
            merged.out_parent[q] = p;
        }

        Digraph next = g.contract_edge(u, v, step.merged);
        int x = next.index_of(step.merged);
        auto old_index = [&](int nv) { return g.index_of(next.name(nv)); };
        std::map<std::pair<int, int>, std::pair<int, int>> nimage;
        for (auto [t, h] : next.edges()) {
            std::pair<int, int> pre;
            if (t != x && h != x) {
                pre = {old_index(t), old_index(h)};
            } else if (h == x) {
                int w = old_index(t);
                // prefer the image landing in the surviving in-branching part
                int first = tail_case ? v : u, second = tail_case ? u : v;
                if (bk.image.count({w, first})) pre = {w, first};
                else pre = {w, second};
            } else {
                int w = old_index(h);
                int first = tail_case ? v : u, second = tail_case ? u : v;
                if (bk.image.count({first, w})) pre = {first, w};
                else pre = {second, w};
            }
            nimage[{t, h}] = bk.image.at(pre);
        }
        std::vector<Branching> nblob(static_cast<std::size_t>(next.n()));
        for (int nv = 0; nv < next.n(); ++nv)
            nblob[static_cast<std::size_t>(nv)] = (nv == x) ? merged : bk.blob[static_cast<std::size_t>(old_index(nv))];
        bk.current = std::move(next);
        bk.blob = std::move(nblob);
        bk.image = std::move(nimage);
        bk.prune_all();
    }

    ButterflyModel mu;
    mu.blob = bk.blob;
    mu.edge_image = bk.image;
    return {bk.current, mu};
}

/// Model of the target inside the host induced by a verified witness, blob
/// order matching the target's vertex order.
inline ButterflyModel witness_model(const Digraph& target, const Digraph& host, const MinorWitness& w) {
    auto [f, mu] = derive_model(host, w.script);
    Digraph renamed = apply_rename(f, w.rename);
    if (!same_named_digraph(renamed, target)) throw Error("witness_model: witness does not verify");
    ButterflyModel out;
    out.blob.resize(static_cast<std::size_t>(target.n()));
    for (int v = 0; v < target.n(); ++v)
        out.blob[static_cast<std::size_t>(v)] = mu.blob[static_cast<std::size_t>(renamed.index_of(target.name(v)))];
    for (auto [t, h] : target.edges()) {
        int ft = renamed.index_of(target.name(t)), fh = renamed.index_of(target.name(h));
        out.edge_image[{t, h}] = mu.edge_image.at({ft, fh});
    }
    return out;
}

}  // namespace dtw

#endif
