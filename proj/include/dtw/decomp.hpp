#ifndef DTW_DECOMP_HPP
#define DTW_DECOMP_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtw/digraph.hpp"

namespace dtw {

/// The five decomposition definitions from the literature plus two working
/// variants: SC0v is SC0 without the tree-size bound, USC0 relaxes
/// "one strong component" to "a union of strong components".
enum class Flavor { NW, NCW, NCW0, SC0, SC0v, USC0, SCd };

inline const char* to_string(Flavor f) {
    switch (f) {
        case Flavor::NW: return "NW";
        case Flavor::NCW: return "NCW";
        case Flavor::NCW0: return "NCW0";
        case Flavor::SC0: return "SC0";
        case Flavor::SC0v: return "SC0v";
        case Flavor::USC0: return "USC0";
        case Flavor::SCd: return "SCd";
    }
    return "?";
}

inline Flavor flavor_from_string(const std::string& s) {
    if (s == "NW") return Flavor::NW;
    if (s == "NCW") return Flavor::NCW;
    if (s == "NCW0") return Flavor::NCW0;
    if (s == "SC0") return Flavor::SC0;
    if (s == "SC0v") return Flavor::SC0v;
    if (s == "USC0") return Flavor::USC0;
    if (s == "SCd") return Flavor::SCd;
    throw Error("unknown flavor: " + s);
}

/// Bags may be empty whether or not the flavor permits it; validate() decides.
inline bool flavor_allows_empty_bags(Flavor f) {
    return f == Flavor::NCW0 || f == Flavor::SC0 || f == Flavor::SC0v || f == Flavor::USC0;
}

struct Violation {
    enum class Kind { Partition, RootEmpty, GuardCondition, SizeBound, ChildGuardDisjointness };
    Kind kind;
    std::string location;  // node id, or child node id standing for the tree edge into it
    std::string detail;

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::Partition: return "partition";
            case Kind::RootEmpty: return "root-empty";
            case Kind::GuardCondition: return "guard-condition";
            case Kind::SizeBound: return "size-bound";
            case Kind::ChildGuardDisjointness: return "child-guard-disjointness";
        }
        return "?";
    }
};

struct FlavorReport {
    bool valid = false;
    int width = -1;
    std::vector<Violation> violations;
};

/// Rooted directed tree with a bag per node and a guard per tree edge
/// (stored on the edge's child endpoint). Edges are oriented away from the
/// root. Immutable in use; transformations return fresh values.
class TreeDecomposition {
public:
    std::shared_ptr<const Digraph> host;
    Flavor flavor = Flavor::SC0;
    std::vector<std::string> node_ids;
    std::vector<VertexSet> bag;    // per node
    std::vector<VertexSet> guard;  // guard of (parent(t), t); unused at the root
    std::vector<int> parent;       // -1 at the root
    int root = 0;

    int node_count() const { return static_cast<int>(node_ids.size()); }

    int node_index(const std::string& id) const {
        for (int i = 0; i < node_count(); ++i)
            if (node_ids[static_cast<std::size_t>(i)] == id) return i;
        throw Error("unknown decomposition node: " + id);
    }

    std::vector<std::vector<int>> children() const {
        std::vector<std::vector<int>> ch(static_cast<std::size_t>(node_count()));
        for (int t = 0; t < node_count(); ++t)
            if (t != root) ch[static_cast<std::size_t>(parent[static_cast<std::size_t>(t)])].push_back(t);
        return ch;
    }

    /// Checks the rooted-arborescence structure; throws on malformed input.
    void check_structure() const {
        if (node_count() == 0) throw Error("decomposition has no nodes");
        if (root < 0 || root >= node_count() || parent[static_cast<std::size_t>(root)] != -1)
            throw Error("decomposition root is inconsistent");
        for (int t = 0; t < node_count(); ++t) {
            if (t == root) continue;
            int p = parent[static_cast<std::size_t>(t)];
            if (p < 0 || p >= node_count()) throw Error("decomposition node with no parent: " + node_ids[static_cast<std::size_t>(t)]);
            // walk to the root, guarding against cycles
            int hops = 0;
            for (int v = t; v != root; v = parent[static_cast<std::size_t>(v)])
                if (++hops > node_count()) throw Error("decomposition parent structure has a cycle");
        }
    }

    /// beta(T_t): union of the bags in the subtree rooted at t.
    std::vector<VertexSet> subtree_sets() const {
        std::vector<VertexSet> acc = bag;
        std::vector<int> order = topo_order();
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (*it != root) acc[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] |= acc[static_cast<std::size_t>(*it)];
        return acc;
    }

    VertexSet gamma(int t) const {
        VertexSet g = bag[static_cast<std::size_t>(t)];
        if (t != root) g |= guard[static_cast<std::size_t>(t)];
        for (int c = 0; c < node_count(); ++c)
            if (c != root && parent[static_cast<std::size_t>(c)] == t) g |= guard[static_cast<std::size_t>(c)];
        return g;
    }

    int width() const {
        int w = -1;
        for (int t = 0; t < node_count(); ++t) w = std::max(w, gamma(t).count() - 1);
        return w;
    }

    /// Root-first order along tree edges.
    std::vector<int> topo_order() const {
        std::vector<int> order{root};
        auto ch = children();
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int c : ch[static_cast<std::size_t>(order[i])]) order.push_back(c);
        return order;
    }

    TreeDecomposition with_flavor(Flavor f) const {
        TreeDecomposition t = *this;
        t.flavor = f;
        return t;
    }
};

/// Checks every flavor condition of Defs. NW/NCW/NCW0/SC0/SC0v/USC0/SCd and
/// reports the width regardless of validity. All failures come back as
/// re-checkable Violations, never as exceptions.
inline FlavorReport validate(const TreeDecomposition& T) {
    T.check_structure();
    const Digraph& D = *T.host;
    FlavorReport rep;
    rep.width = T.width();
    auto fail = [&](Violation::Kind k, const std::string& loc, const std::string& detail) {
        rep.violations.push_back({k, loc, detail});
    };

    // Bag partition.
    VertexSet seen;
    bool disjoint = true;
    for (int t = 0; t < T.node_count(); ++t) {
        VertexSet b = T.bag[static_cast<std::size_t>(t)];
        if (b.intersects(seen)) {
            disjoint = false;
            fail(Violation::Kind::Partition, T.node_ids[static_cast<std::size_t>(t)],
                 "bag reuses vertices already bagged elsewhere");
        }
        seen |= b;
        if (b.empty() && !flavor_allows_empty_bags(T.flavor) && !(T.node_count() == 1 && D.n() == 0))
            fail(Violation::Kind::Partition, T.node_ids[static_cast<std::size_t>(t)], "empty bag");
    }
    (void)disjoint;
    if (!(seen == D.vertex_set()))
        fail(Violation::Kind::Partition, T.node_ids[static_cast<std::size_t>(T.root)],
             "bags do not cover V(D)");
    if (flavor_allows_empty_bags(T.flavor) && T.bag[static_cast<std::size_t>(T.root)].empty() && D.n() > 0)
        fail(Violation::Kind::RootEmpty, T.node_ids[static_cast<std::size_t>(T.root)], "root bag is empty");

    if (T.flavor == Flavor::SC0 && T.node_count() > D.n() * D.n())
        fail(Violation::Kind::SizeBound, T.node_ids[static_cast<std::size_t>(T.root)],
             "tree has " + std::to_string(T.node_count()) + " nodes, bound is " + std::to_string(D.n() * D.n()));

    // Per-edge guard conditions.
    std::vector<VertexSet> below = T.subtree_sets();
    SccCache sccs(D);
    for (int t = 0; t < T.node_count(); ++t) {
        if (t == T.root) continue;
        const std::string& loc = T.node_ids[static_cast<std::size_t>(t)];
        VertexSet g = T.guard[static_cast<std::size_t>(t)];
        VertexSet A = below[static_cast<std::size_t>(t)];
        switch (T.flavor) {
            case Flavor::NW: {
                if (A.intersects(g)) {
                    fail(Violation::Kind::GuardCondition, loc, "beta(T_t) meets its guard");
                    break;
                }
                if (auto w = D.normality_violation(g, A)) {
                    std::string via = D.name(w->vertices[1]);
                    fail(Violation::Kind::GuardCondition, loc,
                         "walk re-enters beta(T_t) through outside vertex (witness via " + via + ")");
                }
                break;
            }
            case Flavor::NCW:
            case Flavor::NCW0: {
                const SccPartition& p = sccs.partition(g);
                for (const VertexSet& comp : p.components) {
                    if (comp.count() < 2) continue;  // a closed walk needs two distinct vertices
                    if (comp.intersects(A) && !(comp - A).empty()) {
                        fail(Violation::Kind::GuardCondition, loc,
                             "closed walk crosses the beta(T_t) boundary (component through " +
                                 D.name((comp & A).min()) + " and " + D.name((comp - A).min()) + ")");
                        break;
                    }
                }
                break;
            }
            case Flavor::SC0:
            case Flavor::SC0v:
            case Flavor::SCd: {
                const SccPartition& p = sccs.partition(g);
                bool is_component = false;
                for (const VertexSet& comp : p.components)
                    if (comp == A) { is_component = true; break; }
                if (!is_component)
                    fail(Violation::Kind::GuardCondition, loc,
                         "beta(T_t) is not a strong component of D - guard");
                break;
            }
            case Flavor::USC0: {
                if (A.intersects(g)) {
                    fail(Violation::Kind::GuardCondition, loc, "beta(T_t) meets its guard");
                    break;
                }
                const SccPartition& p = sccs.partition(g);
                bool ok = true;
                for (int v : A)
                    if (!p.component_containing(v).subset_of(A)) { ok = false; break; }
                if (!ok)
                    fail(Violation::Kind::GuardCondition, loc,
                         "beta(T_t) is not a union of strong components of D - guard");
                break;
            }
        }
    }

    if (T.flavor == Flavor::SCd) {
        auto ch = T.children();
        for (int t = 0; t < T.node_count(); ++t) {
            VertexSet under;
            for (int c : ch[static_cast<std::size_t>(t)]) under |= below[static_cast<std::size_t>(c)];
            VertexSet guards;
            if (t != T.root) guards |= T.guard[static_cast<std::size_t>(t)];
            for (int c : ch[static_cast<std::size_t>(t)]) guards |= T.guard[static_cast<std::size_t>(c)];
            if (under.intersects(guards))
                fail(Violation::Kind::ChildGuardDisjointness, T.node_ids[static_cast<std::size_t>(t)],
                     "child subtrees meet the guards incident to this node");
        }
    }

    rep.valid = rep.violations.empty();
    return rep;
}

/// Re-roots an NCW/NCW0 decomposition at r_new by reversing the edges on the
/// old-root path while keeping every guard, preserving validity and width.
inline TreeDecomposition reroot_ncwe(const TreeDecomposition& T, int r_new) {
    if (T.flavor != Flavor::NCW && T.flavor != Flavor::NCW0)
        throw Error("reroot is only available for the NCW family");
    if (T.bag[static_cast<std::size_t>(r_new)].empty()) throw Error("new root has an empty bag");
    if (r_new == T.root) return T;
    TreeDecomposition R = T;
    std::vector<int> path;  // r_new up to old root
    for (int v = r_new; v != -1; v = T.parent[static_cast<std::size_t>(v)]) path.push_back(v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int child = path[i], par = path[i + 1];
        R.parent[static_cast<std::size_t>(par)] = child;
        R.guard[static_cast<std::size_t>(par)] = T.guard[static_cast<std::size_t>(child)];
    }
    R.parent[static_cast<std::size_t>(r_new)] = -1;
    R.guard[static_cast<std::size_t>(r_new)] = VertexSet{};
    R.root = r_new;
    return R;
}

/// Intersects bags and guards with V(H); valid NCW0 decomposition of the
/// subgraph H with width at most the input width.
inline TreeDecomposition restrict_to_subgraph(const TreeDecomposition& T, std::shared_ptr<const Digraph> H) {
    if (T.flavor != Flavor::NCW0) throw Error("restrict_to_subgraph requires flavor NCW0");
    const Digraph& D = *T.host;
    if (H->n() == 0) throw Error("restrict_to_subgraph: empty subgraph");
    VertexSet keep;  // over D indices
    for (const std::string& nm : H->names()) {
        if (!D.has_vertex(nm)) throw Error("restrict_to_subgraph: H is not a subgraph (vertex " + nm + ")");
        keep.insert(D.index_of(nm));
    }
    for (auto [t, h] : H->edges())
        if (!D.has_edge(D.index_of(H->name(t)), D.index_of(H->name(h))))
            throw Error("restrict_to_subgraph: H is not a subgraph (edge)");
    auto remap = [&](VertexSet s) {
        VertexSet out;
        for (int v : s & keep) out.insert(H->index_of(D.name(v)));
        return out;
    };
    TreeDecomposition R = T;
    R.host = H;
    for (int t = 0; t < R.node_count(); ++t) {
        R.bag[static_cast<std::size_t>(t)] = remap(T.bag[static_cast<std::size_t>(t)]);
        if (t != T.root) R.guard[static_cast<std::size_t>(t)] = remap(T.guard[static_cast<std::size_t>(t)]);
    }
    if (R.bag[static_cast<std::size_t>(R.root)].empty()) {
        for (int t = 0; t < R.node_count(); ++t)
            if (!R.bag[static_cast<std::size_t>(t)].empty()) return reroot_ncwe(R, t);
        throw Error("restrict_to_subgraph: no nonempty bag remains");
    }
    return R;
}

/// Applies the constructive bag/guard rewrite for contracting a butterfly
/// contractible edge (u,v) of the host into x_name: guards swap {u,v} for the
/// merged vertex, and the out-degree of u decides which of the two bag slots
/// the merged vertex lands in.
inline TreeDecomposition lift_contraction(const TreeDecomposition& T, const std::string& u_name,
                                          const std::string& v_name, const std::string& x_name) {
    if (T.flavor != Flavor::NCW0) throw Error("lift_contraction requires flavor NCW0");
    const Digraph& H = *T.host;
    int u = H.index_of(u_name), v = H.index_of(v_name);
    auto quotient = std::make_shared<const Digraph>(H.contract_edge(u, v, x_name));
    int x = quotient->index_of(x_name);
    bool tail_case = H.out_degree(u) == 1;

    int u_T = -1, v_T = -1;
    for (int t = 0; t < T.node_count(); ++t) {
        if (T.bag[static_cast<std::size_t>(t)].contains(u)) u_T = t;
        if (T.bag[static_cast<std::size_t>(t)].contains(v)) v_T = t;
    }
    if (u_T < 0 || v_T < 0) throw Error("lift_contraction: u or v is unbagged");

    auto remap = [&](VertexSet s, bool add_x) {
        VertexSet out;
        for (int w : s)
            if (w != u && w != v) out.insert(quotient->index_of(H.name(w)));
        if (add_x) out.insert(x);
        return out;
    };
    TreeDecomposition R = T;
    R.host = quotient;
    for (int t = 0; t < T.node_count(); ++t) {
        VertexSet b = T.bag[static_cast<std::size_t>(t)];
        bool add_x;
        if (t == u_T && t == v_T) {
            add_x = true;
        } else if (t == u_T) {
            add_x = !tail_case;
        } else if (t == v_T) {
            add_x = tail_case;
        } else {
            add_x = false;
        }
        R.bag[static_cast<std::size_t>(t)] = remap(b, add_x);
        if (t != T.root) {
            VertexSet g = T.guard[static_cast<std::size_t>(t)];
            R.guard[static_cast<std::size_t>(t)] = remap(g, g.contains(u) || g.contains(v));
        }
    }
    if (R.bag[static_cast<std::size_t>(R.root)].empty()) {
        for (int t = 0; t < R.node_count(); ++t)
            if (!R.bag[static_cast<std::size_t>(t)].empty()) return reroot_ncwe(R, t);
        throw Error("lift_contraction: no nonempty bag remains");
    }
    return R;
}

/// Splits vertex v out of bag(t) into a fresh node between t and t's
/// children. The input must be SC0v; the result is a valid USC0
/// decomposition of width at most the input's.
inline TreeDecomposition split_bag(const TreeDecomposition& T, int t, int v) {
    if (T.flavor != Flavor::SC0v) throw Error("split_bag requires flavor SC0v");
    if (T.bag[static_cast<std::size_t>(t)].count() < 2) throw Error("split_bag: bag has fewer than two vertices");
    if (!T.bag[static_cast<std::size_t>(t)].contains(v)) throw Error("split_bag: vertex not in the bag");
    TreeDecomposition R = T;
    R.flavor = Flavor::USC0;
    int fresh = R.node_count();
    std::string fresh_id = T.node_ids[static_cast<std::size_t>(t)] + "_split";
    for (int i = 0; i < T.node_count(); ++i)
        if (T.node_ids[static_cast<std::size_t>(i)] == fresh_id) fresh_id += "x";
    R.node_ids.push_back(fresh_id);
    VertexSet rest = T.bag[static_cast<std::size_t>(t)];
    rest.erase(v);
    R.bag[static_cast<std::size_t>(t)] = rest;
    R.bag.push_back(VertexSet::single(v));
    VertexSet incoming = (t == T.root) ? VertexSet{} : T.guard[static_cast<std::size_t>(t)];
    R.guard.push_back(incoming | rest);
    R.parent.push_back(t);
    for (int c = 0; c < T.node_count(); ++c)
        if (c != T.root && T.parent[static_cast<std::size_t>(c)] == t) R.parent[static_cast<std::size_t>(c)] = fresh;
    return R;
}

/// Normalises a USC0 decomposition to SC0v: every subtree whose set is a
/// union of several strong components is replicated into one sibling copy
/// per component, with bags intersected accordingly. Returns the projection
/// new node -> original node alongside.
inline std::pair<TreeDecomposition, std::vector<int>> usc_to_scv(const TreeDecomposition& T) {
    if (T.flavor != Flavor::USC0) throw Error("usc_to_scv requires flavor USC0");
    if (!validate(T).valid) throw Error("usc_to_scv: input is not a valid USC0 decomposition");
    const Digraph& D = *T.host;
    SccCache sccs(D);
    std::vector<VertexSet> below = T.subtree_sets();
    auto ch = T.children();

    TreeDecomposition R;
    R.host = T.host;
    R.flavor = Flavor::SC0v;
    std::vector<int> projection;
    std::vector<int> copy_count(static_cast<std::size_t>(T.node_count()), 0);

    auto fresh_node = [&](int orig, VertexSet bag, VertexSet guard, int par) {
        int id = static_cast<int>(R.node_ids.size());
        std::string nid = T.node_ids[static_cast<std::size_t>(orig)];
        if (copy_count[static_cast<std::size_t>(orig)]++ > 0)
            nid += "_c" + std::to_string(copy_count[static_cast<std::size_t>(orig)] - 1);
        R.node_ids.push_back(nid);
        R.bag.push_back(bag);
        R.guard.push_back(guard);
        R.parent.push_back(par);
        projection.push_back(orig);
        return id;
    };

    // Each work item is one copy: the original node, the strong component the
    // copy is confined to (all of V at the root), and the copy's parent in R.
    struct Item { int orig; VertexSet confined; int parent; };
    int new_root = fresh_node(T.root, T.bag[static_cast<std::size_t>(T.root)], VertexSet{}, -1);
    R.root = new_root;
    std::vector<Item> queue;
    for (int c : ch[static_cast<std::size_t>(T.root)]) {
        VertexSet g = T.guard[static_cast<std::size_t>(c)];
        for (const VertexSet& comp : sccs.partition(g).components)
            if (comp.subset_of(below[static_cast<std::size_t>(c)]))
                queue.push_back({c, comp, new_root});
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Item item = queue[qi];
        int node = fresh_node(item.orig, T.bag[static_cast<std::size_t>(item.orig)] & item.confined,
                              T.guard[static_cast<std::size_t>(item.orig)], item.parent);
        for (int c : ch[static_cast<std::size_t>(item.orig)]) {
            VertexSet g = T.guard[static_cast<std::size_t>(c)];
            for (const VertexSet& comp : sccs.partition(g).components)
                if (comp.subset_of(below[static_cast<std::size_t>(c)]) && comp.subset_of(item.confined))
                    queue.push_back({c, comp, node});
        }
    }
    return {R, projection};
}

/// Repeatedly contracts deletable empty bags: a degree-one chain t1 -> t2 -> t3
/// with bag(t2) empty where either guard contains the other or beta(T_t3) is a
/// strong component of D minus their intersection. The merged edge keeps the
/// intersection as its guard. Terminates with no deletable empty bag left.
inline TreeDecomposition remove_deletable_empty_bags(const TreeDecomposition& T) {
    if (T.flavor != Flavor::SC0v) throw Error("remove_deletable_empty_bags requires flavor SC0v");
    TreeDecomposition R = T;
    SccCache sccs(*T.host);
    bool changed = true;
    while (changed) {
        changed = false;
        auto ch = R.children();
        std::vector<VertexSet> below = R.subtree_sets();
        for (int t2 = 0; t2 < R.node_count() && !changed; ++t2) {
            if (t2 == R.root || !R.bag[static_cast<std::size_t>(t2)].empty()) continue;
            if (ch[static_cast<std::size_t>(t2)].size() != 1) continue;
            int t3 = ch[static_cast<std::size_t>(t2)][0];
            VertexSet g1 = R.guard[static_cast<std::size_t>(t2)], g2 = R.guard[static_cast<std::size_t>(t3)];
            bool deletable = g1.subset_of(g2) || g2.subset_of(g1);
            if (!deletable) {
                for (const VertexSet& comp : sccs.partition(g1 & g2).components)
                    if (comp == below[static_cast<std::size_t>(t3)]) { deletable = true; break; }
            }
            if (!deletable) continue;
            // splice t2 out
            TreeDecomposition S;
            S.host = R.host;
            S.flavor = R.flavor;
            std::vector<int> remap(static_cast<std::size_t>(R.node_count()), -1);
            for (int i = 0; i < R.node_count(); ++i) {
                if (i == t2) continue;
                remap[static_cast<std::size_t>(i)] = static_cast<int>(S.node_ids.size());
                S.node_ids.push_back(R.node_ids[static_cast<std::size_t>(i)]);
                S.bag.push_back(R.bag[static_cast<std::size_t>(i)]);
                S.guard.push_back(i == t3 ? (g1 & g2) : R.guard[static_cast<std::size_t>(i)]);
                int p = R.parent[static_cast<std::size_t>(i)];
                if (i == t3) p = R.parent[static_cast<std::size_t>(t2)];
                S.parent.push_back(p);  // old indices, fixed below
            }
            for (std::size_t i = 0; i < S.parent.size(); ++i)
                if (S.parent[i] != -1) S.parent[i] = remap[static_cast<std::size_t>(S.parent[i])];
            S.root = remap[static_cast<std::size_t>(R.root)];
            R = std::move(S);
            changed = true;
        }
    }
    return R;
}

}  // namespace dtw

#endif
