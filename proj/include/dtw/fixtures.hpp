#ifndef DTW_FIXTURES_HPP
#define DTW_FIXTURES_HPP

#include <cstdlib>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dtw/decomp.hpp"
#include "dtw/digraph.hpp"
#include "dtw/game.hpp"
#include "dtw/minors.hpp"
#include "dtw/obstructions.hpp"

// The bundled instances are the classical counterexample digraphs for
// directed tree-width non-closure (Adler's construction and its variants)
// together with their width certificates, cop strategies and minor
// witnesses. data/TRANSCRIPTION.md documents every edge; undirected lines in
// the usual drawings denote digons and are stored as two arcs. Primed names
// carry the suffix "p", negative names the prefix "m".

namespace dtw::fixtures {

namespace detail {

struct EdgeListBuilder {
    std::vector<std::pair<std::string, std::string>> edges;

    void arc(const std::string& a, const std::string& b) { edges.emplace_back(a, b); }
    void digon(const std::string& a, const std::string& b) {
        arc(a, b);
        arc(b, a);
    }
};

/// The shared 2xN ladder pattern of the D1 family: levels 0..8 are
/// 0,a,b,c,d,1,2,3,4 on one side (prefix "" or "m"). Returns digons between
/// consecutive levels plus the red back arcs.
inline void d1_side(EdgeListBuilder& b, const std::string& s) {
    auto P = [&](const std::string& x) { return s + x; };
    // rung and ladder digons, exactly as drawn
    b.digon("0", P("a"));
    b.digon("0p", P("ap"));
    b.digon("0p", P("a"));
    b.digon("0", P("ap"));
    b.digon(P("a"), P("ap"));
    b.digon(P("a"), P("b"));
    b.digon(P("a"), P("bp"));
    b.digon(P("ap"), P("bp"));
    b.digon(P("ap"), P("b"));
    b.digon(P("b"), P("bp"));
    b.digon(P("b"), P("c"));
    b.digon(P("b"), P("cp"));
    b.digon(P("bp"), P("cp"));
    b.digon(P("c"), P("cp"));
    b.digon(P("c"), P("d"));
    b.digon(P("c"), P("dp"));
    b.digon(P("cp"), P("dp"));
    b.digon(P("cp"), P("d"));
    b.digon(P("d"), P("dp"));
    b.digon(P("d"), P("1"));
    b.digon(P("d"), P("1p"));
    b.digon(P("dp"), P("1p"));
    b.digon(P("1"), P("1p"));
    b.digon(P("1"), P("2"));
    b.digon(P("1"), P("2p"));
    b.digon(P("1p"), P("2p"));
    b.digon(P("1p"), P("2"));
    b.digon(P("2"), P("2p"));
    b.digon(P("2"), P("3"));
    b.digon(P("2p"), P("3p"));
    b.digon(P("3"), P("3p"));
    b.digon(P("2"), P("3p"));
    b.digon(P("3"), P("4"));
    b.digon(P("3"), P("4p"));
    b.digon(P("3p"), P("4p"));
    b.digon(P("4p"), P("4"));
    // red arcs
    b.arc(P("4"), P("2p"));
    b.arc(P("4p"), P("2"));
    b.arc(P("4"), P("2"));
    b.arc(P("4p"), P("2p"));
    b.arc(P("4"), P("1"));
    b.arc(P("4p"), P("1"));
    b.arc(P("1"), P("c"));
    b.arc(P("c"), P("a"));
    b.arc(P("b"), "0");
    b.arc(P("2"), P("d"));
    b.arc(P("2"), P("dp"));
    b.arc(P("d"), P("b"));
    b.arc(P("d"), P("bp"));
}

inline std::vector<std::string> d1_names(bool with_pi) {
    std::vector<std::string> names{"0", "0p"};
    auto side = [&](const std::string& s) {
        for (const char* lv : {"a", "b", "c", "d", "1", "2", "3", "4"}) {
            names.push_back(s + lv);
            names.push_back(s + lv + "p");
        }
        if (with_pi)
            for (const char* pv : {"pi1", "pi2", "pi3"}) names.push_back(s + pv);
    };
    side("");
    side("m");
    return names;
}

}  // namespace detail

inline Digraph make_d1() {
    detail::EdgeListBuilder b;
    b.digon("0", "0p");
    detail::d1_side(b, "");
    detail::d1_side(b, "m");
    b.arc("0", "4");
    b.arc("0", "4p");
    b.arc("0", "m4");
    b.arc("0", "m4p");
    return Digraph::build(detail::d1_names(false), b.edges);
}

/// D1 with each blue hub-to-top arc pair replaced by a guarded path of three
/// fresh vertices; contracting the paths back into the hub recovers D1.
inline Digraph make_d1p() {
    detail::EdgeListBuilder b;
    b.digon("0", "0p");
    detail::d1_side(b, "");
    detail::d1_side(b, "m");
    for (const std::string s : {"", "m"}) {
        b.arc("0", s + "pi1");
        b.arc(s + "pi1", s + "pi2");
        b.arc(s + "pi2", s + "pi3");
        b.arc(s + "pi3", s + "4");
        b.arc(s + "pi3", s + "4p");
    }
    return Digraph::build(detail::d1_names(true), b.edges);
}

namespace detail {

inline void d2_side(EdgeListBuilder& b, const std::string& s, bool with_five) {
    auto P = [&](const std::string& x) { return s + x; };
    b.digon("0", P("1"));
    b.digon("0p", P("1p"));
    b.digon("0p", P("1"));
    b.digon(P("1"), P("1p"));
    b.digon(P("1"), P("2"));
    b.digon(P("1p"), P("2p"));
    b.digon(P("1p"), P("2"));
    b.digon(P("2"), P("2p"));
    b.digon(P("2"), P("3"));
    b.digon(P("2p"), P("3p"));
    b.digon(P("2p"), P("3"));
    b.digon(P("3"), P("3p"));
    b.digon(P("2"), P("3p"));
    b.digon(P("3"), P("4"));
    b.digon(P("3p"), P("4"));
    b.arc("0", P("2p"));
    b.arc("0p", P("2"));
    b.arc("0", P("2"));
    b.arc("0p", P("2p"));
    if (with_five) {
        b.arc(P("4"), P("5"));
        b.arc(P("5"), "0");
        b.arc(P("5"), "0p");
    } else {
        b.arc(P("4"), "0");
        b.arc(P("4"), "0p");
    }
}

inline std::vector<std::string> d2_names(bool with_five) {
    std::vector<std::string> names{"0", "0p"};
    auto side = [&](const std::string& s) {
        for (const char* lv : {"1", "2", "3"}) {
            names.push_back(s + lv);
            names.push_back(s + lv + "p");
        }
        names.push_back(s + "4");
        if (with_five) names.push_back(s + "5");
    };
    side("");
    side("m");
    return names;
}

}  // namespace detail

inline Digraph make_d2() {
    detail::EdgeListBuilder b;
    b.digon("0", "0p");
    detail::d2_side(b, "", false);
    detail::d2_side(b, "m", false);
    return Digraph::build(detail::d2_names(false), b.edges);
}

/// D2 with each top vertex 4 split into 4 -> 5, the return arcs moving to 5;
/// contracting (4,5) and (m4,m5) recovers D2.
inline Digraph make_d2p() {
    detail::EdgeListBuilder b;
    b.digon("0", "0p");
    detail::d2_side(b, "", true);
    detail::d2_side(b, "m", true);
    return Digraph::build(detail::d2_names(true), b.edges);
}

/// Two directed triangles joined by single arcs both ways; the weak-bramble
/// asymmetry host pair's minor side.
inline Digraph make_bramble_d() {
    detail::EdgeListBuilder b;
    b.arc("1", "2");
    b.arc("2", "3");
    b.arc("3", "1");
    b.arc("4", "5");
    b.arc("5", "6");
    b.arc("6", "4");
    b.arc("1", "4");
    b.arc("6", "3");
    return Digraph::build({"1", "2", "3", "4", "5", "6"}, b.edges);
}

/// The same pair with six arcs subdivided (a..f); it has no weak bramble of
/// order 2 although its butterfly minor above does.
inline Digraph make_bramble_dp() {
    detail::EdgeListBuilder b;
    b.arc("1", "a");
    b.arc("a", "2");
    b.arc("2", "b");
    b.arc("b", "3");
    b.arc("3", "1");
    b.arc("4", "d");
    b.arc("d", "5");
    b.arc("5", "e");
    b.arc("e", "6");
    b.arc("6", "4");
    b.arc("1", "c");
    b.arc("c", "4");
    b.arc("6", "f");
    b.arc("f", "3");
    return Digraph::build({"1", "2", "3", "4", "5", "6", "a", "b", "c", "d", "e", "f"}, b.edges);
}

// ---------------------------------------------------------------------------
// Decompositions

namespace detail {

struct DtdBuilder {
    TreeDecomposition T;

    DtdBuilder(std::shared_ptr<const Digraph> host, Flavor f, const std::string& root_id,
               const std::vector<std::string>& root_bag) {
        T.host = std::move(host);
        T.flavor = f;
        T.node_ids.push_back(root_id);
        T.bag.push_back(T.host->set_of(root_bag));
        T.guard.push_back(VertexSet{});
        T.parent.push_back(-1);
        T.root = 0;
    }

    int add(int parent, const std::string& id, const std::vector<std::string>& bag,
            const std::vector<std::string>& guard) {
        T.node_ids.push_back(id);
        T.bag.push_back(T.host->set_of(bag));
        T.guard.push_back(T.host->set_of(guard));
        T.parent.push_back(parent);
        return T.node_count() - 1;
    }
};

/// One sweep chain of the D1-family decompositions: bags and guards follow
/// the drawn pattern with prefix s ("" or "m") and hole vertex h (empty bag
/// for D1, the pi vertices for D1').
inline void d1_chain(DtdBuilder& b, const std::string& s, bool with_pi) {
    auto P = [&](const char* x) { return s + x; };
    std::string h1 = with_pi ? s + "pi1" : "", h2 = with_pi ? s + "pi2" : "", h3 = with_pi ? s + "pi3" : "";
    auto hole = [&](const std::string& h) {
        return h.empty() ? std::vector<std::string>{} : std::vector<std::string>{h};
    };
    auto g1 = [&](const std::string& h, const char* x, const char* y) {
        std::vector<std::string> g{h.empty() ? "0" : h};
        g.push_back(s + x);
        g.push_back(s + y);
        return g;
    };
    int t = b.add(0, s + "t1", {P("a"), P("ap")}, {"0", "0p"});
    t = b.add(t, s + "t2", {P("b")}, {"0", P("a"), P("ap")});
    t = b.add(t, s + "t3", {P("bp")}, {P("a"), P("ap"), P("b")});
    t = b.add(t, s + "t4", hole(h1), {P("a"), P("b"), P("bp")});
    t = b.add(t, s + "t5", {P("cp")}, g1(h1, "b", "bp"));
    t = b.add(t, s + "t6", {P("c")}, g1(h1, "b", "cp"));
    t = b.add(t, s + "t7", {P("d")}, g1(h1, "c", "cp"));
    t = b.add(t, s + "t8", {P("dp")}, {P("c"), P("cp"), P("d")});
    t = b.add(t, s + "t9", hole(h2), {P("c"), P("d"), P("dp")});
    t = b.add(t, s + "t10", {P("1p")}, g1(h2, "d", "dp"));
    t = b.add(t, s + "t11", {P("1")}, g1(h2, "d", "1p"));
    t = b.add(t, s + "t12", {P("2")}, g1(h2, "1", "1p"));
    t = b.add(t, s + "t13", {P("2p")}, {P("1"), P("1p"), P("2")});
    t = b.add(t, s + "t14", hole(h3), {P("1"), P("2"), P("2p")});
    t = b.add(t, s + "t15", {P("3p")}, g1(h3, "2", "2p"));
    t = b.add(t, s + "t16", {P("3")}, g1(h3, "2", "3p"));
    t = b.add(t, s + "t17", {P("4p")}, g1(h3, "3", "3p"));
    t = b.add(t, s + "t18", {P("4")}, g1(h3, "3", "4p"));
}

}  // namespace detail

inline TreeDecomposition make_dtd_sc0_d1(std::shared_ptr<const Digraph> d1) {
    detail::DtdBuilder b(std::move(d1), Flavor::SC0, "r", {"0", "0p"});
    detail::d1_chain(b, "m", false);
    detail::d1_chain(b, "", false);
    return b.T;
}

inline TreeDecomposition make_dtd_ncw_d1p(std::shared_ptr<const Digraph> d1p) {
    detail::DtdBuilder b(std::move(d1p), Flavor::NCW, "r", {"0", "0p"});
    detail::d1_chain(b, "m", true);
    detail::d1_chain(b, "", true);
    return b.T;
}

namespace detail {

inline void d2_chain(DtdBuilder& b, const std::string& s, bool with_five) {
    auto P = [&](const char* x) { return s + x; };
    std::string top = with_five ? s + "5" : s + "4";
    int t = b.add(0, s + "q1", {P("1")}, {"0", "0p"});
    t = b.add(t, s + "q2", {P("1p")}, {"0p", P("1"), top});
    t = b.add(t, s + "q3", {P("2")}, {P("1"), P("1p"), top});
    t = b.add(t, s + "q4", {P("2p")}, {P("1p"), P("2"), top});
    if (with_five) {
        t = b.add(t, s + "q5", {P("3")}, {P("2"), P("2p"), top});
    } else {
        t = b.add(t, s + "q5", {P("3")}, {P("2"), P("2p")});
    }
    t = b.add(t, s + "q6", {P("3p")}, {P("2"), P("2p"), P("3")});
    t = b.add(t, s + "q7", {P("4")}, {P("3"), P("3p")});
}

}  // namespace detail

inline TreeDecomposition make_dtd_ncw_d2(std::shared_ptr<const Digraph> d2) {
    detail::DtdBuilder b(std::move(d2), Flavor::NCW, "r", {"0", "0p"});
    detail::d2_chain(b, "m", false);
    detail::d2_chain(b, "", false);
    return b.T;
}

inline TreeDecomposition make_dtd_sc0_d2p(std::shared_ptr<const Digraph> d2p) {
    detail::DtdBuilder b(std::move(d2p), Flavor::SC0, "r", {"0", "0p"});
    b.add(0, "mleaf5", {"m5"}, {"0", "0p"});
    detail::d2_chain(b, "m", true);
    detail::d2_chain(b, "", true);
    b.add(0, "leaf5", {"5"}, {"0", "0p"});
    return b.T;
}

// ---------------------------------------------------------------------------
// Minor witnesses

inline MinorWitness make_witness_d1_d1p() {
    MinorWitness w;
    w.script.keep_vertices = detail::d1_names(true);
    for (const std::string s : {"", "m"}) {
        w.script.steps.push_back({"0", s + "pi1", "0"});
        w.script.steps.push_back({"0", s + "pi2", "0"});
        w.script.steps.push_back({"0", s + "pi3", "0"});
    }
    return w;
}

inline MinorWitness make_witness_d2_d2p() {
    MinorWitness w;
    w.script.keep_vertices = detail::d2_names(true);
    w.script.steps.push_back({"4", "5", "4"});
    w.script.steps.push_back({"m4", "m5", "m4"});
    return w;
}

inline MinorWitness make_witness_bramble() {
    MinorWitness w;
    w.script.keep_vertices = {"1", "2", "3", "4", "5", "6", "a", "b", "c", "d", "e", "f"};
    w.script.steps.push_back({"1", "a", "1"});
    w.script.steps.push_back({"2", "b", "2"});
    w.script.steps.push_back({"4", "d", "4"});
    w.script.steps.push_back({"5", "e", "5"});
    w.script.steps.push_back({"1", "c", "1"});
    w.script.steps.push_back({"6", "f", "6"});
    return w;
}

// ---------------------------------------------------------------------------
// Cop strategies as strategy trees

namespace detail {

struct StrategyBuilder {
    const Digraph& d;
    StrategyTree T;

    StrategyBuilder(const Digraph& host, const std::string& root_id, const std::vector<std::string>& root_cops)
        : d(host) {
        T.node_ids.push_back(root_id);
        T.cops.push_back(d.set_of(root_cops));
        T.robber.push_back(VertexSet{});
        T.parent.push_back(-1);
        T.root = 0;
    }

    int add(int parent, const std::string& id, const std::vector<std::string>& cops, VertexSet robber) {
        T.node_ids.push_back(id);
        T.cops.push_back(d.set_of(cops));
        T.robber.push_back(robber);
        T.parent.push_back(parent);
        return T.node_count() - 1;
    }
};

/// The 18-position sweep through one side of D1. `from` is the node whose
/// cop set already is {hub, s+a, s+ap}-style start of the side; the robber
/// label of each edge is the component left to clear, recomputed from the
/// parent's cop set for fidelity.
inline void d1_sweep(StrategyBuilder& b, int from, const std::string& s, bool include_first) {
    const Digraph& d = b.d;
    SccCache sccs(d);
    auto P = [&](const char* x) { return s + x; };
    std::vector<std::vector<std::string>> sweep = {
        {"0", "0p", P("a"), P("ap")}, {"0", P("a"), P("ap"), P("b")}, {P("a"), P("ap"), P("b"), P("bp")},
        {P("a"), P("b"), P("bp"), "0"}, {P("b"), P("bp"), "0", P("cp")}, {P("b"), "0", P("cp"), P("c")},
        {"0", P("cp"), P("c"), P("d")}, {P("cp"), P("c"), P("d"), P("dp")}, {P("c"), P("d"), P("dp"), "0"},
        {P("d"), P("dp"), "0", P("1p")}, {P("d"), "0", P("1p"), P("1")}, {"0", P("1p"), P("1"), P("2")},
        {P("1p"), P("1"), P("2"), P("2p")}, {P("1"), P("2"), P("2p"), "0"}, {P("2"), P("2p"), "0", P("3p")},
        {P("2"), "0", P("3p"), P("3")}, {"0", P("3p"), P("3"), P("4p")}, {"0", P("3"), P("4p"), P("4")}};
    int t = from;
    std::size_t first = include_first ? 0 : 1;
    for (std::size_t i = first; i < sweep.size(); ++i) {
        VertexSet prev_cops = b.T.cops[static_cast<std::size_t>(t)];
        VertexSet space = sccs.component_of(prev_cops, d.index_of(P("4")));
        t = b.add(t, s + "t" + std::to_string(i + 1), sweep[i], space);
    }
}

}  // namespace detail

/// The full robber-monotone 4-cop sweep on D1, opening on the hub pair.
inline StrategyTree make_strategy_d1_sweep(const Digraph& d1) {
    detail::StrategyBuilder b(d1, "r", {"0", "0p"});
    detail::d1_sweep(b, 0, "m", true);
    detail::d1_sweep(b, 0, "", true);
    return b.T;
}

/// The sweep re-rooted at the clique position: this tree has exactly 36
/// nodes, two more than |V(D1)|.
inline StrategyTree make_strategy_d1_rooted(const Digraph& d1) {
    detail::StrategyBuilder b(d1, "t1", {"0", "0p", "a", "ap"});
    SccCache sccs(d1);
    int neg = b.add(0, "mt1", {"0", "0p", "ma", "map"},
                    sccs.component_of(b.T.cops[0], d1.index_of("m4")));
    detail::d1_sweep(b, neg, "m", false);
    detail::d1_sweep(b, 0, "", false);
    return b.T;
}

/// The robber-monotone 4-cop strategy on D2': open on {0,0p,1,m1}, walk each
/// side with the split vertex 5 pinned until the top is sealed.
inline StrategyTree make_strategy_d2p_mono(const Digraph& d2p) {
    detail::StrategyBuilder b(d2p, "r", {"0", "0p", "1", "m1"});
    SccCache sccs(d2p);
    for (const std::string s : {"m", ""}) {
        auto P = [&](const char* x) { return s + x; };
        std::vector<std::vector<std::string>> sweep = {
            {"0", "0p", P("1"), P("5")},  {"0p", P("1"), P("1p"), P("5")}, {P("1"), P("1p"), P("2"), P("5")},
            {P("1p"), P("2"), P("2p"), P("5")}, {P("2"), P("2p"), P("3"), P("5")},
            {P("2"), P("2p"), P("3"), P("3p")}, {P("3"), P("3p"), P("4")}};
        VertexSet root_cops = b.T.cops[0];
        VertexSet side = sccs.component_of(root_cops, d2p.index_of(P("4"))) |
                         sccs.component_of(root_cops, d2p.index_of(P("5")));
        int t = b.add(0, P("c1"), sweep[0], side);
        for (std::size_t i = 1; i < sweep.size(); ++i) {
            VertexSet prev = b.T.cops[static_cast<std::size_t>(t)];
            VertexSet space = sccs.component_of(prev, d2p.index_of(P("4")));
            t = b.add(t, s + "c" + std::to_string(i + 1), sweep[i], space);
        }
    }
    return b.T;
}

/// The non-monotone 4-cop win on D2: pinning 4 and sealing from below lets
/// the robber slip from 3p to 4 once, after which the top is taken.
inline StrategyTree make_strategy_d2_nonmono(const Digraph& d2) {
    detail::StrategyBuilder b(d2, "r", {"0", "0p", "1", "m1"});
    SccCache sccs(d2);
    for (const std::string s : {"m", ""}) {
        auto P = [&](const char* x) { return s + x; };
        std::vector<std::vector<std::string>> sweep = {
            {"0", "0p", P("1"), P("4")},  {"0p", P("1"), P("1p"), P("4")}, {P("1"), P("1p"), P("2"), P("4")},
            {P("1p"), P("2"), P("2p"), P("4")}, {P("2"), P("2p"), P("3"), P("4")},
            {P("2"), P("2p"), P("3"), P("3p")}, {P("3"), P("3p"), P("4")}};
        VertexSet root_cops = b.T.cops[0];
        VertexSet side = sccs.component_of(root_cops, d2.index_of(P("4")));
        int t = b.add(0, P("e1"), sweep[0], side);
        for (std::size_t i = 1; i < sweep.size(); ++i) {
            VertexSet prev = b.T.cops[static_cast<std::size_t>(t)];
            VertexSet space = i == 6 ? sccs.component_of(prev, d2.index_of(P("4")))
                                     : sccs.component_of(prev, d2.index_of(P("3p")));
            t = b.add(t, s + "e" + std::to_string(i + 1), sweep[i], space);
        }
    }
    return b.T;
}

inline Bramble make_bramble_weak_d(const Digraph& bramble_d) {
    Bramble b;
    b.kind = BrambleKind::Weak;
    b.elements.push_back(bramble_d.set_of({"1", "2", "3"}));
    b.elements.push_back(bramble_d.set_of({"4", "5", "6"}));
    return b;
}

// ---------------------------------------------------------------------------
// Catalog and file loading

enum class Kind { Graph, Decomposition, Strategy, Witness, Bramble };

struct Entry {
    std::string name;
    Kind kind;
    std::string base;  // graph fixture the object lives on (or host for witnesses)
    std::string note;
};

inline const std::vector<Entry>& catalog() {
    static const std::vector<Entry> entries = {
        {"D1", Kind::Graph, "", "34-vertex hub-and-ladders digraph; SC0 width 3 but NCW width 4"},
        {"D1p", Kind::Graph, "", "D1 with the hub arcs subdivided into guarded paths; NCW width 3"},
        {"D2", Kind::Graph, "", "16-vertex double ladder; NCW width 3 but SC0 width 4"},
        {"D2p", Kind::Graph, "", "D2 with split tops; SC0 and SCd width 3"},
        {"bramble_D", Kind::Graph, "", "two triangles joined both ways; weak bramble number 2"},
        {"bramble_Dp", Kind::Graph, "", "subdivided variant with weak bramble number 1"},
        {"dtd_SC0_D1", Kind::Decomposition, "D1", "SC0 decomposition of D1, width 3"},
        {"dtd_NCW_D1p", Kind::Decomposition, "D1p", "NCW decomposition of D1p, width 3"},
        {"dtd_NCW_D2", Kind::Decomposition, "D2", "NCW decomposition of D2, width 3"},
        {"dtd_SC0_D2p", Kind::Decomposition, "D2p", "SC0 (and SCd) decomposition of D2p, width 3"},
        {"witness_D1_D1p", Kind::Witness, "D1p", "contraction script proving D1 <=b D1p"},
        {"witness_D2_D2p", Kind::Witness, "D2p", "contraction script proving D2 <=b D2p"},
        {"witness_bramble", Kind::Witness, "bramble_Dp", "script proving bramble_D <=b bramble_Dp"},
        {"strategy_D1_sweep", Kind::Strategy, "D1", "robber-monotone 4-cop sweep of D1, 37 nodes"},
        {"strategy_D1_rooted", Kind::Strategy, "D1", "the sweep rooted at the clique position, 36 nodes"},
        {"strategy_D2p_mono", Kind::Strategy, "D2p", "robber-monotone 4-cop strategy on D2p"},
        {"strategy_D2_nonmono", Kind::Strategy, "D2", "4-cop win on D2 that is not robber-monotone"},
        {"bramble_weak_D", Kind::Bramble, "bramble_D", "the order-2 weak bramble of bramble_D"},
    };
    return entries;
}

inline Digraph build_graph(const std::string& name) {
    if (name == "D1") return make_d1();
    if (name == "D1p") return make_d1p();
    if (name == "D2") return make_d2();
    if (name == "D2p") return make_d2p();
    if (name == "bramble_D") return make_bramble_d();
    if (name == "bramble_Dp") return make_bramble_dp();
    throw Error("unknown graph fixture: " + name);
}

}  // namespace dtw::fixtures

#endif
