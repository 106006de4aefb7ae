#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "dtw/digraph.hpp"
#include "dtw/fixtures.hpp"
#include "dtw/iso.hpp"

using namespace dtw;

namespace {

Digraph cycle(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    for (int i = 0; i < n; ++i) edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>((i + 1) % n)]);
    return Digraph::build(names, edges);
}

/// Reachability oracle independent of the bitset BFS: Floyd-Warshall closure.
std::vector<std::vector<bool>> closure_oracle(const Digraph& d, VertexSet removed) {
    int n = d.n();
    std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [t, h] : d.edges())
        if (!removed.contains(t) && !removed.contains(h)) r[static_cast<std::size_t>(t)][static_cast<std::size_t>(h)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    return r;
}

Digraph random_digraph(std::mt19937& rng, int n, double p) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng) < p) edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
    return Digraph::build(names, edges);
}

}  // namespace

TEST_CASE("build_digraph validates its input") {
    CHECK(Digraph::build({"a"}, {}).n() == 1);
    Digraph tri = cycle(3);
    CHECK(tri.n() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK_THROWS_AS(Digraph::build({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Digraph::build({"a"}, {{"a", "a"}}), Error);
    CHECK_THROWS_AS(Digraph::build({"a", "b"}, {{"a", "b"}, {"a", "b"}}), Error);
    CHECK_THROWS_AS(Digraph::build({"a", "b"}, {{"a", "c"}}), Error);
}

TEST_CASE("D1 loads with 34 vertices") {
    Digraph d1 = fixtures::make_d1();
    CHECK(d1.n() == 34);
    CHECK(d1.strongly_connected());
}

TEST_CASE("strong components on small graphs") {
    Digraph tri = cycle(3);
    SccPartition p = tri.strong_components();
    REQUIRE(p.size() == 1);
    CHECK(p.components[0] == tri.vertex_set());

    SccPartition q = tri.strong_components(VertexSet::single(tri.index_of("2")));
    CHECK(q.size() == 2);
    for (const VertexSet& c : q.components) CHECK(c.count() == 1);
}

TEST_CASE("bramble figure host is one strong component of size six") {
    Digraph d = fixtures::make_bramble_d();
    SccPartition p = d.strong_components();
    REQUIRE(p.size() == 1);
    CHECK(p.components[0].count() == 6);
    // oracle cross-check
    auto r = closure_oracle(d, {});
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            if (i != j) CHECK(r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
}

TEST_CASE("strong component partition properties on random graphs") {
    std::mt19937 rng(12345);
    for (int round = 0; round < 60; ++round) {
        Digraph d = random_digraph(rng, 6, 0.3);
        std::uniform_int_distribution<std::uint64_t> mask(0, (1u << 6) - 1);
        VertexSet removed(mask(rng));
        SccPartition p = d.strong_components(removed);
        VertexSet seen;
        auto reach = closure_oracle(d, removed);
        for (const VertexSet& comp : p.components) {
            CHECK_FALSE(comp.intersects(seen));
            seen |= comp;
            // pairwise mutual reachability inside a component
            for (int u : comp)
                for (int v : comp)
                    if (u != v) CHECK((reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
                                       reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]));
        }
        CHECK(seen == (d.vertex_set() - removed));
        // maximality: no two components are mutually reachable
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b) {
                if (a == b) continue;
                int u = p.components[static_cast<std::size_t>(a)].min();
                int v = p.components[static_cast<std::size_t>(b)].min();
                CHECK_FALSE((reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
                             reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]));
            }
    }
}

TEST_CASE("closed walks through two vertices follow strong components") {
    Digraph tri = cycle(3);
    CHECK(tri.closed_walk_through_both({}, tri.index_of("1"), tri.index_of("3")));
    CHECK_FALSE(tri.closed_walk_through_both(VertexSet::single(tri.index_of("2")), tri.index_of("1"), tri.index_of("3")));
    CHECK_THROWS_AS(tri.closed_walk_through_both(VertexSet::single(0), 0, 1), Error);

    // u = w: true iff u lies on a cycle; never on a DAG
    Digraph dag = Digraph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    for (int v = 0; v < dag.n(); ++v) CHECK_FALSE(dag.closed_walk_through_both({}, v, v));
    CHECK(tri.closed_walk_through_both({}, 0, 0));

    // cross-check against a walk-counting oracle on random graphs: a closed
    // walk through u and w exists iff paths u->w and w->u survive
    std::mt19937 rng(777);
    for (int round = 0; round < 40; ++round) {
        Digraph d = random_digraph(rng, 6, 0.25);
        auto reach = closure_oracle(d, {});
        for (int u = 0; u < d.n(); ++u)
            for (int w = 0; w < d.n(); ++w) {
                bool expected = reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] &&
                                reach[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)];
                CHECK(d.closed_walk_through_both({}, u, w) == expected);
            }
    }
}

TEST_CASE("normality violations") {
    Digraph tri = cycle(3);
    // A = everything: no outside vertex exists
    CHECK_FALSE(tri.normality_violation({}, tri.vertex_set()).has_value());
    auto w = tri.normality_violation({}, VertexSet::single(tri.index_of("1")));
    REQUIRE(w.has_value());
    CHECK(w->validate(tri));
    CHECK(w->vertices.front() == tri.index_of("1"));
    CHECK(w->vertices.back() == tri.index_of("1"));
    CHECK(w->vertices.size() == 4);  // 1 -> 2 -> 3 -> 1

    // D2: leaf bag {4} guarded by {3, 3p} is normal
    Digraph d2 = fixtures::make_d2();
    CHECK_FALSE(d2.normality_violation(d2.set_of({"3", "3p"}), d2.set_of({"4"})).has_value());
    CHECK_THROWS_AS(d2.normality_violation(d2.set_of({"4"}), d2.set_of({"4"})), Error);
}

TEST_CASE("butterfly contractibility") {
    Digraph path = Digraph::build({"u", "v"}, {{"u", "v"}});
    CHECK(path.butterfly_contractible(0, 1));

    // two out-edges meeting two in-edges: not contractible
    Digraph d = Digraph::build({"u", "v", "x", "y"},
                               {{"u", "v"}, {"u", "x"}, {"y", "v"}, {"x", "v"}});
    CHECK_FALSE(d.butterfly_contractible(d.index_of("u"), d.index_of("v")));
    CHECK_THROWS_AS(d.butterfly_contractible(d.index_of("v"), d.index_of("u")), Error);

    // subdivision vertex a in the bramble figure has in-degree 1
    Digraph dp = fixtures::make_bramble_dp();
    CHECK(dp.butterfly_contractible(dp.index_of("1"), dp.index_of("a")));
}

TEST_CASE("contract_edge keeps the graph simple") {
    Digraph path = Digraph::build({"u", "v"}, {{"u", "v"}});
    Digraph single = path.contract_edge(0, 1, "x");
    CHECK(single.n() == 1);
    CHECK(single.edge_count() == 0);

    Digraph tri = cycle(3);
    Digraph digon = tri.contract_edge(tri.index_of("1"), tri.index_of("2"), "x");
    CHECK(digon.n() == 2);
    CHECK(digon.edge_count() == 2);
    CHECK(digon.has_edge(digon.index_of("x"), digon.index_of("3")));
    CHECK(digon.has_edge(digon.index_of("3"), digon.index_of("x")));

    Digraph notok = Digraph::build({"u", "v", "x", "y"},
                                   {{"u", "v"}, {"u", "x"}, {"y", "v"}, {"x", "v"}});
    CHECK_THROWS_AS(notok.contract_edge(0, 1, "z"), Error);
}

TEST_CASE("contraction between strong components preserves the component structure") {
    // Contracting an edge with endpoints in different
    // strong components keeps the multiset of component sizes, and each
    // nontrivial component stays isomorphic to an original one.
    std::mt19937 rng(31337);
    int tested = 0;
    for (int round = 0; round < 300 && tested < 60; ++round) {
        Digraph d = random_digraph(rng, 6, 0.25);
        SccPartition p = d.strong_components();
        for (auto [t, h] : d.edges()) {
            if (p.comp_of[static_cast<std::size_t>(t)] == p.comp_of[static_cast<std::size_t>(h)]) continue;
            if (!d.butterfly_contractible(t, h)) continue;
            Digraph q = d.contract_edge(t, h, "merged");
            std::vector<int> before, after;
            for (const VertexSet& c : p.components) before.push_back(c.count());
            SccPartition pq = q.strong_components();
            for (const VertexSet& c : pq.components) after.push_back(c.count());
            std::sort(before.begin(), before.end());
            std::sort(after.begin(), after.end());
            // the contraction merges two components into ... no: sizes drop by
            // one singleton-ish merge; per the statement every component of the
            // result is isomorphic to one of the original
            for (const VertexSet& c : pq.components) {
                Digraph sub = q.induced_subgraph(c);
                bool matched = false;
                for (const VertexSet& c0 : p.components) {
                    if (c0.count() != c.count()) continue;
                    Digraph sub0 = d.induced_subgraph(c0);
                    if (are_isomorphic(sub, sub0)) { matched = true; break; }
                }
                CHECK(matched);
            }
            ++tested;
            break;
        }
    }
    CHECK(tested >= 30);
}

TEST_CASE("induced subgraphs and edge deletion") {
    Digraph d1 = fixtures::make_d1();
    CHECK(d1.induced_subgraph(d1.vertex_set()) == d1);
    CHECK(d1.induced_subgraph({}).n() == 0);
    // the hub clique of D1
    Digraph clique = d1.induced_subgraph(d1.set_of({"0", "0p", "a", "ap"}));
    CHECK(clique.n() == 4);
    CHECK(clique.edge_count() == 12);  // bidirected K4
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) CHECK(clique.has_edge(u, v));
}

TEST_CASE("lifting closed walks over a contraction") {
    Digraph tri = cycle(3);
    Digraph digon = tri.contract_edge(0, 1, "x");
    Walk w;
    w.vertices = {digon.index_of("x"), digon.index_of("3"), digon.index_of("x")};
    w.closed = true;
    Walk lifted = tri.lift_closed_walk(0, 1, digon, digon.index_of("x"), w);
    CHECK(lifted.validate(tri));
    CHECK(lifted.closed);
    // deg+(1)=1 in the 3-cycle, so the lift contains vertex "2"
    bool has2 = false;
    for (int v : lifted.vertices) has2 |= (v == tri.index_of("2"));
    CHECK(has2);

    // a non-closed input is rejected
    Walk w2;
    w2.vertices = {digon.index_of("3"), digon.index_of("x")};
    w2.closed = false;
    CHECK_THROWS_AS(tri.lift_closed_walk(0, 1, digon, digon.index_of("x"), w2), Error);

    // a walk avoiding x lifts unchanged
    Digraph host = Digraph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}});
    Digraph q = host.contract_edge(host.index_of("b"), host.index_of("c"), "x");
    Walk wa;
    wa.vertices = {q.index_of("a"), q.index_of("x"), q.index_of("a")};
    wa.closed = true;
    Walk la = host.lift_closed_walk(host.index_of("b"), host.index_of("c"), q, q.index_of("x"), wa);
    CHECK(la.validate(host));

    // property: lifted walks always validate edge-by-edge
    std::mt19937 rng(99);
    int done = 0;
    for (int round = 0; round < 400 && done < 50; ++round) {
        Digraph d = random_digraph(rng, 6, 0.3);
        for (auto [t, h] : d.edges()) {
            if (!d.butterfly_contractible(t, h)) continue;
            Digraph qq = d.contract_edge(t, h, "zz");
            int x = qq.index_of("zz");
            SccPartition p = qq.strong_components();
            VertexSet comp = p.component_containing(x);
            if (comp.count() < 2) continue;
            // build a closed walk through x and the next vertex of its component
            int other = -1;
            for (int cand : comp)
                if (cand != x) { other = cand; break; }
            auto fwd = qq.reachable_from(VertexSet::single(x));
            (void)fwd;
            // walk: x -> ... -> other -> ... -> x via shortest paths
            Walk wx;
            {
                // rebuild with a simple BFS here, independent of library internals
                auto bfs = [&](int from, int to) {
                    std::vector<int> par(static_cast<std::size_t>(qq.n()), -2);
                    std::vector<int> queue{from};
                    par[static_cast<std::size_t>(from)] = -1;
                    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                        for (int nb : qq.out_neighbours(queue[qi])) {
                            if (par[static_cast<std::size_t>(nb)] != -2) continue;
                            par[static_cast<std::size_t>(nb)] = queue[qi];
                            queue.push_back(nb);
                        }
                    }
                    std::vector<int> path;
                    for (int v = to; v != -1; v = par[static_cast<std::size_t>(v)]) path.push_back(v);
                    std::reverse(path.begin(), path.end());
                    return path;
                };
                auto p1 = bfs(x, other), p2 = bfs(other, x);
                wx.vertices = p1;
                wx.vertices.insert(wx.vertices.end(), p2.begin() + 1, p2.end());
                wx.closed = true;
            }
            REQUIRE(wx.validate(qq));
            Walk lifted2 = d.lift_closed_walk(t, h, qq, x, wx);
            CHECK(lifted2.validate(d));
            CHECK(lifted2.closed);
            bool contains_required = false;
            int required = d.out_degree(t) == 1 ? h : t;
            for (int v : lifted2.vertices) contains_required |= (v == required);
            CHECK(contains_required);
            ++done;
            break;
        }
    }
    CHECK(done >= 30);
}
