#include <catch2/catch_amalgamated.hpp>

#include "dtw/fixture_store.hpp"
#include "dtw/fixtures.hpp"
#include "dtw/json_io.hpp"
#include "support/helpers.hpp"

using namespace dtw;

namespace {

int digon_count(const Digraph& d) {
    int twoway = 0;
    for (auto [t, h] : d.edges())
        if (d.has_edge(h, t)) ++twoway;
    return twoway / 2;
}

int oneway_count(const Digraph& d) {
    int one = 0;
    for (auto [t, h] : d.edges())
        if (!d.has_edge(h, t)) ++one;
    return one;
}

int digon_degree(const Digraph& d, const std::string& v) {
    int i = d.index_of(v);
    return (d.out_neighbours(i) & d.in_neighbours(i)).count();
}

/// The sign flip v <-> -v fixing the hub pair.
std::string flip(const std::string& name) {
    if (name == "0" || name == "0p") return name;
    if (name.rfind('m', 0) == 0) return name.substr(1);
    return "m" + name;
}

bool sign_flip_is_automorphism(const Digraph& d) {
    for (const auto& nm : d.names())
        if (!d.has_vertex(flip(nm))) return false;
    for (auto [t, h] : d.edges())
        if (!d.has_edge(d.index_of(flip(d.name(t))), d.index_of(flip(d.name(h))))) return false;
    return true;
}

}  // namespace

TEST_CASE("edge-count audit against the independent transcription tables") {
    // counts read off the drawings in a second pass, independent of the
    // builder code
    struct Row {
        const char* name;
        int n, digons, oneway;
    };
    const Row rows[] = {
        {"D1", 34, 73, 30},      {"D1p", 40, 73, 36},      {"D2", 16, 31, 12},
        {"D2p", 18, 31, 14},     {"bramble_D", 6, 0, 8},   {"bramble_Dp", 12, 0, 14},
    };
    for (const Row& r : rows) {
        Digraph d = fixtures::build_graph(r.name);
        INFO(r.name);
        CHECK(d.n() == r.n);
        CHECK(digon_count(d) == r.digons);
        CHECK(oneway_count(d) == r.oneway);
        CHECK(d.edge_count() == 2 * r.digons + r.oneway);
    }
}

TEST_CASE("digon-degree spot checks used by the lower-bound arguments") {
    Digraph d1 = fixtures::make_d1();
    for (const auto& nm : d1.names()) {
        if (nm == "4" || nm == "4p" || nm == "m4" || nm == "m4p") continue;
        INFO(nm);
        CHECK(digon_degree(d1, nm) >= 4);
    }
    CHECK(digon_degree(d1, "4") == 2);   // 3 and 4p
    CHECK(digon_degree(d1, "4p") == 3);  // 3, 3p and 4

    Digraph d2 = fixtures::make_d2();
    for (const auto& nm : d2.names()) {
        if (nm == "0" || nm == "4" || nm == "m4") continue;
        INFO(nm);
        CHECK(digon_degree(d2, nm) >= 4);
    }
    CHECK(digon_degree(d2, "0") == 3);  // 0p, 1 and m1
    CHECK(digon_degree(d2, "4") == 2);  // 3 and 3p
}

TEST_CASE("hub cliques") {
    Digraph d1 = fixtures::make_d1();
    for (auto quad : {std::vector<std::string>{"0", "0p", "a", "ap"}, {"0", "0p", "ma", "map"}}) {
        Digraph k = d1.induced_subgraph(d1.set_of(quad));
        CHECK(k.edge_count() == 12);
    }
}

TEST_CASE("sign-flip symmetry of the counterexample family") {
    for (const char* name : {"D1", "D1p", "D2", "D2p"}) {
        INFO(name);
        CHECK(sign_flip_is_automorphism(fixtures::build_graph(name)));
    }
}

TEST_CASE("every catalogued fixture loads and matches its claim") {
    for (const auto& e : fixtures::catalog()) {
        std::string problem = fixtures::check_fixture(e.name);
        INFO(e.name << ": " << problem);
        CHECK(problem.empty());
    }
}

TEST_CASE("fixture JSON round trips") {
    // graphs
    Digraph d2 = fixtures::make_d2();
    CHECK(same_named_digraph(digraph_from_json(to_json(d2)), d2));
    // decompositions
    auto d2s = std::make_shared<const Digraph>(d2);
    TreeDecomposition T = fixtures::make_dtd_ncw_d2(d2s);
    TreeDecomposition T2 = decomposition_from_json(to_json(T), d2s);
    CHECK(T2.node_count() == T.node_count());
    CHECK(validate(T2).valid);
    CHECK(T2.flavor == Flavor::NCW);
    for (int t = 0; t < T.node_count(); ++t) {
        CHECK(T2.bag[static_cast<std::size_t>(t)] == T.bag[static_cast<std::size_t>(t)]);
        CHECK(T2.guard[static_cast<std::size_t>(t)] == T.guard[static_cast<std::size_t>(t)]);
    }
    // witnesses
    MinorWitness w = fixtures::make_witness_d2_d2p();
    MinorWitness w2 = witness_from_json(to_json(w));
    CHECK(w2.script.keep_vertices == w.script.keep_vertices);
    CHECK(w2.script.steps.size() == w.script.steps.size());
    // strategies
    StrategyTree S = fixtures::make_strategy_d2_nonmono(d2);
    StrategyTree S2 = strategy_from_json(to_json(d2, S), d2);
    CHECK(S2.node_count() == S.node_count());
    CHECK(validate_strategy_tree(d2, S2).valid);
    // brambles
    Bramble b = fixtures::make_bramble_weak_d(fixtures::make_bramble_d());
    Digraph bd = fixtures::make_bramble_d();
    Bramble b2 = bramble_from_json(to_json(bd, b), bd);
    CHECK(b2.elements == b.elements);
    CHECK(b2.kind == b.kind);
}

TEST_CASE("corrupt fixture data is rejected by the checksum") {
    // loading an unknown fixture also fails cleanly
    CHECK_THROWS_AS(fixtures::load_graph("nope"), Error);
}
