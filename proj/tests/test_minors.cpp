#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "dtw/fixtures.hpp"
#include "dtw/minor_search.hpp"
#include "dtw/minors.hpp"
#include "support/helpers.hpp"

using namespace dtw;
using namespace dtw::testing;

TEST_CASE("replay: empty script is the identity") {
    Digraph d = cycle(4);
    ContractionScript s;
    s.keep_vertices = d.names();
    CHECK(same_named_digraph(replay_script(d, s), d));
}

TEST_CASE("replay: the bundled scripts reproduce their targets") {
    SECTION("D1 in D1p") {
        Digraph d1 = fixtures::make_d1(), d1p = fixtures::make_d1p();
        MinorWitness w = fixtures::make_witness_d1_d1p();
        CHECK_FALSE(verify_witness(d1, d1p, w).has_value());
    }
    SECTION("D2 in D2p") {
        Digraph d2 = fixtures::make_d2(), d2p = fixtures::make_d2p();
        MinorWitness w = fixtures::make_witness_d2_d2p();
        CHECK_FALSE(verify_witness(d2, d2p, w).has_value());
    }
    SECTION("bramble pair") {
        Digraph d = fixtures::make_bramble_d(), dp = fixtures::make_bramble_dp();
        MinorWitness w = fixtures::make_witness_bramble();
        CHECK_FALSE(verify_witness(d, dp, w).has_value());
    }
}

TEST_CASE("replay rejects broken scripts") {
    Digraph d = Digraph::build({"u", "v", "x", "y"},
                               {{"u", "v"}, {"u", "x"}, {"y", "v"}, {"x", "v"}});
    ContractionScript s;
    s.keep_vertices = d.names();
    s.steps.push_back({"u", "v", "z"});  // not butterfly contractible
    CHECK_THROWS_AS(replay_script(d, s), Error);
    ContractionScript s2;
    s2.keep_vertices = d.names();
    s2.steps.push_back({"u", "y", "z"});  // no such edge
    CHECK_THROWS_AS(replay_script(d, s2), Error);
}

TEST_CASE("butterfly models: identity and violations") {
    Digraph d = cycle(3);
    ButterflyModel id = identity_model(d, d);
    CHECK(verify_model(d, d, id).valid);

    // overlapping vertex images break disjointness
    ButterflyModel bad = id;
    bad.blob[1].root = bad.blob[0].root;
    ModelVerdict v = verify_model(d, d, bad);
    CHECK_FALSE(v.valid);
    bool mentions_disjoint = false;
    for (const auto& s : v.violations) mentions_disjoint |= s.find("disjointness") != std::string::npos;
    CHECK(mentions_disjoint);
}

TEST_CASE("models derived from the bundled scripts verify") {
    SECTION("D1 in D1p") {
        Digraph d1 = fixtures::make_d1(), d1p = fixtures::make_d1p();
        ButterflyModel mu = witness_model(d1, d1p, fixtures::make_witness_d1_d1p());
        CHECK(verify_model(d1, d1p, mu).valid);
        // the hub blob absorbed the six path vertices
        CHECK(mu.blob[static_cast<std::size_t>(d1.index_of("0"))].vertices().count() == 7);
    }
    SECTION("D2 in D2p") {
        Digraph d2 = fixtures::make_d2(), d2p = fixtures::make_d2p();
        ButterflyModel mu = witness_model(d2, d2p, fixtures::make_witness_d2_d2p());
        CHECK(verify_model(d2, d2p, mu).valid);
    }
    SECTION("bramble pair") {
        Digraph d = fixtures::make_bramble_d(), dp = fixtures::make_bramble_dp();
        ButterflyModel mu = witness_model(d, dp, fixtures::make_witness_bramble());
        CHECK(verify_model(d, dp, mu).valid);
    }
}

TEST_CASE("models derived from random scripts verify") {
    std::mt19937 rng(2024);
    for (int round = 0; round < 120; ++round) {
        Digraph d = random_digraph(rng, 6, 0.35);
        auto [w, target] = random_minor(rng, d);
        REQUIRE_FALSE(verify_witness(target, d, w).has_value());
        ButterflyModel mu = witness_model(target, d, w);
        CHECK(verify_model(target, d, mu).valid);
    }
}

TEST_CASE("find_butterfly_minor: identity and trivial cases") {
    Digraph d = cycle(4);
    MinorSearchResult r = find_butterfly_minor(d, d);
    REQUIRE(r.found());
    CHECK(r.witness->script.steps.empty());
    CHECK_FALSE(verify_witness(d, d, *r.witness).has_value());
}

TEST_CASE("find_butterfly_minor: cycles are never minors of DAGs") {
    std::mt19937 rng(5);
    Digraph tri = cycle(3);
    for (int round = 0; round < 25; ++round) {
        Digraph dag = random_dag(rng, 5, 0.5);
        MinorSearchResult r = find_butterfly_minor(tri, dag);
        CHECK(r.status == MinorSearchResult::Status::Absent);
    }
}

TEST_CASE("find_butterfly_minor: the bramble figure pair") {
    Digraph d = fixtures::make_bramble_d(), dp = fixtures::make_bramble_dp();
    MinorSearchResult r = find_butterfly_minor(d, dp);
    REQUIRE(r.found());
    CHECK_FALSE(verify_witness(d, dp, *r.witness).has_value());
}

TEST_CASE("find_butterfly_minor agrees with the closure oracle on small hosts") {
    std::mt19937 rng(424242);
    int absent_checked = 0, present_checked = 0;
    for (int round = 0; round < 30; ++round) {
        Digraph host = random_digraph(rng, 5, 0.35);
        MinorClosure oracle(host);
        for (int probe = 0; probe < 6; ++probe) {
            int tn = 1 + static_cast<int>(rng() % 4u);
            Digraph target = random_digraph(rng, tn, 0.5);
            MinorSearchResult r = find_butterfly_minor(target, host, 500'000);
            REQUIRE(r.status != MinorSearchResult::Status::BudgetExhausted);
            bool expected = oracle.contains(target);
            CHECK(r.found() == expected);
            if (r.found()) {
                CHECK_FALSE(verify_witness(target, host, *r.witness).has_value());
                ++present_checked;
            } else {
                ++absent_checked;
            }
        }
    }
    CHECK(absent_checked > 20);
    CHECK(present_checked > 20);
}

TEST_CASE("minimal_major: the bramble figure host cannot be thinned") {
    Digraph d = fixtures::make_bramble_d(), dp = fixtures::make_bramble_dp();
    auto [H, w] = minimal_major(d, dp, fixtures::make_witness_bramble());
    CHECK(same_named_digraph(H, dp));
    CHECK_FALSE(verify_witness(d, H, w).has_value());
    // audit: no single deletion preserves containment
    for (auto [t, h] : H.edges()) {
        MinorSearchResult r = find_butterfly_minor(d, H.delete_edges({{t, h}}));
        CHECK_FALSE(r.found());
    }
}

TEST_CASE("minimal_major: a single vertex minor thins the host to one vertex") {
    Digraph target = Digraph::build({"z"}, {});
    Digraph host = cycle(4);
    MinorWitness w;
    w.script.keep_vertices = {"1"};
    w.rename["1"] = "z";
    auto [H, wmin] = minimal_major(target, host, w);
    CHECK(H.n() == 1);
    CHECK(H.edge_count() == 0);
    CHECK_FALSE(verify_witness(target, H, wmin).has_value());
}

TEST_CASE("minimal_major keeps strong connectivity of strongly connected minors") {
    std::mt19937 rng(777);
    int done = 0;
    for (int round = 0; round < 200 && done < 25; ++round) {
        Digraph host = random_digraph(rng, 6, 0.4);
        auto [w, target] = random_minor(rng, host, 0.95, 0.95, 2);
        if (target.n() == 0 || !target.strongly_connected()) continue;
        auto [H, wmin] = minimal_major(target, host, w);
        CHECK(H.strongly_connected());
        CHECK_FALSE(verify_witness(target, H, wmin).has_value());
        ++done;
    }
    CHECK(done >= 20);
}

TEST_CASE("found witnesses always re-verify (round trip)") {
    std::mt19937 rng(31415);
    for (int round = 0; round < 40; ++round) {
        Digraph host = random_digraph(rng, 5, 0.4);
        auto [w, target] = random_minor(rng, host);
        MinorSearchResult r = find_butterfly_minor(target, host, 500'000);
        REQUIRE(r.found());  // it is a minor by construction
        CHECK_FALSE(verify_witness(target, host, *r.witness).has_value());
    }
}
