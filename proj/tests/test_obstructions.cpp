#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "dtw/exact_width.hpp"
#include "dtw/fixtures.hpp"
#include "dtw/obstructions.hpp"
#include "support/helpers.hpp"

using namespace dtw;
using namespace dtw::testing;

TEST_CASE("bramble validation") {
    Digraph d = fixtures::make_bramble_d();
    SECTION("the figure's weak bramble is valid, as strong it is not") {
        Bramble b = fixtures::make_bramble_weak_d(d);
        CHECK(validate_bramble(d, b).valid);
        Bramble s = b;
        s.kind = BrambleKind::Strong;
        CHECK_FALSE(validate_bramble(d, s).valid);
    }
    SECTION("K3 both ways: pairwise overlapping pairs form a strong bramble") {
        Digraph k3 = bidirected_clique(3);
        Bramble b;
        b.kind = BrambleKind::Strong;
        b.elements = {k3.set_of({"1", "2"}), k3.set_of({"2", "3"}), k3.set_of({"1", "3"})};
        CHECK(validate_bramble(k3, b).valid);
    }
    SECTION("elements must induce strongly connected subgraphs") {
        Bramble b;
        b.kind = BrambleKind::Weak;
        b.elements = {d.set_of({"1", "4"})};
        CHECK_FALSE(validate_bramble(d, b).valid);
    }
}

TEST_CASE("bramble order") {
    SECTION("singleton bramble") {
        Digraph one = Digraph::build({"v"}, {});
        Bramble b{BrambleKind::Strong, {one.set_of({"v"})}};
        CoverCertificate c = bramble_order(one, b);
        CHECK(c.order() == 1);
        CHECK(c.cover == one.set_of({"v"}));
    }
    SECTION("K3 pairs need two cover vertices (brute-force checked)") {
        Digraph k3 = bidirected_clique(3);
        Bramble b{BrambleKind::Strong, {k3.set_of({"1", "2"}), k3.set_of({"2", "3"}), k3.set_of({"1", "3"})}};
        CoverCertificate c = bramble_order(k3, b);
        // oracle: no single vertex hits all three pairs
        for (int v = 0; v < 3; ++v) {
            bool hits_all = true;
            for (const VertexSet& el : b.elements) hits_all &= el.contains(v);
            CHECK_FALSE(hits_all);
        }
        CHECK(c.order() == 2);
    }
    SECTION("the figure's weak bramble has order 2") {
        Digraph d = fixtures::make_bramble_d();
        CHECK(bramble_order(d, fixtures::make_bramble_weak_d(d)).order() == 2);
    }
}

TEST_CASE("bramble numbers") {
    SECTION("single vertex") {
        Digraph one = Digraph::build({"v"}, {});
        CHECK(bramble_number(one, BrambleKind::Strong).first == 1);
    }
    SECTION("the weak bramble asymmetry of the figure pair") {
        Digraph d = fixtures::make_bramble_d();
        Digraph dp = fixtures::make_bramble_dp();
        auto [bd, wd] = bramble_number(d, BrambleKind::Weak);
        CHECK(bd == 2);
        CHECK(validate_bramble(d, wd).valid);
        auto [bdp, wdp] = bramble_number(dp, BrambleKind::Weak, 12);
        CHECK(bdp == 1);
    }
    SECTION("directed cycle: strong bramble number 1 (brute force at n=4)") {
        Digraph c4 = cycle(4);
        auto [bn, w] = bramble_number(c4, BrambleKind::Strong);
        (void)w;
        CHECK(bn == 1);
    }
}

TEST_CASE("bn is monotone under butterfly minors") {
    std::mt19937 rng(8080);
    int done = 0;
    for (int round = 0; round < 80 && done < 30; ++round) {
        Digraph host = random_digraph(rng, 6, 0.35);
        auto [w, target] = random_minor(rng, host);
        if (target.n() == 0) continue;
        int bn_host = bramble_number(host, BrambleKind::Strong).first;
        int bn_target = bramble_number(target, BrambleKind::Strong).first;
        CHECK(bn_target <= bn_host);
        ++done;
    }
    CHECK(done >= 25);
}

TEST_CASE("weak brambles are not minor-monotone: the stored counterexample") {
    Digraph d = fixtures::make_bramble_d();
    Digraph dp = fixtures::make_bramble_dp();
    // d <=b dp yet the weak bramble number grows from 1 to 2
    CHECK_FALSE(verify_witness(d, dp, fixtures::make_witness_bramble()).has_value());
    CHECK(bramble_number(dp, BrambleKind::Weak, 12).first == 1);
    CHECK(bramble_number(d, BrambleKind::Weak).first == 2);
}

TEST_CASE("lift_bramble") {
    Digraph d = fixtures::make_bramble_d();
    Digraph dp = fixtures::make_bramble_dp();
    SECTION("identity witness returns an equal-order bramble") {
        MinorWitness id;
        id.script.keep_vertices = d.names();
        Bramble whole{BrambleKind::Strong, {d.vertex_set()}};
        Bramble lifted = lift_bramble(d, d, id, whole);
        CHECK(validate_bramble(d, lifted).valid);
        CHECK(bramble_order(d, lifted).order() >= 1);
    }
    SECTION("whole-graph bramble lifts across the figure pair") {
        Bramble whole{BrambleKind::Strong, {d.vertex_set()}};
        Bramble lifted = lift_bramble(d, dp, fixtures::make_witness_bramble(), whole);
        CHECK(validate_bramble(dp, lifted).valid);
        CHECK(bramble_order(dp, lifted).order() >= bramble_order(d, whole).order());
    }
    SECTION("weak brambles are rejected") {
        Bramble weak = fixtures::make_bramble_weak_d(d);
        CHECK_THROWS_AS(lift_bramble(d, dp, fixtures::make_witness_bramble(), weak), Error);
    }
    SECTION("random strong brambles lift with order preserved") {
        std::mt19937 rng(4321);
        int done = 0;
        for (int round = 0; round < 150 && done < 25; ++round) {
            Digraph host = random_digraph(rng, 6, 0.4);
            auto [w, target] = random_minor(rng, host, 0.95, 0.95, 2);
            if (target.n() == 0) continue;
            auto [bn, bramble] = bramble_number(target, BrambleKind::Strong);
            if (bramble.elements.empty()) continue;
            Bramble lifted = lift_bramble(target, host, w, bramble);
            CHECK(validate_bramble(host, lifted).valid);
            CHECK(bramble_order(host, lifted).order() >= bn);
            ++done;
        }
        CHECK(done >= 20);
    }
}

TEST_CASE("k-linked sets and balanced separators") {
    SECTION("the empty set is never k-linked") {
        Digraph tri = cycle(3);
        LinkedSetReport rep = is_k_linked(tri, {}, 0);
        CHECK_FALSE(rep.linked());
        CHECK(rep.balanced_separator == VertexSet{});
    }
    SECTION("K5 both ways is 2-linked (exhaustive)") {
        Digraph k5 = bidirected_clique(5);
        LinkedSetReport rep = is_k_linked(k5, k5.vertex_set(), 2);
        CHECK(rep.linked());
        // oracle: any 2 removals leave a K3 holding 3 > 5/2 vertices of W
        LinkedSetReport rep3 = is_k_linked(k5, k5.vertex_set(), 3);
        CHECK_FALSE(rep3.linked());
    }
}

TEST_CASE("D1 has no 4-linked set (sampled vertex sets)") {
    Digraph d1 = fixtures::make_d1();
    std::mt19937 rng(616);
    std::vector<VertexSet> samples{d1.vertex_set(), d1.set_of({"0", "0p", "a", "ap", "b", "bp", "c", "cp"})};
    for (int i = 0; i < 8; ++i) {
        VertexSet w;
        for (int v = 0; v < d1.n(); ++v)
            if (rng() % 2u) w.insert(v);
        if (w.count() >= 2) samples.push_back(w);
    }
    for (const VertexSet& w : samples) {
        LinkedSetReport rep = is_k_linked(d1, w, 4, 200'000'000);
        INFO("|W| = " << w.count());
        CHECK_FALSE(rep.linked());
        if (rep.balanced_separator) {
            // re-check the separator independently
            int half = w.count();
            for (const VertexSet& comp : d1.strong_components(*rep.balanced_separator).components)
                CHECK(2 * (comp & w).count() <= half);
        }
    }
}

TEST_CASE("k-linked sets give brambles of order k+1") {
    SECTION("K3 both ways with W = V and k = 1") {
        Digraph k3 = bidirected_clique(3);
        REQUIRE(is_k_linked(k3, k3.vertex_set(), 1).linked());
        Bramble b = klinked_to_bramble(k3, k3.vertex_set(), 1);
        CHECK(validate_bramble(k3, b).valid);
        CHECK(bramble_order(k3, b).order() >= 2);
    }
    SECTION("all k-linked instances found on random n <= 7 digraphs") {
        std::mt19937 rng(5150);
        int found = 0;
        for (int round = 0; round < 50 && found < 12; ++round) {
            Digraph d = random_digraph(rng, 6 + static_cast<int>(rng() % 2u), 0.5);
            VertexSet W = d.vertex_set();
            for (int k = 1; k <= 2; ++k) {
                LinkedSetReport rep = is_k_linked(d, W, k);
                if (!rep.linked()) continue;
                Bramble b = klinked_to_bramble(d, W, k);
                REQUIRE(validate_bramble(d, b).valid);
                CHECK(bramble_order(d, b).order() >= k + 1);
                ++found;
            }
        }
        CHECK(found >= 10);
    }
}

TEST_CASE("brambles induce havens") {
    SECTION("a single vertex") {
        Digraph one = Digraph::build({"v"}, {});
        Bramble b{BrambleKind::Strong, {one.set_of({"v"})}};
        HavenVerdict v = bramble_haven_check(one, b, 1);
        CHECK(v.valid);
    }
    SECTION("the K3 majority bramble gives a haven of order 2") {
        Digraph k3 = bidirected_clique(3);
        Bramble b = klinked_to_bramble(k3, k3.vertex_set(), 1);
        HavenVerdict v = bramble_haven_check(k3, b, 2);
        for (const auto& s : v.violations) INFO(s);
        CHECK(v.valid);
    }
    SECTION("an under-ordered bramble fails totality") {
        Digraph k3 = bidirected_clique(3);
        Bramble b{BrambleKind::Strong, {k3.set_of({"1"})}};
        HavenVerdict v = bramble_haven_check(k3, b, 2);
        CHECK_FALSE(v.valid);
    }
}

TEST_CASE("width-bramble links on small digraphs") {
    std::mt19937 rng(2718);
    for (int round = 0; round < 12; ++round) {
        Digraph d = random_digraph(rng, 4, 0.5);
        auto host = std::make_shared<const Digraph>(d);
        int bn = bramble_number(d, BrambleKind::Strong).first;
        for (Flavor f : {Flavor::NW, Flavor::NCW, Flavor::NCW0, Flavor::SC0, Flavor::SCd}) {
            ExactWidthResult r = exact_width(host, f);
            CHECK(r.width >= bn - 1);
        }
    }
}
