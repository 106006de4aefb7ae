// dtwlab: directed tree-width laboratory.
//
// Validates and transforms directed tree decompositions in the five flavors,
// solves the cops-and-robber game exactly, checks butterfly-minor
// containment, computes bramble/haven/k-linked obstructions, and reproduces
// the non-closure results for the bundled instance family.
//
// Exit codes: 0 the queried property holds and the computation completed,
// 1 the property fails, 2 usage error, 3 a search budget was exhausted.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtw/elimination.hpp"
#include "dtw/exact_width.hpp"
#include "dtw/fixture_store.hpp"
#include "dtw/game.hpp"
#include "dtw/json_io.hpp"
#include "dtw/minor_search.hpp"
#include "dtw/minorize.hpp"
#include "dtw/obstructions.hpp"
#include "dtw/repro.hpp"

namespace {

using namespace dtw;

std::shared_ptr<const Digraph> read_graph(const std::string& path) {
    return std::make_shared<const Digraph>(digraph_from_json(load_json_file(path)));
}

std::string set_names(const Digraph& d, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += d.name(v);
        first = false;
    }
    return out + "}";
}

int greedy_robber(VertexSet announced, VertexSet allowed) {
    VertexSet safe = allowed - announced;
    return safe.empty() ? allowed.min() : safe.min();
}

int run(int argc, char** argv) {
    CLI::App app{"dtwlab - directed tree-width laboratory"};
    app.require_subcommand(1);
    std::uint64_t budget = 2'000'000;
    int threads = 1;
    app.add_option("--budget", budget, "node/position budget for searches")->capture_default_str();
    app.add_option("--threads", threads,
                   "worker threads for internal parallelism (results are deterministic; the current "
                   "implementation runs single-threaded)")
        ->capture_default_str();

    std::string g_path, dtd_path, out_path, witness_path, flavor_name = "SC0";
    auto* validate_cmd = app.add_subcommand("validate-dtd", "validate a decomposition against its graph");
    validate_cmd->add_option("graph", g_path)->required();
    validate_cmd->add_option("dtd", dtd_path)->required();

    auto* width_cmd = app.add_subcommand("width", "exact width search or certificate check for one flavor");
    bool exact_flag = false;
    std::string certify_path;
    width_cmd->add_option("graph", g_path)->required();
    width_cmd->add_option("--flavor", flavor_name, "NW, NCW, NCW0, SC0, SC0v, USC0 or SCd")->required();
    width_cmd->add_flag("--exact", exact_flag, "run the exact search (desk-scale graphs)");
    width_cmd->add_option("--certify", certify_path, "validate this decomposition as a width certificate");
    width_cmd->add_option("--out", out_path, "write the certificate JSON here");

    auto* game_cmd = app.add_subcommand("game", "solve the cops-and-robber game for a fixed cop budget");
    int cops_k = 0;
    bool monotone = false, trace = false;
    game_cmd->add_option("graph", g_path)->required();
    game_cmd->add_option("-k", cops_k, "number of cops")->required();
    game_cmd->add_flag("--monotone", monotone, "robber-monotone variant");
    game_cmd->add_flag("--trace", trace, "print a play transcript against a greedy robber");
    game_cmd->add_option("--strategy", out_path, "write the winning strategy tree here");

    auto* copn_cmd = app.add_subcommand("cop-number", "least number of cops that win");
    copn_cmd->add_option("graph", g_path)->required();
    copn_cmd->add_flag("--monotone", monotone, "robber-monotone variant");

    auto* minor_cmd = app.add_subcommand("minor", "decide butterfly-minor containment");
    std::string host_path;
    minor_cmd->add_option("minor", g_path, "the candidate minor")->required();
    minor_cmd->add_option("host", host_path)->required();
    minor_cmd->add_option("--witness", out_path, "write the witness JSON here");

    auto* minorize_cmd =
        app.add_subcommand("minorize", "carry an NCW0 decomposition along a contraction script");
    minorize_cmd->add_option("graph", g_path)->required();
    minorize_cmd->add_option("dtd", dtd_path)->required();
    minorize_cmd->add_option("witness", witness_path)->required();
    minorize_cmd->add_option("--out", out_path, "write the resulting decomposition here");

    auto* bramble_cmd = app.add_subcommand("bramble", "bramble validation, orders, numbers and lifting");
    bramble_cmd->require_subcommand(1);
    std::string bramble_path, kind_name = "strong";
    auto* b_validate = bramble_cmd->add_subcommand("validate", "check a bramble");
    b_validate->add_option("graph", g_path)->required();
    b_validate->add_option("bramble", bramble_path)->required();
    auto* b_order = bramble_cmd->add_subcommand("order", "exact minimum cover");
    b_order->add_option("graph", g_path)->required();
    b_order->add_option("bramble", bramble_path)->required();
    auto* b_number = bramble_cmd->add_subcommand("number", "maximum bramble order of the graph");
    b_number->add_option("graph", g_path)->required();
    b_number->add_option("--kind", kind_name, "strong or weak")->capture_default_str();
    auto* b_lift = bramble_cmd->add_subcommand("lift", "lift a strong bramble along a minor witness");
    b_lift->add_option("minor", g_path, "the minor the bramble lives in")->required();
    b_lift->add_option("host", host_path)->required();
    b_lift->add_option("witness", witness_path)->required();
    b_lift->add_option("bramble", bramble_path)->required();
    b_lift->add_option("--out", out_path, "write the lifted bramble here");

    auto* linked_cmd = app.add_subcommand("linked", "decide whether a vertex set is k-linked");
    std::string w_list;
    int linked_k = 0;
    linked_cmd->add_option("graph", g_path)->required();
    linked_cmd->add_option("-w", w_list, "comma-separated vertex names")->required();
    linked_cmd->add_option("-k", linked_k)->required();

    auto* fixture_cmd = app.add_subcommand("fixture", "bundled instance catalogue");
    fixture_cmd->require_subcommand(1);
    std::string fixture_name;
    fixture_cmd->add_subcommand("list", "list the catalogue");
    auto* f_dump = fixture_cmd->add_subcommand("dump", "print a fixture's JSON");
    f_dump->add_option("name", fixture_name)->required();
    auto* f_check = fixture_cmd->add_subcommand("check", "re-validate fixtures against their claims");
    f_check->add_option("name", fixture_name);

    auto* dot_cmd = app.add_subcommand("export-dot", "DOT export for graphs, decompositions, strategy trees");
    std::string object_path, base_graph;
    dot_cmd->add_option("object", object_path)->required();
    dot_cmd->add_option("--graph", base_graph, "host graph (for decompositions and strategy trees)");
    dot_cmd->add_option("--out", out_path, "write the DOT here instead of stdout");

    auto* repro_cmd = app.add_subcommand("repro", "run a scripted reproduction scenario");
    std::string repro_id;
    bool repro_list = false;
    repro_cmd->add_option("target", repro_id, "scenario id");
    repro_cmd->add_flag("--list", repro_list, "list the scenarios");

    CLI11_PARSE(app, argc, argv);

    if (validate_cmd->parsed()) {
        auto g = read_graph(g_path);
        TreeDecomposition T = decomposition_from_json(load_json_file(dtd_path), g);
        FlavorReport rep = validate(T);
        if (rep.valid) {
            std::cout << "valid " << to_string(T.flavor) << ", width " << rep.width << "\n";
            return 0;
        }
        std::cout << "invalid " << to_string(T.flavor) << ", width " << rep.width << "\n";
        for (const Violation& v : rep.violations)
            std::cout << "  " << Violation::kind_name(v.kind) << " at " << v.location << ": " << v.detail << "\n";
        return 1;
    }
    if (width_cmd->parsed()) {
        auto g = read_graph(g_path);
        Flavor f = flavor_from_string(flavor_name);
        if (exact_flag && certify_path.empty()) {
            ExactWidthResult r = exact_width(g, f);
            std::cout << to_string(f) << " width " << r.width << " (certificate has "
                      << r.certificate.node_count() << " nodes" << (r.size_capped ? ", size cap exceeded" : "")
                      << ")\n";
            if (!out_path.empty()) save_json_file(out_path, to_json(r.certificate));
            return 0;
        }
        if (!exact_flag && !certify_path.empty()) {
            TreeDecomposition T = decomposition_from_json(load_json_file(certify_path), g);
            if (T.flavor != f) T = T.with_flavor(f);
            FlavorReport rep = validate(T);
            std::cout << (rep.valid ? "certificate valid, " : "certificate INVALID, ") << "width " << rep.width
                      << "\n";
            return rep.valid ? 0 : 1;
        }
        std::cerr << "width: use exactly one of --exact or --certify\n";
        return 2;
    }
    if (game_cmd->parsed()) {
        auto g = read_graph(g_path);
        GameOptions gopt;
        gopt.max_states = budget;
        gopt.witness_budget = budget;
        SolveResult res = solve_game(*g, cops_k, monotone ? GameMode::RobberMonotone : GameMode::Free, gopt);
        std::cout << (res.winner == Winner::Cops ? "cops win" : "robber wins") << " with k=" << cops_k
                  << (monotone ? " (robber-monotone)" : "") << "\n";
        if (res.winner == Winner::Cops && res.strategy) {
            std::cout << "strategy tree: " << res.strategy->node_count() << " nodes, width "
                      << res.strategy->width() << "\n";
            if (!out_path.empty()) save_json_file(out_path, to_json(*g, *res.strategy));
            if (trace) {
                StrategyTreeCops copfn(*g, *res.strategy);
                PlayRecord play = simulate_play(
                    *g, [&](VertexSet c, int v) { return copfn(c, v); },
                    [&](VertexSet, VertexSet announced, int, VertexSet allowed) {
                        return greedy_robber(announced, allowed);
                    },
                    10 * res.strategy->node_count() + 50);
                for (std::size_t i = 0; i < play.rounds.size(); ++i) {
                    const PlayRound& r = play.rounds[i];
                    std::cout << "round " << i << ": cops " << set_names(*g, r.cops) << " robber "
                              << (r.robber >= 0 ? g->name(r.robber) : "-") << "\n";
                }
                std::cout << (play.captured ? "captured" : "not captured") << ", robber-monotone "
                          << (play.robber_monotone ? "yes" : "no") << ", cop-monotone "
                          << (play.cop_monotone ? "yes" : "no") << "\n";
            }
        } else if (res.winner == Winner::Robber) {
            std::cout << "escape certificate: " << res.escape.size() << " positions\n";
            if (trace)
                for (std::size_t i = 0; i < res.escape.size() && i < 10; ++i)
                    std::cout << "  cops " << set_names(*g, res.escape[i].cops) << " robber space "
                              << set_names(*g, res.escape[i].robber_space) << "\n";
        }
        return res.winner == Winner::Cops ? 0 : 1;
    }
    if (copn_cmd->parsed()) {
        auto g = read_graph(g_path);
        GameOptions gopt;
        gopt.max_states = budget;
        gopt.witness_budget = budget;
        int k = cop_number(*g, monotone ? GameMode::RobberMonotone : GameMode::Free, gopt);
        std::cout << (monotone ? "robber-monotone " : "") << "cop number: " << k << "\n";
        return 0;
    }
    if (minor_cmd->parsed()) {
        auto target = read_graph(g_path);
        auto host = read_graph(host_path);
        MinorSearchResult r = find_butterfly_minor(*target, *host, budget);
        if (r.status == MinorSearchResult::Status::BudgetExhausted) {
            std::cout << "budget exhausted after " << r.nodes << " nodes; containment undecided\n";
            return 3;
        }
        if (!r.found()) {
            std::cout << "proven absent (" << r.nodes << " search nodes)\n";
            return 1;
        }
        if (auto reason = verify_witness(*target, *host, *r.witness))
            throw Error("internal: found witness fails verification: " + *reason);
        std::cout << "butterfly minor: witness with " << r.witness->script.steps.size()
                  << " contractions, re-verified by replay\n";
        if (!out_path.empty()) save_json_file(out_path, to_json(*r.witness));
        return 0;
    }
    if (minorize_cmd->parsed()) {
        auto g = read_graph(g_path);
        TreeDecomposition T = decomposition_from_json(load_json_file(dtd_path), g);
        MinorWitness w = witness_from_json(load_json_file(witness_path));
        TreeDecomposition lifted = minorize(T, w);
        FlavorReport rep = validate(lifted);
        std::cout << (rep.valid ? "valid" : "INVALID") << " NCW0 decomposition of the minor, width "
                  << rep.width << "\n";
        if (!out_path.empty()) save_json_file(out_path, to_json(lifted));
        return rep.valid ? 0 : 1;
    }
    if (bramble_cmd->parsed()) {
        if (b_validate->parsed()) {
            auto g = read_graph(g_path);
            Bramble b = bramble_from_json(load_json_file(bramble_path), *g);
            BrambleVerdict v = validate_bramble(*g, b);
            std::cout << (v.valid ? "valid" : "INVALID") << " "
                      << (b.kind == BrambleKind::Strong ? "strong" : "weak") << " bramble\n";
            for (const auto& s : v.violations) std::cout << "  " << s << "\n";
            return v.valid ? 0 : 1;
        }
        if (b_order->parsed()) {
            auto g = read_graph(g_path);
            Bramble b = bramble_from_json(load_json_file(bramble_path), *g);
            CoverCertificate c = bramble_order(*g, b);
            std::cout << "order " << c.order() << ", cover " << set_names(*g, c.cover) << "\n";
            return 0;
        }
        if (b_number->parsed()) {
            auto g = read_graph(g_path);
            BrambleKind kind = kind_name == "weak" ? BrambleKind::Weak : BrambleKind::Strong;
            auto [bn, witness] = bramble_number(*g, kind, 12);
            std::cout << kind_name << " bramble number " << bn << " (witness with "
                      << witness.elements.size() << " elements)\n";
            return 0;
        }
        if (b_lift->parsed()) {
            auto target = read_graph(g_path);
            auto host = read_graph(host_path);
            MinorWitness w = witness_from_json(load_json_file(witness_path));
            Bramble b = bramble_from_json(load_json_file(bramble_path), *target);
            Bramble lifted = lift_bramble(*target, *host, w, b, budget);
            int before = bramble_order(*target, b).order();
            int after = bramble_order(*host, lifted).order();
            std::cout << "lifted bramble order " << after << " (was " << before << ")\n";
            if (!out_path.empty()) save_json_file(out_path, to_json(*host, lifted));
            return after >= before ? 0 : 1;
        }
    }
    if (linked_cmd->parsed()) {
        auto g = read_graph(g_path);
        std::vector<std::string> names;
        std::string cur;
        for (char c : w_list) {
            if (c == ',') {
                if (!cur.empty()) names.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) names.push_back(cur);
        LinkedSetReport rep = is_k_linked(*g, g->set_of(names), linked_k, budget);
        if (rep.linked()) {
            std::cout << "the set is " << linked_k << "-linked\n";
            return 0;
        }
        std::cout << "not " << linked_k << "-linked: balanced separator "
                  << set_names(*g, *rep.balanced_separator) << "\n";
        return 1;
    }
    if (fixture_cmd->parsed()) {
        if (fixture_cmd->get_subcommand("list")->parsed()) {
            for (const auto& e : fixtures::catalog())
                std::cout << e.name << (e.base.empty() ? "" : " (on " + e.base + ")") << " - " << e.note << "\n";
            return 0;
        }
        if (f_dump->parsed()) {
            std::cout << fixtures::load_fixture_json(fixture_name).dump(2) << "\n";
            return 0;
        }
        if (f_check->parsed()) {
            bool all_ok = true;
            for (const auto& e : fixtures::catalog()) {
                if (!fixture_name.empty() && e.name != fixture_name) continue;
                std::string problem = fixtures::check_fixture(e.name);
                all_ok = all_ok && problem.empty();
                std::cout << (problem.empty() ? "ok   " : "FAIL ") << e.name
                          << (problem.empty() ? "" : ": " + problem) << "\n";
            }
            return all_ok ? 0 : 1;
        }
    }
    if (dot_cmd->parsed()) {
        json j = load_json_file(object_path);
        std::string dot;
        if (j.contains("vertices")) {
            dot = to_dot(digraph_from_json(j));
        } else if (j.contains("flavor")) {
            if (base_graph.empty()) throw Error("export-dot: a decomposition needs --graph");
            dot = to_dot(decomposition_from_json(j, read_graph(base_graph)));
        } else if (j.contains("nodes") && !j.at("nodes").empty() && j.at("nodes")[0].contains("cops")) {
            if (base_graph.empty()) throw Error("export-dot: a strategy tree needs --graph");
            auto g = read_graph(base_graph);
            dot = to_dot(*g, strategy_from_json(j, *g));
        } else {
            throw Error("export-dot: unrecognised object (expected a graph, decomposition or strategy tree)");
        }
        if (out_path.empty()) {
            std::cout << dot;
        } else {
            std::ofstream out(out_path);
            out << dot;
        }
        return 0;
    }
    if (repro_cmd->parsed()) {
        if (repro_list || repro_id.empty()) {
            for (const auto& s : repro::scenarios()) std::cout << s.id << " - " << s.description << "\n";
            return 0;
        }
        repro::Report rep = repro::scenario(repro_id).run();
        std::cout << "repro " << rep.id << ": " << (rep.passed ? "PASS" : "FAIL") << "\n";
        for (const auto& line : rep.lines) std::cout << line << "\n";
        return rep.passed ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dtw::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const dtw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
