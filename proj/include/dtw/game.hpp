#ifndef DTW_GAME_HPP
#define DTW_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dtw/decomp.hpp"
#include "dtw/digraph.hpp"

namespace dtw {

enum class GameMode { Free, RobberMonotone };
enum class Winner { Cops, Robber };

/// Cops-at-C, robber confined to the strong component R of D - C.
struct GamePosition {
    VertexSet cops;
    VertexSet robber_space;
};

/// Rooted tree with cop positions on nodes and robber spaces on edges
/// (stored at the edge's child endpoint, like TreeDecomposition guards).
struct StrategyTree {
    std::vector<std::string> node_ids;
    std::vector<VertexSet> cops;
    std::vector<VertexSet> robber;  // label of (parent(t), t); unused at the root
    std::vector<int> parent;        // -1 at the root
    int root = 0;

    int node_count() const { return static_cast<int>(node_ids.size()); }
    int width() const {
        int w = 0;
        for (const VertexSet& c : cops) w = std::max(w, c.count());
        return w;
    }
    std::vector<std::vector<int>> children() const {
        std::vector<std::vector<int>> ch(static_cast<std::size_t>(node_count()));
        for (int t = 0; t < node_count(); ++t)
            if (t != root) ch[static_cast<std::size_t>(parent[static_cast<std::size_t>(t)])].push_back(t);
        return ch;
    }
    int node_index(const std::string& id) const {
        for (int i = 0; i < node_count(); ++i)
            if (node_ids[static_cast<std::size_t>(i)] == id) return i;
        throw Error("unknown strategy node: " + id);
    }
    void check_structure() const {
        if (node_count() == 0) throw Error("strategy tree has no nodes");
        if (root < 0 || root >= node_count() || parent[static_cast<std::size_t>(root)] != -1)
            throw Error("strategy tree root is inconsistent");
        for (int t = 0; t < node_count(); ++t) {
            if (t == root) continue;
            int hops = 0;
            for (int v = t; v != root; v = parent[static_cast<std::size_t>(v)]) {
                if (parent[static_cast<std::size_t>(v)] < 0 || ++hops > node_count())
                    throw Error("strategy tree parent structure is broken");
            }
        }
    }
};

struct StrategyVerdict {
    bool valid = true;
    bool robber_monotone = true;
    std::vector<std::string> violations;
};

struct SolveResult {
    Winner winner = Winner::Robber;
    int k = 0;
    GameMode mode = GameMode::Free;
    std::optional<StrategyTree> strategy;     // when the cops win
    std::vector<GamePosition> escape;         // robber certificate otherwise
    bool exact = true;                        // false when decided by witness search only
};

struct GameOptions {
    std::uint64_t max_states = 4'000'000;   // arena construction cap
    int exact_monotone_cap = 22;             // full monotone fixed point up to this |V|
    std::uint64_t witness_budget = 3'000'000;  // DFS visits for the large-n monotone upper bound
    VertexSet banned_occupancy = {};           // cop announcements covering this whole set are illegal
};

// ---------------------------------------------------------------------------
// Strategy tree checks

/// Exhaustively checks the two strategy-tree conditions and computes the
/// robber-monotone flag of the definition.
inline StrategyVerdict validate_strategy_tree(const Digraph& D, const StrategyTree& T) {
    T.check_structure();
    StrategyVerdict verdict;
    auto bad = [&](const std::string& s) {
        verdict.valid = false;
        verdict.violations.push_back(s);
    };
    SccCache sccs(D);
    auto ch = T.children();

    // Child coverage for one node and one component-to-cover.
    auto covered = [&](int t, VertexSet comp, const std::string& why) {
        int hits = 0;
        for (int c : ch[static_cast<std::size_t>(t)]) {
            if (comp.subset_of(T.robber[static_cast<std::size_t>(c)])) ++hits;
            else if (comp.intersects(T.robber[static_cast<std::size_t>(c)]))
                bad("node " + T.node_ids[static_cast<std::size_t>(t)] + ": component " + why +
                    " partially meets edge toward " + T.node_ids[static_cast<std::size_t>(c)]);
        }
        if (hits == 0)
            bad("node " + T.node_ids[static_cast<std::size_t>(t)] + ": component " + why + " has no covering edge");
        if (hits > 1)
            bad("node " + T.node_ids[static_cast<std::size_t>(t)] + ": component " + why + " covered by several edges");
    };

    const auto& root_parts = sccs.partition(T.cops[static_cast<std::size_t>(T.root)]);
    for (const VertexSet& comp : root_parts.components)
        covered(T.root, comp, "{" + D.name(comp.min()) + ",...}");

    for (int t = 0; t < T.node_count(); ++t) {
        if (t == T.root) continue;
        int s = T.parent[static_cast<std::size_t>(t)];
        VertexSet cs = T.cops[static_cast<std::size_t>(s)], ct = T.cops[static_cast<std::size_t>(t)];
        const auto& shared = sccs.partition(cs & ct);
        for (const VertexSet& comp : sccs.partition(cs).components) {
            if (!comp.subset_of(T.robber[static_cast<std::size_t>(t)])) continue;
            VertexSet scope = shared.component_containing(comp.min());
            for (const VertexSet& comp2 : sccs.partition(ct).components) {
                if (!comp2.subset_of(scope)) continue;
                covered(t, comp2, "{" + D.name(comp2.min()) + ",...}");
                if (!comp2.subset_of(comp)) verdict.robber_monotone = false;
            }
        }
    }
    return verdict;
}

/// Decomposition-to-game bridge: any valid decomposition of width k gives a strategy
/// tree of width k+1 on the same tree, with cops(t) = Gamma(t) and
/// robber(e) = beta(T_t) - gamma(e).
inline StrategyTree dtd_to_strategy_tree(const TreeDecomposition& T) {
    FlavorReport rep = validate(T);
    if (!rep.valid) throw Error("dtd_to_strategy_tree: decomposition is invalid");
    StrategyTree S;
    S.node_ids = T.node_ids;
    S.parent = T.parent;
    S.root = T.root;
    S.cops.resize(static_cast<std::size_t>(T.node_count()));
    S.robber.resize(static_cast<std::size_t>(T.node_count()));
    std::vector<VertexSet> below = T.subtree_sets();
    for (int t = 0; t < T.node_count(); ++t) {
        S.cops[static_cast<std::size_t>(t)] = T.gamma(t);
        if (t != T.root)
            S.robber[static_cast<std::size_t>(t)] =
                below[static_cast<std::size_t>(t)] - T.guard[static_cast<std::size_t>(t)];
    }
    return S;
}

/// Re-roots a finite strategy tree at r_new without increasing width or node
/// count. Edges inside the old subtree of the new root keep their labels; the
/// reversed edge gets everything unaccounted for, labels on the old-root side
/// are re-derived top-down from the reachable components, and branches whose
/// label empties out are pruned. A robber-monotone input stays monotone at
/// the re-rootings the bundled lower-bound arguments use, but this label
/// rewrite does not guarantee it in general: re-entering the old root's cop
/// set from the reversed side can trade one robber vertex for another (see
/// the strategy re-rooting tests for a concrete instance on D1).
inline StrategyTree reroot_strategy_tree(const Digraph& D, const StrategyTree& T, int r_new) {
    T.check_structure();
    if (r_new == T.root) return T;
    SccCache sccs(D);

    // One step: hoist `child`, currently a child of the root, to be the root.
    auto hoist = [&](const StrategyTree& S, int child) {
        StrategyTree R = S;
        int old_root = S.root;
        R.parent[static_cast<std::size_t>(old_root)] = child;
        R.parent[static_cast<std::size_t>(child)] = -1;
        R.root = child;
        VertexSet rest = D.vertex_set() - S.cops[static_cast<std::size_t>(child)];
        for (int c = 0; c < S.node_count(); ++c)
            if (c != old_root && S.parent[static_cast<std::size_t>(c)] == child)
                rest -= S.robber[static_cast<std::size_t>(c)];
        R.robber[static_cast<std::size_t>(old_root)] = rest;
        R.robber[static_cast<std::size_t>(child)] = VertexSet{};

        std::vector<int> dead(static_cast<std::size_t>(S.node_count()), 0);
        if (rest.empty()) dead[static_cast<std::size_t>(old_root)] = 1;
        // old-root side nodes in parent-first order: everything below old_root
        // in the new tree
        std::vector<int> order{old_root};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int c = 0; c < S.node_count(); ++c)
                if (c != child && c != old_root && R.parent[static_cast<std::size_t>(c)] == order[i])
                    order.push_back(c);
        for (std::size_t oi = 1; oi < order.size(); ++oi) {  // skip old_root, its label is set
            int t_child = order[oi];
            int t = R.parent[static_cast<std::size_t>(t_child)];
            if (dead[static_cast<std::size_t>(t)]) { dead[static_cast<std::size_t>(t_child)] = 1; continue; }
            int s = R.parent[static_cast<std::size_t>(t)];
            VertexSet cs = R.cops[static_cast<std::size_t>(s)], ct = R.cops[static_cast<std::size_t>(t)];
            VertexSet label_into_t = R.robber[static_cast<std::size_t>(t)];
            const auto& shared = sccs.partition(cs & ct);
            VertexSet fresh;
            for (const VertexSet& comp : sccs.partition(cs).components) {
                if (!comp.subset_of(label_into_t)) continue;
                VertexSet scope = shared.component_containing(comp.min());
                for (const VertexSet& comp2 : sccs.partition(ct).components)
                    if (comp2.subset_of(scope) && comp2.subset_of(S.robber[static_cast<std::size_t>(t_child)]))
                        fresh |= comp2;
            }
            R.robber[static_cast<std::size_t>(t_child)] = fresh;
            if (fresh.empty()) dead[static_cast<std::size_t>(t_child)] = 1;
        }
        StrategyTree P;
        std::vector<int> remap(static_cast<std::size_t>(S.node_count()), -1);
        for (int t = 0; t < R.node_count(); ++t) {
            if (dead[static_cast<std::size_t>(t)]) continue;
            remap[static_cast<std::size_t>(t)] = P.node_count();
            P.node_ids.push_back(R.node_ids[static_cast<std::size_t>(t)]);
            P.cops.push_back(R.cops[static_cast<std::size_t>(t)]);
            P.robber.push_back(R.robber[static_cast<std::size_t>(t)]);
            P.parent.push_back(R.parent[static_cast<std::size_t>(t)]);
        }
        for (auto& p : P.parent)
            if (p != -1) p = remap[static_cast<std::size_t>(p)];
        P.root = remap[static_cast<std::size_t>(R.root)];
        return P;
    };

    StrategyTree cur = T;
    std::string target_id = T.node_ids[static_cast<std::size_t>(r_new)];
    while (cur.node_ids[static_cast<std::size_t>(cur.root)] != target_id) {
        int goal = cur.node_index(target_id);
        int step = goal;
        while (cur.parent[static_cast<std::size_t>(step)] != cur.root) step = cur.parent[static_cast<std::size_t>(step)];
        cur = hoist(cur, step);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Exact solving

namespace detail {

/// Reachability-game arena over positions (cops, robber space). Cop moves and
/// robber replies are expanded eagerly; the attractor runs on counters.
struct Arena {
    struct Move {
        VertexSet announced;
        int first_reply = 0, reply_count = 0;  // slice into `replies`
    };
    struct State {
        VertexSet cops, space;
        int first_move = 0, move_count = 0;  // slice into `moves`
        bool expanded = false;
        bool won = false;
        int rank = -1;
    };

    const Digraph& D;
    SccCache sccs;
    int k;
    GameMode mode;
    std::uint64_t max_states;
    VertexSet banned;  // announcements covering this whole nonempty set are skipped

    std::vector<State> states;
    std::vector<Move> moves;
    std::vector<int> replies;
    std::unordered_map<std::uint64_t, std::vector<int>> index;  // cops-bits -> state ids

    Arena(const Digraph& d, int budget, GameMode m, std::uint64_t cap, VertexSet banned_set = {})
        : D(d), sccs(d), k(budget), mode(m), max_states(cap), banned(banned_set) {}

    bool allowed(VertexSet announced) const { return banned.empty() || !banned.subset_of(announced); }

    int state_id(VertexSet cops, VertexSet space) {
        auto& bucket = index[cops.bits()];
        for (int id : bucket)
            if (states[static_cast<std::size_t>(id)].space == space) return id;
        if (states.size() >= max_states) throw BudgetExceeded("game arena exceeds the state cap");
        int id = static_cast<int>(states.size());
        states.push_back({cops, space, 0, 0, false, false, -1});
        bucket.push_back(id);
        return id;
    }

    void push_move(int sid, VertexSet announced, const std::vector<VertexSet>& reply_list) {
        Move m;
        m.announced = announced;
        m.first_reply = static_cast<int>(replies.size());
        for (const VertexSet& r : reply_list) replies.push_back(state_id(announced, r));
        m.reply_count = static_cast<int>(replies.size()) - m.first_reply;
        if (states[static_cast<std::size_t>(sid)].move_count == 0)
            states[static_cast<std::size_t>(sid)].first_move = static_cast<int>(moves.size());
        moves.push_back(m);
        states[static_cast<std::size_t>(sid)].move_count++;
    }

    void expand(int sid) {
        if (states[static_cast<std::size_t>(sid)].expanded) return;
        states[static_cast<std::size_t>(sid)].expanded = true;
        VertexSet C = states[static_cast<std::size_t>(sid)].cops;
        VertexSet R = states[static_cast<std::size_t>(sid)].space;
        if (mode == GameMode::Free) {
            // Single-cop moves carry full power in the free game: any move
            // decomposes into lift-one steps (forced replies) and place-one
            // steps whose reply choices refine to the same final components.
            for (int x : C) {
                VertexSet M = C;
                M.erase(x);
                VertexSet s = sccs.component_of(M, R.min());
                push_move(sid, M, {s});
            }
            if (C.count() < k) {
                for (int x = 0; x < D.n(); ++x) {
                    if (C.contains(x)) continue;
                    VertexSet C2 = C;
                    C2.insert(x);
                    if (!allowed(C2)) continue;
                    if (R.contains(x)) {
                        VertexSet live = R;
                        live.erase(x);
                        std::vector<VertexSet> rs;
                        if (!live.empty())
                            for (const VertexSet& comp : sccs.partition(D.vertex_set() - live).components)
                                rs.push_back(comp);
                        push_move(sid, C2, rs);
                    } else {
                        push_move(sid, C2, {R});
                    }
                }
            }
            return;
        }
        // Robber-monotone: full announcements M | F | B with M = C & C',
        // where F = S(M) - R must be re-covered for the move to be monotone.
        std::vector<int> cop_list = C.to_vector();
        int csz = C.count();
        for (std::uint64_t mmask = 0; mmask < (std::uint64_t{1} << csz); ++mmask) {
            VertexSet M;
            for (int i = 0; i < csz; ++i)
                if ((mmask >> i) & 1) M.insert(cop_list[static_cast<std::size_t>(i)]);
            VertexSet S = sccs.component_of(M, R.min());
            VertexSet F = S - R;
            if (F.intersects(C)) continue;  // those announcements belong to a larger M
            int room = k - M.count() - F.count();
            if (room < 0) continue;
            VertexSet base = M | F;
            VertexSet pool = D.vertex_set() - C - F;
            std::vector<int> pool_list = pool.to_vector();
            std::vector<int> chosen;
            enumerate_b(sid, C, R, S, base, pool_list, 0, room, chosen);
        }
    }

    void enumerate_b(int sid, VertexSet C, VertexSet R, VertexSet S, VertexSet base,
                     const std::vector<int>& pool, std::size_t from, int room, std::vector<int>& chosen) {
        VertexSet announced = base;
        for (int v : chosen) announced.insert(v);
        if (!(announced == C) && allowed(announced)) {
            VertexSet live = S - announced;
            std::vector<VertexSet> rs;
            if (!live.empty())
                for (const VertexSet& comp : sccs.partition(D.vertex_set() - live).components) rs.push_back(comp);
            push_move(sid, announced, rs);
        }
        if (room == 0) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            enumerate_b(sid, C, R, S, base, pool, i + 1, room - 1, chosen);
            chosen.pop_back();
        }
        (void)C;
        (void)R;
    }

    /// Least fixed point of "some move has every reply won".
    void attract(const std::vector<int>& initial) {
        for (std::size_t qi = 0; qi < states.size(); ++qi) expand(static_cast<int>(qi));
        (void)initial;
        std::vector<int> need(moves.size(), 0);
        std::unordered_map<int, std::vector<int>> watchers;  // state -> moves with it as reply
        std::vector<int> owner(moves.size(), -1);
        std::deque<int> queue;
        for (int sid = 0; sid < static_cast<int>(states.size()); ++sid) {
            const State& st = states[static_cast<std::size_t>(sid)];
            for (int mi = st.first_move; mi < st.first_move + st.move_count; ++mi) {
                owner[static_cast<std::size_t>(mi)] = sid;
                need[static_cast<std::size_t>(mi)] = moves[static_cast<std::size_t>(mi)].reply_count;
                for (int ri = moves[static_cast<std::size_t>(mi)].first_reply;
                     ri < moves[static_cast<std::size_t>(mi)].first_reply + moves[static_cast<std::size_t>(mi)].reply_count; ++ri)
                    watchers[replies[static_cast<std::size_t>(ri)]].push_back(mi);
                if (need[static_cast<std::size_t>(mi)] == 0 && !states[static_cast<std::size_t>(sid)].won) {
                    states[static_cast<std::size_t>(sid)].won = true;
                    states[static_cast<std::size_t>(sid)].rank = 0;
                    queue.push_back(sid);
                }
            }
        }
        while (!queue.empty()) {
            int sid = queue.front();
            queue.pop_front();
            auto it = watchers.find(sid);
            if (it == watchers.end()) continue;
            for (int mi : it->second) {
                if (--need[static_cast<std::size_t>(mi)] == 0) {
                    int os = owner[static_cast<std::size_t>(mi)];
                    if (!states[static_cast<std::size_t>(os)].won) {
                        states[static_cast<std::size_t>(os)].won = true;
                        states[static_cast<std::size_t>(os)].rank =
                            states[static_cast<std::size_t>(sid)].rank + 1;
                        queue.push_back(os);
                    }
                }
            }
        }
    }

    /// Winning move at a won state: lex-least announcement among the moves
    /// whose replies are all won at strictly smaller rank.
    int winning_move(int sid) const {
        const State& st = states[static_cast<std::size_t>(sid)];
        int best = -1;
        for (int mi = st.first_move; mi < st.first_move + st.move_count; ++mi) {
            const Move& m = moves[static_cast<std::size_t>(mi)];
            bool ok = true;
            for (int ri = m.first_reply; ri < m.first_reply + m.reply_count && ok; ++ri) {
                const State& rs = states[static_cast<std::size_t>(replies[static_cast<std::size_t>(ri)])];
                if (!rs.won || rs.rank >= st.rank) ok = false;
            }
            if (!ok) continue;
            if (best == -1 || lex_less(m.announced, moves[static_cast<std::size_t>(best)].announced)) best = mi;
        }
        if (best == -1) throw Error("internal: won state without a rank-decreasing move");
        return best;
    }
};


/// Depth-first hunt for a robber-monotone win: sound for cops-win claims
/// only. Memoises proven wins; assumes on-stack repeats are losses and keeps
/// such failures uncached.
struct MonotoneWitnessSearch {
    enum class Res { Win, FailClean, FailTainted };

    struct MoveOption {
        VertexSet announced;
        std::vector<VertexSet> replies;
        int reply_total = 0;
    };

    const Digraph& D;
    SccCache sccs;
    int k;
    std::uint64_t budget, used = 0;
    int max_shuffles = 3;  // consecutive moves allowed that do not shrink the space
    using Key = std::pair<std::uint64_t, std::uint64_t>;
    std::map<Key, int> won_at;     // minimal shuffle allowance that still wins
    std::map<Key, int> failed_at;  // maximal shuffle allowance that still fails
    std::map<Key, VertexSet> winning_move;

    MonotoneWitnessSearch(const Digraph& d, int cops, std::uint64_t b) : D(d), sccs(d), k(cops), budget(b) {}

    /// Valid robber-monotone announcements from (C, R): any M = C & C' whose
    /// exposure F = S(M) - R fits under the budget together with arbitrary
    /// extra placements.
    std::vector<MoveOption> moves(VertexSet C, VertexSet R) {
        std::vector<MoveOption> out;
        std::vector<int> cop_list = C.to_vector();
        int csz = C.count();
        for (std::uint64_t mmask = 0; mmask < (std::uint64_t{1} << csz); ++mmask) {
            VertexSet M;
            for (int i = 0; i < csz; ++i)
                if ((mmask >> i) & 1) M.insert(cop_list[static_cast<std::size_t>(i)]);
            VertexSet S = sccs.component_of(M, R.min());
            VertexSet F = S - R;
            if (F.intersects(C)) continue;  // handled under the larger true M
            int room = k - M.count() - F.count();
            if (room < 0) continue;
            VertexSet base = M | F;
            std::vector<int> pool = (D.vertex_set() - C - F).to_vector();
            std::vector<int> chosen;
            std::function<void(std::size_t, int)> emit = [&](std::size_t from, int left) {
                VertexSet announced = base;
                for (int v : chosen) announced.insert(v);
                if (!(announced == C)) {
                    MoveOption opt;
                    opt.announced = announced;
                    VertexSet live = S - announced;
                    if (!live.empty())
                        for (const VertexSet& comp : sccs.partition(D.vertex_set() - live).components) {
                            opt.replies.push_back(comp);
                            opt.reply_total += comp.count();
                        }
                    out.push_back(std::move(opt));
                }
                if (left == 0) return;
                for (std::size_t i = from; i < pool.size(); ++i) {
                    chosen.push_back(pool[i]);
                    emit(i + 1, left - 1);
                    chosen.pop_back();
                }
            };
            emit(0, room);
        }
        std::sort(out.begin(), out.end(), [](const MoveOption& a, const MoveOption& b) {
            if (a.reply_total != b.reply_total) return a.reply_total < b.reply_total;
            return lex_less(a.announced, b.announced);
        });
        return out;
    }

    /// Searches for a strategy that never makes more than `shuffles`
    /// consecutive non-shrinking moves; the restriction turns the search
    /// space into a DAG, so failures cache soundly. A found strategy is a
    /// genuine robber-monotone win; failure is inconclusive for the game.
    Res win(VertexSet C, VertexSet R, int shuffles) {
        Key key{C.bits(), R.bits()};
        if (auto it = won_at.find(key); it != won_at.end() && it->second <= shuffles) return Res::Win;
        if (auto it = failed_at.find(key); it != failed_at.end() && it->second >= shuffles)
            return Res::FailClean;
        if (++used > budget) return Res::FailTainted;
        bool won = false;
        bool tainted = false;
        for (const MoveOption& m : moves(C, R)) {
            bool all = true;
            for (const VertexSet& comp : m.replies) {
                int next = (comp == R) ? shuffles - 1 : max_shuffles;
                if (next < 0) { all = false; break; }
                Res r = win(m.announced, comp, next);
                if (r != Res::Win) {
                    if (r == Res::FailTainted) tainted = true;
                    all = false;
                    break;
                }
            }
            if (all) {
                won = true;
                winning_move[key] = m.announced;
                break;
            }
        }
        if (won) {
            auto it = won_at.find(key);
            if (it == won_at.end() || it->second > shuffles) won_at[key] = shuffles;
            return Res::Win;
        }
        if (!tainted) {
            auto it = failed_at.find(key);
            if (it == failed_at.end() || it->second < shuffles) failed_at[key] = shuffles;
        }
        return tainted ? Res::FailTainted : Res::FailClean;
    }

    /// Strategy tree for a proven game, in the same shape as the exact
    /// solver's extraction: a silent root plus one node per winning move.
    StrategyTree extract() {
        StrategyTree tree;
        tree.node_ids.push_back("s0");
        tree.cops.push_back(VertexSet{});
        tree.robber.push_back(VertexSet{});
        tree.parent.push_back(-1);
        tree.root = 0;
        std::function<void(VertexSet, VertexSet, int)> grow = [&](VertexSet C, VertexSet R, int parent) {
            VertexSet announced = winning_move.at({C.bits(), R.bits()});
            int node = tree.node_count();
            tree.node_ids.push_back("s" + std::to_string(node));
            tree.cops.push_back(announced);
            tree.robber.push_back(R);
            tree.parent.push_back(parent);
            VertexSet S = sccs.component_of(C & announced, R.min());
            VertexSet live = S - announced;
            if (!live.empty())
                for (const VertexSet& comp : sccs.partition(D.vertex_set() - live).components)
                    grow(announced, comp, node);
        };
        for (const VertexSet& comp : D.strong_components().components) grow(VertexSet{}, comp, 0);
        return tree;
    }
};


}  // namespace detail

/// Exact solution of the cops-and-robber game by a backward fixed point on
/// the position arena. Free mode uses single-cop moves (equivalent to full
/// announcements); robber-monotone mode enumerates full announcements with
/// moves that would grow the robber space pruned away.
inline SolveResult solve_game(const Digraph& D, int k, GameMode mode, const GameOptions& opt = {}) {
    if (k < 0) throw Error("solve_game: negative cop budget");
    SolveResult res;
    res.k = k;
    res.mode = mode;
    if (mode == GameMode::RobberMonotone && D.n() > opt.exact_monotone_cap) {
        // Beyond the exact arena cap only a found strategy is a proof; a
        // failed search cannot certify a robber win.
        detail::MonotoneWitnessSearch search(D, k, opt.witness_budget);
        bool all = true;
        for (const VertexSet& comp : D.strong_components().components)
            if (search.win(VertexSet{}, comp, search.max_shuffles) != detail::MonotoneWitnessSearch::Res::Win) {
                all = false;
                break;
            }
        if (!all)
            throw BudgetExceeded(
                "solve_game: the graph exceeds the exact robber-monotone cap and the witness "
                "search found no strategy for " + std::to_string(k) + " cops");
        res.winner = Winner::Cops;
        res.strategy = search.extract();
        return res;
    }
    detail::Arena arena(D, k, mode, opt.max_states, opt.banned_occupancy);
    std::vector<int> initial;
    for (const VertexSet& comp : D.strong_components().components)
        initial.push_back(arena.state_id(VertexSet{}, comp));
    arena.attract(initial);
    bool cops_win = true;
    for (int sid : initial)
        if (!arena.states[static_cast<std::size_t>(sid)].won) cops_win = false;

    if (!cops_win) {
        res.winner = Winner::Robber;
        for (const auto& st : arena.states)
            if (!st.won) res.escape.push_back({st.cops, st.space});
        return res;
    }
    res.winner = Winner::Cops;
    // Extract the strategy tree: a root announcing nothing, one edge per
    // initial component, then one node per (position, winning move).
    StrategyTree tree;
    tree.node_ids.push_back("s0");
    tree.cops.push_back(VertexSet{});
    tree.robber.push_back(VertexSet{});
    tree.parent.push_back(-1);
    tree.root = 0;
    std::uint64_t cap = 400'000;
    std::function<void(int, int)> grow = [&](int sid, int parent_node) {
        if (tree.node_ids.size() > cap) throw BudgetExceeded("strategy tree extraction exceeds the node cap");
        int mi = arena.winning_move(sid);
        const auto& m = arena.moves[static_cast<std::size_t>(mi)];
        int node = tree.node_count();
        tree.node_ids.push_back("s" + std::to_string(node));
        tree.cops.push_back(m.announced);
        tree.robber.push_back(arena.states[static_cast<std::size_t>(sid)].space);
        tree.parent.push_back(parent_node);
        for (int ri = m.first_reply; ri < m.first_reply + m.reply_count; ++ri)
            grow(arena.replies[static_cast<std::size_t>(ri)], node);
    };
    for (int sid : initial) grow(sid, 0);
    res.strategy = std::move(tree);
    return res;
}


/// Robber-monotone cop number upper-bound check for digraphs too large for
/// the exact monotone arena. A true result is a proof that k cops win
/// robber-monotonely; false means only that the budgeted search failed.
inline bool monotone_win_witness(const Digraph& D, int k, const GameOptions& opt = {}) {
    detail::MonotoneWitnessSearch search(D, k, opt.witness_budget);
    for (const VertexSet& comp : D.strong_components().components)
        if (search.win(VertexSet{}, comp, search.max_shuffles) != detail::MonotoneWitnessSearch::Res::Win) return false;
    return true;
}

/// Least k such that k cops win. For the robber-monotone game on digraphs
/// beyond the exact cap, the free cop number is a lower bound (a
/// robber-monotone winning strategy is in particular winning); when the
/// witness search confirms that many cops suffice the value is exact,
/// otherwise only the full arena could decide and we refuse to guess.
inline int cop_number(const Digraph& D, GameMode mode, const GameOptions& opt = {}) {
    if (D.n() == 0) return 0;
    if (mode == GameMode::Free) {
        for (int k = 0; k <= D.n(); ++k)
            if (solve_game(D, k, GameMode::Free, opt).winner == Winner::Cops) return k;
        return D.n();
    }
    int lower = cop_number(D, GameMode::Free, opt);
    if (D.n() <= opt.exact_monotone_cap) {
        for (int k = lower; k <= D.n(); ++k)
            if (solve_game(D, k, GameMode::RobberMonotone, opt).winner == Winner::Cops) return k;
        return D.n();
    }
    if (monotone_win_witness(D, lower, opt)) return lower;
    throw BudgetExceeded(
        "cop_number: the graph exceeds the exact robber-monotone cap and the witness search "
        "found no strategy with " + std::to_string(lower) + " cops");
}

/// Minimum node count of a robber-monotone strategy tree of width at most k
/// whose root announces `root_cops`, by value iteration over the monotone
/// arena (full announcement set, so the minimum is exact). nullopt when no
/// such tree exists or the state budget runs out.
inline std::optional<long long> monotone_min_tree_nodes(const Digraph& D, int k, VertexSet root_cops,
                                                        std::uint64_t max_states = 2'000'000) {
    if (root_cops.count() > k) return std::nullopt;
    detail::Arena arena(D, k, GameMode::RobberMonotone, max_states);
    std::vector<int> entry;
    for (const VertexSet& comp : arena.sccs.partition(root_cops).components)
        entry.push_back(arena.state_id(root_cops, comp));
    for (std::size_t i = 0; i < arena.states.size(); ++i) arena.expand(static_cast<int>(i));
    const long long INF = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> cost(arena.states.size(), INF);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < arena.states.size(); ++s) {
            const auto& st = arena.states[s];
            long long best = INF;
            for (int mi = st.first_move; mi < st.first_move + st.move_count; ++mi) {
                const auto& m = arena.moves[static_cast<std::size_t>(mi)];
                long long total = 1;
                for (int ri = m.first_reply; ri < m.first_reply + m.reply_count; ++ri) {
                    long long c = cost[static_cast<std::size_t>(arena.replies[static_cast<std::size_t>(ri)])];
                    if (c >= INF) { total = INF; break; }
                    total += c;
                }
                best = std::min(best, total);
            }
            if (best < cost[s]) {
                cost[s] = best;
                changed = true;
            }
        }
    }
    long long total = 1;  // the root node itself
    for (int sid : entry) {
        if (cost[static_cast<std::size_t>(sid)] >= INF) return std::nullopt;
        total += cost[static_cast<std::size_t>(sid)];
    }
    return total;
}

// ---------------------------------------------------------------------------
// Play simulation

struct PlayRound {
    VertexSet cops;
    int robber = -1;
    VertexSet robber_space;
};

struct PlayRecord {
    std::vector<PlayRound> rounds;
    bool captured = false;
    bool robber_monotone = true;
    bool cop_monotone = true;
};

/// Cop strategy: current position -> next announcement.
using CopStrategyFn = std::function<VertexSet(VertexSet cops, int robber_vertex)>;
/// Robber strategy: sees the announcement and its legal escape set (which may
/// include announced vertices; staying on one means capture).
using RobberStrategyFn = std::function<int(VertexSet cops, VertexSet announced, int robber_vertex, VertexSet allowed)>;

/// Stateful adapter turning a strategy tree into a cop move function.
class StrategyTreeCops {
public:
    StrategyTreeCops(const Digraph& d, const StrategyTree& t) : sccs_(d), tree_(t), at_(-1) {}

    VertexSet operator()(VertexSet cops, int robber_vertex) {
        if (at_ == -1) {
            at_ = tree_.root;
            return tree_.cops[static_cast<std::size_t>(at_)];
        }
        if (!(tree_.cops[static_cast<std::size_t>(at_)] == cops))
            throw Error("strategy tree adapter: position diverged from the tree");
        VertexSet space = sccs_.component_of(cops, robber_vertex);
        for (int c = 0; c < tree_.node_count(); ++c) {
            if (c == tree_.root || tree_.parent[static_cast<std::size_t>(c)] != at_) continue;
            if (space.subset_of(tree_.robber[static_cast<std::size_t>(c)])) {
                at_ = c;
                return tree_.cops[static_cast<std::size_t>(c)];
            }
        }
        throw Error("strategy tree adapter: no edge covers the robber space (cop strategy illegal)");
    }

private:
    SccCache sccs_;
    StrategyTree tree_;
    int at_;
};

/// Replays one play and audits capture and both monotonicity notions.
inline PlayRecord simulate_play(const Digraph& D, CopStrategyFn cops, RobberStrategyFn robber,
                                int max_rounds = 1000) {
    if (D.n() == 0) {
        PlayRecord rec;
        rec.captured = true;
        return rec;
    }
    SccCache sccs(D);
    PlayRecord rec;
    VertexSet C;
    // The robber picks a start: strategies see announced = {} for the choice.
    int v = robber(VertexSet{}, VertexSet{}, -1, D.vertex_set());
    if (v < 0 || v >= D.n()) throw Error("robber strategy made an illegal initial choice");
    rec.rounds.push_back({C, v, sccs.component_of(C, v)});
    for (int round = 0; round < max_rounds; ++round) {
        VertexSet announced = cops(C, v);
        if (announced.count() > D.n()) throw Error("cop strategy announced an oversized set");
        VertexSet shared = C & announced;
        VertexSet allowed = sccs.component_of(shared, v);
        int v2 = robber(C, announced, v, allowed);
        if (v2 < 0 || v2 >= D.n() || !allowed.contains(v2))
            throw Error("robber strategy made an illegal move");
        C = announced;
        v = v2;
        PlayRound r;
        r.cops = C;
        r.robber = v;
        if (C.contains(v)) {
            r.robber_space = VertexSet{};
            rec.rounds.push_back(r);
            rec.captured = true;
            break;
        }
        r.robber_space = sccs.component_of(C, v);
        rec.rounds.push_back(r);
    }
    // robber-monotone: spaces never grow
    for (std::size_t i = 0; i + 1 < rec.rounds.size(); ++i) {
        const VertexSet& a = rec.rounds[i].robber_space;
        const VertexSet& b = rec.rounds[i + 1].robber_space;
        if (!b.subset_of(a)) rec.robber_monotone = false;
    }
    // cop-monotone: no vertex is reoccupied after having been vacated
    for (int x = 0; x < D.n(); ++x) {
        bool was = false, gone = false;
        for (const PlayRound& r : rec.rounds) {
            bool now = r.cops.contains(x);
            if (was && !now) gone = true;
            if (gone && now) { rec.cop_monotone = false; break; }
            was = was || now;
        }
        if (!rec.cop_monotone) break;
    }
    return rec;
}

}  // namespace dtw

#endif

