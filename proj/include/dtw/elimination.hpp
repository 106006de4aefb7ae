#ifndef DTW_ELIMINATION_HPP
#define DTW_ELIMINATION_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dtw/digraph.hpp"

namespace dtw {

/// Exhaustive elimination for SC0-width lower bounds on hub-symmetric
/// instances: searches for a valid SC0v decomposition of width at most
/// `width` in the singleton-bag normal form (every bag has at most one
/// vertex, the root is nonempty, no deletable empty bag, at most one
/// branching node because only two leaf positions exist). The normal form is
/// general: bags split one vertex at a time without width growth, the union
/// flavor normalises back to single components, and deletable empty bags
/// contract. An empty result set is therefore a proof that the SC0 width
/// exceeds `width`.
struct SingletonEliminationResult {
    bool decomposition_exists = false;
    std::vector<std::string> leaf_vertices;  // all legal leaf bags found
    std::uint64_t states_explored = 0;
    bool budget_exhausted = false;
};

namespace detail {

/// Upward chain state: the subtree set W hangs below an edge guarded g_in;
/// the top node's bag may be empty, in which case the guard below it is
/// needed for the deletable-empty-bag test.
struct ChainState {
    VertexSet W, g_in;
    bool top_empty = false;
    VertexSet g_below;

    bool operator<(const ChainState& o) const {
        auto key = [](const ChainState& s) {
            return std::tuple(s.W.bits(), s.g_in.bits(), s.top_empty, s.g_below.bits());
        };
        return key(*this) < key(o);
    }
};

}  // namespace detail

inline SingletonEliminationResult eliminate_singleton_sc0v(const Digraph& D, int width,
                                                           std::uint64_t budget = 30'000'000) {
    SingletonEliminationResult result;
    SccCache sccs(D);
    const int gamma_cap = width + 1;
    std::uint64_t& used = result.states_explored;

    auto is_component = [&](VertexSet W, VertexSet g) {
        if (W.intersects(g)) return false;
        for (const VertexSet& comp : sccs.partition(g).components)
            if (comp == W) return true;
        return false;
    };
    auto deletable = [&](VertexSet g_up, VertexSet g_down, VertexSet below) {
        if (g_up.subset_of(g_down) || g_down.subset_of(g_up)) return true;
        for (const VertexSet& comp : sccs.partition(g_up & g_down).components)
            if (comp == below) return true;
        return false;
    };

    // guard candidates: every vertex set of size at most width
    std::vector<VertexSet> guards;
    {
        std::vector<int> all = D.vertex_set().to_vector();
        std::vector<int> chosen;
        std::function<void(std::size_t, int)> rec = [&](std::size_t from, int room) {
            VertexSet g;
            for (int v : chosen) g.insert(v);
            guards.push_back(g);
            if (room == 0) return;
            for (std::size_t i = from; i < all.size(); ++i) {
                chosen.push_back(all[i]);
                rec(i + 1, room - 1);
                chosen.pop_back();
            }
        };
        rec(0, width);
    }

    // leaf states: singleton bags that are components of D - guard
    std::set<detail::ChainState> seen;
    std::vector<detail::ChainState> queue;
    std::set<int> leaf_vertices;
    for (int v = 0; v < D.n(); ++v) {
        VertexSet W = VertexSet::single(v);
        for (const VertexSet& g : guards) {
            if ((g | W).count() > gamma_cap) continue;
            if (!is_component(W, g)) continue;
            leaf_vertices.insert(v);
            detail::ChainState s{W, g, false, VertexSet{}};
            if (seen.insert(s).second) queue.push_back(s);
        }
    }
    for (int v : leaf_vertices) result.leaf_vertices.push_back(D.name(v));

    // grow chains upward; collect every reachable state
    auto extend_ok = [&](const detail::ChainState& s) {
        // the current top becomes internal; a deletable empty bag is banned
        return !(s.top_empty && deletable(s.g_in, s.g_below, s.W));
    };
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        detail::ChainState s = queue[qi];
        if (++used > budget) {
            result.budget_exhausted = true;
            return result;
        }
        if (!extend_ok(s)) continue;
        for (int b = -1; b < D.n(); ++b) {  // -1 = empty bag
            VertexSet bag;
            if (b >= 0) {
                if (s.W.contains(b)) continue;
                bag = VertexSet::single(b);
            }
            VertexSet W2 = s.W | bag;
            for (const VertexSet& g2 : guards) {
                if ((bag | g2 | s.g_in).count() > gamma_cap) continue;
                if (!is_component(W2, g2)) continue;
                detail::ChainState ns{W2, g2, b < 0, s.g_in};
                if (seen.insert(ns).second) queue.push_back(ns);
            }
        }
    }

    // path-shaped trees: a root with a singleton bag on top of one chain
    auto chain_roots = [&](const detail::ChainState& s) {
        if (!extend_ok(s)) return false;
        for (int v = 0; v < D.n(); ++v) {
            if (s.W.contains(v)) continue;
            if ((VertexSet::single(v) | s.g_in).count() > gamma_cap) continue;
            if ((s.W | VertexSet::single(v)) == D.vertex_set()) return true;
        }
        return false;
    };
    for (const detail::ChainState& s : seen)
        if (chain_roots(s)) result.decomposition_exists = true;

    // Y-shaped trees: a branching node joining two disjoint chains, then a
    // chain up to the root. The branch states feed back into the chain search.
    std::vector<detail::ChainState> states(seen.begin(), seen.end());
    std::set<detail::ChainState> branch_seen;
    std::vector<detail::ChainState> branch_queue;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const detail::ChainState &a = states[i], &b = states[j];
            if (a.W.intersects(b.W)) continue;
            if (!extend_ok(a) || !extend_ok(b)) continue;
            if (++used > budget) {
                result.budget_exhausted = true;
                return result;
            }
            for (int v = -1; v < D.n(); ++v) {
                VertexSet bag;
                if (v >= 0) {
                    if (a.W.contains(v) || b.W.contains(v)) continue;
                    bag = VertexSet::single(v);
                }
                VertexSet W2 = a.W | b.W | bag;
                // the branching node as the root
                if (v >= 0 && W2 == D.vertex_set() && (bag | a.g_in | b.g_in).count() <= gamma_cap)
                    result.decomposition_exists = true;
                // or as an internal node under a fresh guard
                for (const VertexSet& g2 : guards) {
                    if ((bag | g2 | a.g_in | b.g_in).count() > gamma_cap) continue;
                    if (!is_component(W2, g2)) continue;
                    // a branching node is never a deletable empty bag
                    detail::ChainState ns{W2, g2, false, VertexSet{}};
                    if (branch_seen.insert(ns).second) branch_queue.push_back(ns);
                }
            }
        }
    }
    // continue the chains above branch nodes
    for (std::size_t qi = 0; qi < branch_queue.size(); ++qi) {
        detail::ChainState s = branch_queue[qi];
        if (++used > budget) {
            result.budget_exhausted = true;
            return result;
        }
        if (s.top_empty && deletable(s.g_in, s.g_below, s.W)) continue;
        // root on top of this chain?
        for (int v = 0; v < D.n() && !result.decomposition_exists; ++v) {
            if (s.W.contains(v)) continue;
            if ((VertexSet::single(v) | s.g_in).count() > gamma_cap) continue;
            if ((s.W | VertexSet::single(v)) == D.vertex_set()) result.decomposition_exists = true;
        }
        for (int b = -1; b < D.n(); ++b) {
            VertexSet bag;
            if (b >= 0) {
                if (s.W.contains(b)) continue;
                bag = VertexSet::single(b);
            }
            VertexSet W2 = s.W | bag;
            for (const VertexSet& g2 : guards) {
                if ((bag | g2 | s.g_in).count() > gamma_cap) continue;
                if (!is_component(W2, g2)) continue;
                detail::ChainState ns{W2, g2, b < 0, s.g_in};
                if (branch_seen.insert(ns).second) branch_queue.push_back(ns);
            }
        }
    }
    return result;
}

}  // namespace dtw

#endif
