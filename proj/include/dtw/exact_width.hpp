#ifndef DTW_EXACT_WIDTH_HPP
#define DTW_EXACT_WIDTH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dtw/decomp.hpp"
#include "dtw/digraph.hpp"

namespace dtw {

struct ExactWidthResult {
    int width = -1;
    TreeDecomposition certificate;
    bool size_capped = false;  // certificate misses the |V(T)| <= |V|^2 bound
};

namespace detail {

/// Decision procedure "is there a valid width-<=w decomposition" for one
/// flavor, built as a least fixed point over subtree states (U, incoming
/// guard). A state is solvable when some bag, Gamma budget and exact cover of
/// U - bag by flavor-admissible child sets with solvable substates exists.
class WidthSearch {
public:
    WidthSearch(std::shared_ptr<const Digraph> host, Flavor flavor, int w)
        : host_(std::move(host)), d_(*host_), flavor_(flavor), w_(w), sccs_(d_) {
        // USC0 widths coincide with SC0v (splitting union children into one
        // child per component keeps the width), so the search uses
        // single-component children for both.
        search_flavor_ = flavor_ == Flavor::USC0 ? Flavor::SC0v : flavor_;
    }

    bool run() {
        discover_all_from_root();
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < state_list_.size(); ++i) {
                State& st = states_.at(state_list_[i]);
                if (st.solved) continue;
                if (evaluate(st)) changed = true;
            }
            if (root_solvable()) return true;
            if (!changed && discover_pending()) changed = true;
        }
        return root_solvable();
    }

    TreeDecomposition extract() {
        TreeDecomposition T;
        T.host = host_;
        T.flavor = flavor_;
        // root
        T.node_ids.push_back("n0");
        T.bag.push_back(root_witness_.bag);
        T.guard.push_back(VertexSet{});
        T.parent.push_back(-1);
        T.root = 0;
        struct Item { Key key; int parent; };
        std::vector<Item> queue;
        for (const auto& [k, g] : root_witness_.children) queue.push_back({{k.bits(), g.bits()}, 0});
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            auto [key, par] = queue[qi];
            const State& st = states_.at(key);
            int id = T.node_count();
            T.node_ids.push_back("n" + std::to_string(id));
            T.bag.push_back(st.witness.bag);
            T.guard.push_back(VertexSet(key.second));
            T.parent.push_back(par);
            for (const auto& [k, g] : st.witness.children) queue.push_back({{k.bits(), g.bits()}, id});
            if (T.node_count() > 100000)
                throw Error("internal: extracted decomposition is unexpectedly large");
        }
        return T;
    }

private:
    using Key = std::pair<std::uint64_t, std::uint64_t>;  // (U, guard_in)

    struct Witness {
        VertexSet bag;
        std::vector<std::pair<VertexSet, VertexSet>> children;  // (K, guard)
    };
    struct State {
        VertexSet U, guard_in;
        bool solved = false;
        Witness witness;
    };

    std::shared_ptr<const Digraph> host_;
    const Digraph& d_;
    Flavor flavor_, search_flavor_;
    int w_;
    SccCache sccs_;
    std::map<Key, State> states_;
    std::vector<Key> state_list_;
    std::vector<Key> pending_;  // discovered but not yet in state_list_
    bool root_solved_ = false;
    Witness root_witness_;

    bool bags_must_be_nonempty() const {
        return search_flavor_ == Flavor::NW || search_flavor_ == Flavor::NCW || search_flavor_ == Flavor::SCd;
    }

    void discover(VertexSet U, VertexSet guard_in) {
        Key key{U.bits(), guard_in.bits()};
        if (states_.count(key)) return;
        State st;
        st.U = U;
        st.guard_in = guard_in;
        states_.emplace(key, std::move(st));
        pending_.push_back(key);
    }

    bool discover_pending() {
        if (pending_.empty()) return false;
        for (const Key& k : pending_) state_list_.push_back(k);
        pending_.clear();
        return true;
    }

    void discover_all_from_root() {
        root_solved_ = false;
        // seeding happens lazily: evaluating the root discovers child states
        evaluate_root();
        discover_pending();
    }

    bool root_solvable() {
        if (root_solved_) return true;
        evaluate_root();
        return root_solved_;
    }

    void evaluate_root() {
        if (root_solved_) return;
        Witness wit;
        if (try_node(d_.vertex_set(), VertexSet{}, /*root=*/true, wit)) {
            root_solved_ = true;
            root_witness_ = wit;
        }
    }

    bool evaluate(State& st) {
        Witness wit;
        if (!try_node(st.U, st.guard_in, /*root=*/false, wit)) return false;
        st.solved = true;
        st.witness = wit;
        return true;
    }

    bool solved_child(VertexSet K, VertexSet g) const {
        auto it = states_.find(Key{K.bits(), g.bits()});
        return it != states_.end() && it->second.solved;
    }

    /// Enumerates the maximal Gamma budgets: base plus exactly
    /// min(room, |pool|) further vertices. Smaller budgets are redundant
    /// since a larger Gamma only admits more bags and guards.
    template <typename Fn>
    void for_each_gamma(VertexSet base, int room, Fn&& fn) {
        std::vector<int> pool = (d_.vertex_set() - base).to_vector();
        int take = std::min<int>(room, static_cast<int>(pool.size()));
        std::vector<int> chosen;
        enumerate_exact(base, pool, 0, take, chosen, fn);
    }

    template <typename Fn>
    void enumerate_exact(VertexSet base, const std::vector<int>& pool, std::size_t from, int take,
                         std::vector<int>& chosen, Fn&& fn) {
        if (take == 0) {
            VertexSet g = base;
            for (int v : chosen) g.insert(v);
            fn(g);
            return;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(take) <= pool.size(); ++i) {
            chosen.push_back(pool[i]);
            enumerate_exact(base, pool, i + 1, take - 1, chosen, fn);
            chosen.pop_back();
        }
    }

    /// One child-set candidate: a set K admissible for an edge guarded by g.
    struct Candidate {
        VertexSet K, g;
    };

    void candidates_for_guard(VertexSet g, VertexSet rest, std::vector<Candidate>& out) {
        const SccPartition& parts = sccs_.partition(g);
        switch (search_flavor_) {
            case Flavor::SC0:
            case Flavor::SC0v:
            case Flavor::SCd: {
                for (const VertexSet& comp : parts.components)
                    if (comp.subset_of(rest)) out.push_back({comp, g});
                break;
            }
            case Flavor::NW:
            case Flavor::NCW:
            case Flavor::NCW0: {
                std::vector<VertexSet> comps;
                for (const VertexSet& comp : parts.components)
                    if (comp.subset_of(rest)) comps.push_back(comp);
                VertexSet gpart = g & rest;  // NCW family may bag guard vertices below
                std::vector<int> gl = gpart.to_vector();
                std::size_t comp_lim = std::uint64_t{1} << comps.size();
                std::size_t g_lim = (search_flavor_ == Flavor::NW) ? 1 : (std::uint64_t{1} << gl.size());
                for (std::size_t cm = 0; cm < comp_lim; ++cm) {
                    VertexSet base;
                    for (std::size_t i = 0; i < comps.size(); ++i)
                        if ((cm >> i) & 1) base |= comps[i];
                    for (std::size_t gm = 0; gm < g_lim; ++gm) {
                        VertexSet K = base;
                        for (std::size_t i = 0; i < gl.size(); ++i)
                            if ((gm >> i) & 1) K.insert(gl[i]);
                        if (K.empty()) continue;
                        if (search_flavor_ == Flavor::NW) {
                            if (K.intersects(g)) continue;
                            if (d_.normality_violation(g, K)) continue;
                        }
                        out.push_back({K, g});
                    }
                }
                break;
            }
            case Flavor::USC0:
                break;  // handled as SC0v
        }
    }

    bool cover(VertexSet rest, const std::vector<Candidate>& cands, std::vector<std::pair<VertexSet, VertexSet>>& chosen) {
        if (rest.empty()) return true;
        int v = rest.min();
        for (const Candidate& c : cands) {
            if (!c.K.contains(v) || !c.K.subset_of(rest)) continue;
            if (!solved_child(c.K, c.g)) continue;
            chosen.emplace_back(c.K, c.g);
            if (cover(rest - c.K, cands, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    bool try_node(VertexSet U, VertexSet guard_in, bool root, Witness& wit) {
        int slack = w_ + 1 - guard_in.count();
        if (slack < 0) return false;
        bool ok = false;
        for_each_gamma(guard_in, slack, [&](VertexSet gamma) {
            if (ok) return;
            // child-set candidates, one batch per child guard inside gamma
            std::vector<Candidate> cands;
            std::vector<int> gl = gamma.to_vector();
            for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << gl.size()); ++gm) {
                VertexSet g;
                for (std::size_t i = 0; i < gl.size(); ++i)
                    if ((gm >> i) & 1) g.insert(gl[static_cast<std::size_t>(i)]);
                candidates_for_guard(g, U, cands);
            }
            // bags inside gamma
            VertexSet bag_pool = gamma & U;
            std::vector<int> bl = bag_pool.to_vector();
            for (std::uint64_t bm = 0; bm < (std::uint64_t{1} << bl.size()) && !ok; ++bm) {
                VertexSet bag;
                for (std::size_t i = 0; i < bl.size(); ++i)
                    if ((bm >> i) & 1) bag.insert(bl[static_cast<std::size_t>(i)]);
                if (bag.empty() && (root || bags_must_be_nonempty()) && d_.n() > 0) continue;
                VertexSet rest = U - bag;
                if (search_flavor_ == Flavor::SCd && guard_in.intersects(rest)) continue;
                // discover child states and try an exact cover
                std::vector<Candidate> usable;
                for (const Candidate& c : cands) {
                    if (!c.K.subset_of(rest)) continue;
                    if (search_flavor_ == Flavor::SCd && c.g.intersects(rest)) continue;
                    discover(c.K, c.g);
                    usable.push_back(c);
                }
                std::vector<std::pair<VertexSet, VertexSet>> chosen;
                if (cover(rest, usable, chosen)) {
                    wit.bag = bag;
                    wit.children = std::move(chosen);
                    ok = true;
                }
            }
        });
        return ok;
    }
};

}  // namespace detail

/// Minimum width over all valid decompositions of the given flavor, with a
/// validating certificate. Branch-and-bound over rooted trees with memoised
/// (remaining-set, guard) states; exact for |V| up to the cap.
inline ExactWidthResult exact_width(std::shared_ptr<const Digraph> D, Flavor flavor,
                                    std::optional<int> upper_bound = std::nullopt, int cap = 7) {
    if (D->n() > cap)
        throw BudgetExceeded("exact_width: |V| exceeds the desk-scale cap of " + std::to_string(cap));
    if (D->n() == 0) throw Error("exact_width: empty digraph has no decomposition with a nonempty root");
    int hi = upper_bound.value_or(D->n() - 1);
    for (int w = 0; w <= hi; ++w) {
        detail::WidthSearch search(D, flavor, w);
        if (!search.run()) continue;
        ExactWidthResult res;
        res.width = w;
        res.certificate = search.extract();
        if (flavor == Flavor::SC0 || flavor == Flavor::SC0v || flavor == Flavor::NCW0) {
            // compress deletable empty bags so SC0 certificates meet the size
            // bound; NCW0 trees get the same treatment for tidiness
            if (flavor == Flavor::SC0 || flavor == Flavor::SC0v) {
                TreeDecomposition t = res.certificate.with_flavor(Flavor::SC0v);
                t = remove_deletable_empty_bags(t);
                res.certificate = t.with_flavor(flavor);
            }
        }
        res.size_capped = res.certificate.node_count() > D->n() * D->n();
        return res;
    }
    throw Error("internal: no decomposition found up to the trivial width");
}

}  // namespace dtw

#endif
