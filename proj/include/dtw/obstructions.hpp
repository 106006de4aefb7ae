#ifndef DTW_OBSTRUCTIONS_HPP
#define DTW_OBSTRUCTIONS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dtw/digraph.hpp"
#include "dtw/minor_search.hpp"
#include "dtw/minors.hpp"

namespace dtw {

enum class BrambleKind { Strong, Weak };

/// Family of vertex sets, each inducing a strongly connected subgraph.
/// Strong brambles intersect pairwise; weak ones may instead be joined by
/// edges in both directions.
struct Bramble {
    BrambleKind kind = BrambleKind::Strong;
    std::vector<VertexSet> elements;
};

struct BrambleVerdict {
    bool valid = true;
    std::vector<std::string> violations;
};

struct CoverCertificate {
    VertexSet cover;
    bool optimal = true;
    int order() const { return cover.count(); }
};

struct LinkedSetReport {
    VertexSet W;
    int k = 0;
    std::optional<VertexSet> balanced_separator;  // present iff W is not k-linked
    bool linked() const { return !balanced_separator.has_value(); }
};

inline bool induces_strongly_connected(const Digraph& d, VertexSet s) {
    if (s.empty()) return false;
    SccPartition p = d.strong_components(d.vertex_set() - s);
    return p.size() == 1 && p.components[0] == s;
}

/// Weak pairwise compatibility: overlap, or edges in both directions.
inline bool weakly_compatible(const Digraph& d, VertexSet a, VertexSet b) {
    if (a.intersects(b)) return true;
    bool ab = false, ba = false;
    for (auto [t, h] : d.edges()) {
        if (a.contains(t) && b.contains(h)) ab = true;
        if (b.contains(t) && a.contains(h)) ba = true;
    }
    return ab && ba;
}

inline BrambleVerdict validate_bramble(const Digraph& d, const Bramble& b) {
    BrambleVerdict v;
    auto bad = [&](const std::string& s) {
        v.valid = false;
        v.violations.push_back(s);
    };
    if (b.elements.empty()) bad("bramble has no elements");
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        if (!induces_strongly_connected(d, b.elements[i]))
            bad("element " + std::to_string(i) + " does not induce a strongly connected subgraph");
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
            if (b.kind == BrambleKind::Strong) {
                if (!b.elements[i].intersects(b.elements[j]))
                    bad("elements " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint");
            } else if (!weakly_compatible(d, b.elements[i], b.elements[j])) {
                bad("elements " + std::to_string(i) + " and " + std::to_string(j) +
                    " neither overlap nor have edges both ways");
            }
        }
    return v;
}

namespace detail {

/// Exact minimum hitting set by branch and bound: greedy upper bound, then
/// branching on the vertices of an uncovered element.
struct HittingSet {
    const std::vector<VertexSet>& sets;

    VertexSet best;
    int best_size;

    explicit HittingSet(const std::vector<VertexSet>& s) : sets(s) {
        // greedy: repeatedly take the vertex hitting the most uncovered sets
        VertexSet greedy;
        std::vector<bool> hit(sets.size(), false);
        for (;;) {
            VertexSet all;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (!hit[i]) all |= sets[i];
            if (all.empty()) break;
            int pick = -1, score = -1;
            for (int v : all) {
                int c = 0;
                for (std::size_t i = 0; i < sets.size(); ++i)
                    if (!hit[i] && sets[i].contains(v)) ++c;
                if (c > score) { score = c; pick = v; }
            }
            greedy.insert(pick);
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (sets[i].contains(pick)) hit[i] = true;
        }
        best = greedy;
        best_size = greedy.count();
        branch(VertexSet{});
    }

    void branch(VertexSet cur) {
        if (cur.count() >= best_size) return;
        int missing = -1;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!sets[i].intersects(cur)) { missing = static_cast<int>(i); break; }
        if (missing == -1) {
            best = cur;
            best_size = cur.count();
            return;
        }
        for (int v : sets[static_cast<std::size_t>(missing)]) {
            VertexSet next = cur;
            next.insert(v);
            branch(next);
        }
    }
};

}  // namespace detail

/// Exact minimum cover of a valid bramble.
inline CoverCertificate bramble_order(const Digraph& d, const Bramble& b) {
    BrambleVerdict v = validate_bramble(d, b);
    if (!v.valid) throw Error("bramble_order: invalid bramble: " + v.violations.front());
    detail::HittingSet hs(b.elements);
    return {hs.best, true};
}

/// Maximum order of any bramble of the given kind, with a witness. All
/// strongly connected vertex sets are enumerated, pairwise compatibility
/// forms a graph, and orders are maximised over its maximal cliques (adding
/// compatible elements never lowers the order).
inline std::pair<int, Bramble> bramble_number(const Digraph& d, BrambleKind kind, int cap = 8) {
    if (d.n() > cap)
        throw BudgetExceeded("bramble_number: |V| exceeds the desk-scale cap of " + std::to_string(cap));
    if (d.n() == 0) return {0, Bramble{kind, {}}};
    std::vector<VertexSet> sc;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << d.n()); ++m)
        if (induces_strongly_connected(d, VertexSet(m))) sc.push_back(VertexSet(m));
    int n = static_cast<int>(sc.size());
    std::vector<std::vector<bool>> compat(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool ok = kind == BrambleKind::Strong ? sc[static_cast<std::size_t>(i)].intersects(sc[static_cast<std::size_t>(j)])
                                                  : weakly_compatible(d, sc[static_cast<std::size_t>(i)], sc[static_cast<std::size_t>(j)]);
            compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ok;
            compat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = ok;
        }
    int best = 0;
    Bramble witness{kind, {}};
    // Bron-Kerbosch with pivoting over the compatibility graph.
    std::vector<int> R;
    std::function<void(std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
            std::vector<VertexSet> fam;
            for (int i : R) fam.push_back(sc[static_cast<std::size_t>(i)]);
            detail::HittingSet hs(fam);
            if (hs.best_size > best) {
                best = hs.best_size;
                witness.elements = fam;
            }
            return;
        }
        int pivot = !P.empty() ? P.front() : X.front();
        std::vector<int> todo;
        for (int v : P)
            if (!compat[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) todo.push_back(v);
        for (int v : todo) {
            std::vector<int> P2, X2;
            for (int u : P)
                if (compat[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) P2.push_back(u);
            for (int u : X)
                if (compat[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) X2.push_back(u);
            R.push_back(v);
            bk(P2, X2);
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    };
    std::vector<int> P0(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) P0[static_cast<std::size_t>(i)] = i;
    bk(P0, {});
    return {best, witness};
}

/// Lifts a strong bramble along a butterfly-minor witness: inside a minimal
/// major the model blobs of intersecting elements share branching roots, so
/// pruned per-element majors intersect again and the order never drops.
inline Bramble lift_bramble(const Digraph& target, const Digraph& host, const MinorWitness& w,
                            const Bramble& b, std::uint64_t budget = 2'000'000) {
    if (b.kind == BrambleKind::Weak)
        throw Error("lift_bramble: the construction applies to strong brambles only");
    BrambleVerdict bv = validate_bramble(target, b);
    if (!bv.valid) throw Error("lift_bramble: invalid bramble: " + bv.violations.front());

    // order-1 shortcut: a singleton element forces order 1, matched by any
    // single host vertex
    for (const VertexSet& el : b.elements)
        if (el.count() == 1) return Bramble{BrambleKind::Strong, {VertexSet::single(0)}};

    auto [H, wmin] = minimal_major(target, host, w, budget);
    ButterflyModel mu = witness_model(target, H, wmin);

    Bramble out;
    out.kind = BrambleKind::Strong;
    for (const VertexSet& el : b.elements) {
        // prune each blob to the root paths of the attachment points used by
        // the element's internal edges
        VertexSet lifted;
        for (int tv : el) {
            const Branching& blob = mu.blob[static_cast<std::size_t>(tv)];
            VertexSet part = VertexSet::single(blob.root);
            for (auto [t, h] : target.edges()) {
                if (!el.contains(t) || !el.contains(h)) continue;
                auto [p, q] = mu.edge_image.at({t, h});
                if (h == tv) {
                    int cur = q;
                    while (cur != blob.root) {
                        part.insert(cur);
                        cur = blob.in_parent.at(cur);
                    }
                }
                if (t == tv) {
                    int cur = p;
                    while (cur != blob.root) {
                        part.insert(cur);
                        cur = blob.out_parent.at(cur);
                    }
                }
            }
            lifted |= part;
        }
        // translate H indices to host indices (H is an induced-style subgraph)
        VertexSet in_host;
        for (int v : lifted) in_host.insert(host.index_of(H.name(v)));
        out.elements.push_back(in_host);
    }
    return out;
}

/// Exhaustive search over all separator candidates with |S| <= k; returns
/// the first balanced separator in deterministic order, or certifies the set
/// k-linked.
inline LinkedSetReport is_k_linked(const Digraph& d, VertexSet W, int k, std::uint64_t budget = 50'000'000) {
    LinkedSetReport rep;
    rep.W = W;
    rep.k = k;
    std::uint64_t used = 0;
    int half = W.count();  // compare 2*|comp & W| <= |W| to stay integral
    std::vector<int> all = d.vertex_set().to_vector();
    std::vector<int> chosen;
    std::optional<VertexSet> found;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int room) {
        if (found) return;
        VertexSet S;
        for (int v : chosen) S.insert(v);
        if (++used > budget) throw BudgetExceeded("is_k_linked: combinatorial budget exceeded");
        bool balanced = true;
        for (const VertexSet& comp : d.strong_components(S).components)
            if (2 * (comp & W).count() > half) { balanced = false; break; }
        if (balanced) {
            found = S;
            return;
        }
        if (room == 0) return;
        for (std::size_t i = from; i < all.size() && !found; ++i) {
            chosen.push_back(all[i]);
            rec(i + 1, room - 1);
            chosen.pop_back();
        }
    };
    rec(0, k);
    rep.balanced_separator = found;
    return rep;
}

/// The majority bramble of a k-linked set: all strongly connected vertex
/// sets holding more than half of W. Any two intersect, and no cover of size
/// at most k exists, so the order is at least k+1.
inline Bramble klinked_to_bramble(const Digraph& d, VertexSet W, int k) {
    LinkedSetReport rep = is_k_linked(d, W, k);
    if (!rep.linked()) throw Error("klinked_to_bramble: W is not k-linked");
    Bramble b;
    b.kind = BrambleKind::Strong;
    int half = W.count();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << d.n()); ++m) {
        VertexSet s(m);
        if (2 * (s & W).count() <= half) continue;
        if (induces_strongly_connected(d, s)) b.elements.push_back(s);
    }
    return b;
}

struct HavenVerdict {
    bool valid = true;
    std::vector<std::string> violations;
};

/// Treats the bramble as a haven of order k: h(X) is the strong component of
/// D - X containing the least-index element disjoint from X. Verifies
/// totality and monotonicity (h(X) subset of h(Y) for Y subset of X) by full
/// enumeration over |X| < k.
inline HavenVerdict bramble_haven_check(const Digraph& d, const Bramble& b, int k, int vertex_cap = 10,
                                        int order_cap = 4) {
    if (d.n() > vertex_cap || k > order_cap)
        throw BudgetExceeded("bramble_haven_check: enumeration caps exceeded");
    HavenVerdict verdict;
    auto bad = [&](const std::string& s) {
        verdict.valid = false;
        verdict.violations.push_back(s);
    };
    auto haven_at = [&](VertexSet X) -> std::optional<VertexSet> {
        for (const VertexSet& el : b.elements) {
            if (el.intersects(X)) continue;
            return d.strong_components(X).component_containing(el.min());
        }
        return std::nullopt;
    };
    // enumerate all X with |X| < k
    std::vector<std::uint64_t> xs;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.n()); ++m)
        if (std::popcount(m) < k) xs.push_back(m);
    std::vector<std::optional<VertexSet>> h(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        h[i] = haven_at(VertexSet(xs[i]));
        if (!h[i])
            bad("h undefined at X = {" + std::to_string(xs[i]) + "}: every element is hit (bramble order below k)");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!h[i]) continue;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (!h[j]) continue;
            // Y = xs[j] subset of X = xs[i] must give h(X) subset of h(Y)
            if ((xs[j] & ~xs[i]) != 0) continue;
            if (!h[i]->subset_of(*h[j])) bad("monotonicity fails between two removal sets");
        }
    }
    return verdict;
}

}  // namespace dtw

#endif
