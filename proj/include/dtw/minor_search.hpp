#ifndef DTW_MINOR_SEARCH_HPP
#define DTW_MINOR_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "dtw/digraph.hpp"
#include "dtw/iso.hpp"
#include "dtw/minors.hpp"

namespace dtw {

struct MinorSearchResult {
    enum class Status { Found, Absent, BudgetExhausted };
    Status status = Status::Absent;
    std::optional<MinorWitness> witness;
    std::uint64_t nodes = 0;

    bool found() const { return status == Status::Found; }
};

namespace detail {

struct MinorSearch {
    const Digraph& target;
    const Digraph& host;
    std::uint64_t budget;
    std::uint64_t used = 0;
    bool out_of_budget = false;
    std::optional<MinorWitness> found;
    std::unordered_set<std::string> visited;

    MinorSearch(const Digraph& t, const Digraph& h, std::uint64_t b) : target(t), host(h), budget(b) {}

    bool tick() {
        if (++used > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    static std::string signature(const std::vector<VertexSet>& blobs, const Digraph& g) {
        std::vector<std::pair<std::uint64_t, int>> order;
        for (int v = 0; v < g.n(); ++v) order.emplace_back(blobs[static_cast<std::size_t>(v)].bits(), v);
        std::sort(order.begin(), order.end());
        std::string s;
        s.reserve(static_cast<std::size_t>(g.n()) * 16);
        std::vector<int> pos(static_cast<std::size_t>(g.n()));
        for (int i = 0; i < g.n(); ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)].second)] = i;
        for (auto [bits, v] : order) {
            (void)v;
            s.append(reinterpret_cast<const char*>(&bits), sizeof bits);
        }
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.n()), 0);
        for (auto [t, h] : g.edges())
            rows[static_cast<std::size_t>(pos[static_cast<std::size_t>(t)])] |=
                std::uint64_t{1} << pos[static_cast<std::size_t>(h)];
        for (auto r : rows) s.append(reinterpret_cast<const char*>(&r), sizeof r);
        return s;
    }

    bool size_prune(const Digraph& g) const {
        if (g.n() < target.n()) return true;
        if (g.edge_count() - (g.n() - target.n()) < target.edge_count()) return true;
        return false;
    }

    bool goal_test(const Digraph& g, const ContractionScript& script) {
        if (g.n() != target.n() || g.edge_count() != target.edge_count()) return false;
        std::optional<std::vector<int>> map;
        if (same_named_digraph(g, target)) {
            map = std::vector<int>(static_cast<std::size_t>(g.n()));
            for (int v = 0; v < g.n(); ++v) (*map)[static_cast<std::size_t>(v)] = target.index_of(g.name(v));
        } else {
            map = find_isomorphism(g, target);
        }
        if (!map) return false;
        MinorWitness w;
        w.script = script;
        for (int v = 0; v < g.n(); ++v) {
            const std::string& from = g.name(v);
            const std::string& to = target.name((*map)[static_cast<std::size_t>(v)]);
            if (from != to) w.rename[from] = to;
        }
        found = std::move(w);
        return true;
    }

    /// Contraction phase: the kept subgraph is fixed, only contractions remain.
    bool contract_phase(const Digraph& g, std::vector<VertexSet> blobs, ContractionScript script, int fresh) {
        if (!tick()) return false;
        if (goal_test(g, script)) return true;
        if (g.n() == target.n() || size_prune(g)) return false;
        std::string sig = signature(blobs, g);
        if (!visited.insert(std::move(sig)).second) return false;

        std::vector<std::pair<int, std::pair<int, int>>> moves;
        for (auto [t, h] : g.edges()) {
            bool tail1 = g.out_degree(t) == 1, head1 = g.in_degree(h) == 1;
            if (!tail1 && !head1) continue;
            moves.push_back({-(static_cast<int>(tail1) + static_cast<int>(head1)), {t, h}});
        }
        std::stable_sort(moves.begin(), moves.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [prio, e] : moves) {
            (void)prio;
            auto [t, h] = e;
            std::string merged = "#" + std::to_string(fresh);
            Digraph next = g.contract_edge(t, h, merged);
            std::vector<VertexSet> nblobs(static_cast<std::size_t>(next.n()));
            int x = next.index_of(merged);
            for (int nv = 0; nv < next.n(); ++nv)
                nblobs[static_cast<std::size_t>(nv)] =
                    (nv == x) ? (blobs[static_cast<std::size_t>(t)] | blobs[static_cast<std::size_t>(h)])
                              : blobs[static_cast<std::size_t>(g.index_of(next.name(nv)))];
            ContractionScript nscript = script;
            nscript.steps.push_back({g.name(t), g.name(h), merged});
            if (contract_phase(next, std::move(nblobs), std::move(nscript), fresh + 1)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    /// Edge-deletion phase, canonical ascending order over the kept subgraph's
    /// edge list; zero further deletions is tried first.
    bool edge_phase(const Digraph& g, const ContractionScript& base, std::size_t next_edge) {
        if (!tick()) return false;
        if (size_prune(g)) return false;
        {
            std::vector<VertexSet> blobs(static_cast<std::size_t>(g.n()));
            for (int v = 0; v < g.n(); ++v) blobs[static_cast<std::size_t>(v)] = VertexSet::single(host.index_of(g.name(v)));
            if (contract_phase(g, std::move(blobs), base, 0)) return true;
            if (out_of_budget) return false;
        }
        for (std::size_t i = next_edge; i < g.edges().size(); ++i) {
            auto [t, h] = g.edges()[i];
            Digraph next = g.delete_edges({{t, h}});
            ContractionScript nbase = base;
            nbase.drop_edges.emplace_back(g.name(t), g.name(h));
            // indices shift after a deletion: edges before i are untouched
            if (edge_phase(next, nbase, i)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    /// Vertex-deletion phase over ascending host indices.
    bool vertex_phase(VertexSet keep, int next_host_vertex) {
        if (!tick()) return false;
        if (keep.count() >= target.n()) {
            Digraph g = host.induced_subgraph(keep);
            ContractionScript base;
            base.keep_vertices = g.names();
            if (!size_prune(g) && edge_phase(g, base, 0)) return true;
            if (out_of_budget) return false;
        }
        for (int v = next_host_vertex; v < host.n(); ++v) {
            if (keep.count() - 1 < target.n()) break;
            VertexSet nk = keep;
            nk.erase(v);
            if (vertex_phase(nk, v + 1)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace detail

/// Exact backtracking decision procedure for target <=_b host. Scripts are
/// explored in the canonical delete-then-contract form; quotient states are
/// deduplicated by their blob partition. With an unexhausted budget the
/// Absent verdict is a proof.
inline MinorSearchResult find_butterfly_minor(const Digraph& target, const Digraph& host,
                                              std::uint64_t budget = 2'000'000) {
    MinorSearchResult r;
    if (target.n() == 0) {
        r.status = MinorSearchResult::Status::Found;
        MinorWitness w;  // keep nothing
        r.witness = w;
        return r;
    }
    if (target.n() > host.n() || target.edge_count() > host.edge_count()) {
        r.status = MinorSearchResult::Status::Absent;
        return r;
    }
    detail::MinorSearch s(target, host, budget);
    bool ok = s.vertex_phase(host.vertex_set(), 0);
    r.nodes = s.used;
    if (ok) {
        r.status = MinorSearchResult::Status::Found;
        r.witness = std::move(s.found);
    } else if (s.out_of_budget) {
        r.status = MinorSearchResult::Status::BudgetExhausted;
    } else {
        r.status = MinorSearchResult::Status::Absent;
    }
    return r;
}

/// Greedily deletes edges, then vertices, re-verifying containment after each
/// step, until no single deletion preserves the minor; deterministic index
/// order. If the target is strongly connected the result must be too.
inline std::pair<Digraph, MinorWitness> minimal_major(const Digraph& target, const Digraph& host,
                                                      const MinorWitness& witness,
                                                      std::uint64_t budget = 2'000'000) {
    if (auto reason = verify_witness(target, host, witness))
        throw Error("minimal_major: witness fails verification: " + *reason);
    VertexSet keep = host.set_of(witness.script.keep_vertices);
    Digraph H = host.induced_subgraph(keep);
    {
        std::vector<std::pair<int, int>> drop;
        for (const auto& [a, b] : witness.script.drop_edges) drop.emplace_back(H.index_of(a), H.index_of(b));
        H = H.delete_edges(drop);
    }
    MinorWitness best = witness;
    best.script.keep_vertices = H.names();
    best.script.drop_edges.clear();

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < H.edges().size(); ++i) {
            auto [t, h] = H.edges()[i];
            Digraph cand = H.delete_edges({{t, h}});
            MinorSearchResult r = find_butterfly_minor(target, cand, budget);
            if (r.status == MinorSearchResult::Status::BudgetExhausted)
                throw BudgetExceeded("minimal_major: deletion audit ran out of budget");
            if (r.found()) {
                H = std::move(cand);
                best = *r.witness;
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (int v = 0; v < H.n(); ++v) {
            VertexSet nk = H.vertex_set();
            nk.erase(v);
            Digraph cand = H.induced_subgraph(nk);
            if (cand.n() < target.n()) continue;
            MinorSearchResult r = find_butterfly_minor(target, cand, budget);
            if (r.status == MinorSearchResult::Status::BudgetExhausted)
                throw BudgetExceeded("minimal_major: deletion audit ran out of budget");
            if (r.found()) {
                H = std::move(cand);
                best = *r.witness;
                changed = true;
                break;
            }
        }
    }
    if (target.n() > 0 && target.strongly_connected() && !H.strongly_connected())
        throw Error("minimal_major: minimal major of a strongly connected minor is not strongly connected");
    return {H, best};
}

}  // namespace dtw

#endif
