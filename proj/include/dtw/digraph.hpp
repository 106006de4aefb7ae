#ifndef DTW_DIGRAPH_HPP
#define DTW_DIGRAPH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dtw/core.hpp"

namespace dtw {

/// Partition of V(D) - removed into strong components. Components are
/// ordered by their smallest contained vertex index, which makes every
/// SCC-derived computation deterministic.
struct SccPartition {
    std::vector<VertexSet> components;
    std::vector<int> comp_of;  // vertex -> component index, -1 for removed vertices

    int size() const { return static_cast<int>(components.size()); }
    const VertexSet& component_containing(int v) const { return components[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])]; }
};

class Digraph;

/// Nonempty vertex sequence whose consecutive pairs are edges; closed walks
/// end where they start.
struct Walk {
    std::vector<int> vertices;
    bool closed = false;

    bool validate(const Digraph& d) const;
};

/// Simple finite digraph over named vertices. Names are opaque strings at the
/// boundary; identity inside the library is the dense index fixed at
/// construction. Immutable after construction; all operations are pure.
class Digraph {
public:
    static Digraph build(const std::vector<std::string>& vertex_names,
                         const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
        Digraph d;
        if (vertex_names.size() > 64)
            throw Error("digraph exceeds the 64-vertex cap (got " + std::to_string(vertex_names.size()) + ")");
        d.names_ = vertex_names;
        for (int i = 0; i < d.n(); ++i) {
            auto [it, fresh] = d.index_.emplace(d.names_[static_cast<std::size_t>(i)], i);
            (void)it;
            if (!fresh) throw Error("duplicate vertex name: " + d.names_[static_cast<std::size_t>(i)]);
        }
        d.out_.assign(static_cast<std::size_t>(d.n()), VertexSet{});
        d.in_.assign(static_cast<std::size_t>(d.n()), VertexSet{});
        for (const auto& [tn, hn] : edge_pairs) d.add_edge_checked(d.index_of(tn), d.index_of(hn));
        return d;
    }

    /// Index-based builder for graphs derived inside the library.
    static Digraph build_indexed(std::vector<std::string> vertex_names,
                                 const std::vector<std::pair<int, int>>& edge_pairs) {
        Digraph d;
        if (vertex_names.size() > 64) throw Error("digraph exceeds the 64-vertex cap");
        d.names_ = std::move(vertex_names);
        for (int i = 0; i < d.n(); ++i) {
            auto [it, fresh] = d.index_.emplace(d.names_[static_cast<std::size_t>(i)], i);
            (void)it;
            if (!fresh) throw Error("duplicate vertex name: " + d.names_[static_cast<std::size_t>(i)]);
        }
        d.out_.assign(static_cast<std::size_t>(d.n()), VertexSet{});
        d.in_.assign(static_cast<std::size_t>(d.n()), VertexSet{});
        for (auto [t, h] : edge_pairs) d.add_edge_checked(t, h);
        return d;
    }

    int n() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw Error("unknown vertex: " + name);
        return it->second;
    }
    bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }

    VertexSet vertex_set() const { return VertexSet::first_n(n()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int t, int h) const { return out_[static_cast<std::size_t>(t)].contains(h); }
    VertexSet out_neighbours(int v) const { return out_[static_cast<std::size_t>(v)]; }
    VertexSet in_neighbours(int v) const { return in_[static_cast<std::size_t>(v)]; }
    int out_degree(int v) const { return out_[static_cast<std::size_t>(v)].count(); }
    int in_degree(int v) const { return in_[static_cast<std::size_t>(v)].count(); }

    VertexSet set_of(const std::vector<std::string>& names) const {
        VertexSet s;
        for (const auto& nm : names) s.insert(index_of(nm));
        return s;
    }
    std::vector<std::string> names_of(const VertexSet& s) const {
        std::vector<std::string> out;
        for (int v : s) out.push_back(name(v));
        return out;
    }

    /// Strong components of D - removed, ordered by smallest contained index.
    SccPartition strong_components(VertexSet removed = {}) const {
        check_subset(removed);
        SccPartition p;
        p.comp_of.assign(static_cast<std::size_t>(n()), -1);
        VertexSet alive = vertex_set() - removed;
        // Iterative Tarjan over the alive subgraph.
        std::vector<int> idx(static_cast<std::size_t>(n()), -1), low(static_cast<std::size_t>(n()), 0);
        std::vector<bool> on_stack(static_cast<std::size_t>(n()), false);
        std::vector<int> stack;
        int counter = 0;
        struct Frame { int v; std::uint64_t rest; };
        std::vector<Frame> call;
        for (int root : alive) {
            if (idx[static_cast<std::size_t>(root)] != -1) continue;
            call.push_back({root, (out_[static_cast<std::size_t>(root)] & alive).bits()});
            idx[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
            stack.push_back(root);
            on_stack[static_cast<std::size_t>(root)] = true;
            while (!call.empty()) {
                Frame& f = call.back();
                if (f.rest) {
                    int w = std::countr_zero(f.rest);
                    f.rest &= f.rest - 1;
                    if (idx[static_cast<std::size_t>(w)] == -1) {
                        idx[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                        stack.push_back(w);
                        on_stack[static_cast<std::size_t>(w)] = true;
                        call.push_back({w, (out_[static_cast<std::size_t>(w)] & alive).bits()});
                    } else if (on_stack[static_cast<std::size_t>(w)]) {
                        low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], idx[static_cast<std::size_t>(w)]);
                    }
                } else {
                    int v = f.v;
                    call.pop_back();
                    if (!call.empty())
                        low[static_cast<std::size_t>(call.back().v)] = std::min(low[static_cast<std::size_t>(call.back().v)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] == idx[static_cast<std::size_t>(v)]) {
                        VertexSet comp;
                        int w;
                        do {
                            w = stack.back();
                            stack.pop_back();
                            on_stack[static_cast<std::size_t>(w)] = false;
                            comp.insert(w);
                        } while (w != v);
                        p.components.push_back(comp);
                    }
                }
            }
        }
        std::sort(p.components.begin(), p.components.end(),
                  [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
        for (int c = 0; c < p.size(); ++c)
            for (int v : p.components[static_cast<std::size_t>(c)]) p.comp_of[static_cast<std::size_t>(v)] = c;
        return p;
    }

    /// Vertices reachable from `from` by directed paths avoiding `removed`
    /// (the sources themselves included when alive).
    VertexSet reachable_from(VertexSet from, VertexSet removed = {}) const {
        VertexSet alive = vertex_set() - removed;
        VertexSet seen = from & alive, frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= out_[static_cast<std::size_t>(v)];
            frontier = (next & alive) - seen;
            seen |= frontier;
        }
        return seen;
    }

    /// Vertices from which `to` is reachable, avoiding `removed`.
    VertexSet co_reachable(VertexSet to, VertexSet removed = {}) const {
        VertexSet alive = vertex_set() - removed;
        VertexSet seen = to & alive, frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= in_[static_cast<std::size_t>(v)];
            frontier = (next & alive) - seen;
            seen |= frontier;
        }
        return seen;
    }

    bool strongly_connected() const {
        if (n() == 0) return false;
        return strong_components().size() == 1;
    }

    /// True iff some closed walk of D - removed contains both u and w; this is
    /// exactly "u and w lie in one strong component of D - removed", where a
    /// single vertex needs a component of size >= 2 to sit on a closed walk.
    bool closed_walk_through_both(VertexSet removed, int u, int w) const {
        check_subset(removed);
        if (removed.contains(u) || removed.contains(w) || u >= n() || w >= n())
            throw Error("closed_walk_through_both: endpoint removed or out of range");
        SccPartition p = strong_components(removed);
        if (p.comp_of[static_cast<std::size_t>(u)] != p.comp_of[static_cast<std::size_t>(w)]) return false;
        if (u == w) return p.component_containing(u).count() >= 2;
        return true;
    }

    /// Walk in D - guard that starts and ends in A and uses a vertex outside
    /// A (and outside the guard), or nullopt if A is guard-normal.
    std::optional<Walk> normality_violation(VertexSet guard, VertexSet A) const {
        check_subset(guard);
        check_subset(A);
        if (A.intersects(guard)) throw Error("normality_violation: A intersects the guard");
        VertexSet fwd = reachable_from(A, guard);
        VertexSet bwd = co_reachable(A, guard);
        VertexSet outside = (fwd & bwd) - A - guard;
        if (outside.empty()) return std::nullopt;
        int b = outside.min();
        std::vector<int> there = shortest_path_between(A, VertexSet::single(b), guard);
        std::vector<int> back = shortest_path_between(VertexSet::single(b), A, guard);
        Walk w;
        w.vertices = there;
        w.vertices.insert(w.vertices.end(), back.begin() + 1, back.end());
        w.closed = false;
        return w;
    }

    /// (u,v) is butterfly contractible iff it is the only edge with tail u or
    /// the only edge with head v.
    bool butterfly_contractible(int u, int v) const {
        if (!has_edge(u, v)) throw Error("butterfly_contractible: no edge " + name(u) + "->" + name(v));
        return out_degree(u) == 1 || in_degree(v) == 1;
    }

    /// Contracts the butterfly contractible edge (u,v) into a vertex called
    /// merged_name, dropping loops and parallel edges so the result stays
    /// simple. The merged vertex takes the smaller of the two old positions.
    Digraph contract_edge(int u, int v, const std::string& merged_name) const {
        if (!butterfly_contractible(u, v))
            throw Error("contract_edge: edge " + name(u) + "->" + name(v) + " is not butterfly contractible");
        for (int i = 0; i < n(); ++i)
            if (i != u && i != v && names_[static_cast<std::size_t>(i)] == merged_name)
                throw Error("contract_edge: merged name collides with vertex " + merged_name);
        int keep = std::min(u, v), drop = std::max(u, v);
        std::vector<std::string> nm;
        std::vector<int> remap(static_cast<std::size_t>(n()), -1);
        for (int i = 0; i < n(); ++i) {
            if (i == drop) continue;
            remap[static_cast<std::size_t>(i)] = static_cast<int>(nm.size());
            nm.push_back(i == keep ? merged_name : names_[static_cast<std::size_t>(i)]);
        }
        remap[static_cast<std::size_t>(drop)] = remap[static_cast<std::size_t>(keep)];
        std::vector<std::pair<int, int>> ne;
        auto push_unique = [&](int t, int h) {
            if (t == h) return;  // loop created by the contraction
            for (auto [a, b] : ne)
                if (a == t && b == h) return;
            ne.emplace_back(t, h);
        };
        for (auto [t, h] : edges_) {
            if (t == u && h == v) continue;
            push_unique(remap[static_cast<std::size_t>(t)], remap[static_cast<std::size_t>(h)]);
        }
        return build_indexed(std::move(nm), ne);
    }

    /// Subgraph induced on `keep`; vertex order preserved.
    Digraph induced_subgraph(VertexSet keep) const {
        check_subset(keep);
        std::vector<std::string> nm;
        std::vector<int> remap(static_cast<std::size_t>(n()), -1);
        for (int v : keep) {
            remap[static_cast<std::size_t>(v)] = static_cast<int>(nm.size());
            nm.push_back(names_[static_cast<std::size_t>(v)]);
        }
        std::vector<std::pair<int, int>> ne;
        for (auto [t, h] : edges_)
            if (keep.contains(t) && keep.contains(h))
                ne.emplace_back(remap[static_cast<std::size_t>(t)], remap[static_cast<std::size_t>(h)]);
        return build_indexed(std::move(nm), ne);
    }

    Digraph delete_edges(const std::vector<std::pair<int, int>>& drop) const {
        for (auto [t, h] : drop)
            if (!has_edge(t, h)) throw Error("delete_edges: no edge " + name(t) + "->" + name(h));
        std::vector<std::pair<int, int>> ne;
        for (auto [t, h] : edges_) {
            bool dropped = false;
            for (auto [a, b] : drop)
                if (a == t && b == h) { dropped = true; break; }
            if (!dropped) ne.emplace_back(t, h);
        }
        return build_indexed(names_, ne);
    }

    /// Lifts a closed walk of D/(u,v) back to D. `merged` is the index of the
    /// contraction vertex in `contracted`. Every visit of the merged vertex is
    /// replaced by u, v, or the two-step u,v as the neighbouring edges demand.
    Walk lift_closed_walk(int u, int v, const Digraph& contracted, int merged, const Walk& w_prime) const {
        if (!w_prime.closed || w_prime.vertices.size() < 2)
            throw Error("lift_closed_walk: input must be a closed walk with at least one edge");
        if (!w_prime.validate(contracted)) throw Error("lift_closed_walk: input walk invalid");
        bool tail_case = out_degree(u) == 1;  // deg+(u) = 1, the lift always passes v
        auto lift_name = [&](int cv) -> int { return index_of(contracted.name(cv)); };
        std::vector<int> seq = w_prime.vertices;
        bool visits = false;
        for (int cv : seq)
            if (cv == merged) visits = true;
        if (!visits) {
            Walk out;
            for (int cv : seq) out.vertices.push_back(lift_name(cv));
            out.closed = true;
            return out;
        }
        // Rotate so the walk starts (and ends) away from the merged vertex.
        if (seq.front() == merged) {
            seq.pop_back();
            std::size_t shift = 0;
            while (seq[shift] == merged) ++shift;
            std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(shift), seq.end());
            seq.push_back(seq.front());
        }
        std::vector<int> out;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] != merged) {
                out.push_back(lift_name(seq[i]));
                continue;
            }
            int prev = lift_name(seq[i - 1]);
            int next = lift_name(seq[i + 1]);
            if (tail_case) {
                // x's only outgoing role that u can play is via the path u->v.
                if (has_edge(prev, u)) {
                    out.push_back(u);
                    out.push_back(v);
                } else if (has_edge(prev, v)) {
                    out.push_back(v);
                } else {
                    throw Error("lift_closed_walk: walk edge has no preimage");
                }
                if (!has_edge(v, next)) throw Error("lift_closed_walk: walk edge has no preimage");
            } else {
                if (!has_edge(prev, u)) throw Error("lift_closed_walk: walk edge has no preimage");
                out.push_back(u);
                if (has_edge(u, next)) {
                    // done, u alone covers the visit
                } else if (has_edge(u, v) && has_edge(v, next)) {
                    out.push_back(v);
                } else {
                    throw Error("lift_closed_walk: walk edge has no preimage");
                }
            }
        }
        Walk lifted;
        lifted.vertices = std::move(out);
        lifted.closed = true;
        return lifted;
    }

    bool operator==(const Digraph& o) const { return names_ == o.names_ && edge_bits() == o.edge_bits(); }

    /// Set-of-edges fingerprint independent of edge insertion order.
    std::vector<std::uint64_t> edge_bits() const {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n()), 0);
        for (auto [t, h] : edges_) rows[static_cast<std::size_t>(t)] |= std::uint64_t{1} << h;
        return rows;
    }

private:
    Digraph() = default;

    void add_edge_checked(int t, int h) {
        if (t < 0 || t >= n() || h < 0 || h >= n()) throw Error("edge endpoint out of range");
        if (t == h) throw Error("self-loop at " + name(t));
        if (has_edge(t, h)) throw Error("duplicate edge " + name(t) + "->" + name(h));
        out_[static_cast<std::size_t>(t)].insert(h);
        in_[static_cast<std::size_t>(h)].insert(t);
        edges_.emplace_back(t, h);
    }

    void check_subset(VertexSet s) const {
        if (!s.subset_of(vertex_set())) throw Error("vertex set not a subset of V(D)");
    }

    std::vector<int> shortest_path_between(VertexSet from, VertexSet to, VertexSet removed) const {
        VertexSet alive = vertex_set() - removed;
        std::vector<int> parent(static_cast<std::size_t>(n()), -2);
        std::vector<int> queue;
        for (int v : from & alive) {
            parent[static_cast<std::size_t>(v)] = -1;
            queue.push_back(v);
        }
        int goal = -1;
        for (std::size_t qi = 0; qi < queue.size() && goal == -1; ++qi) {
            int v = queue[qi];
            if (to.contains(v)) { goal = v; break; }
            for (int w : out_[static_cast<std::size_t>(v)] & alive) {
                if (parent[static_cast<std::size_t>(w)] != -2) continue;
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
        }
        if (goal == -1) throw Error("internal: no path found");
        std::vector<int> path;
        for (int v = goal; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<VertexSet> out_, in_;
    std::vector<std::pair<int, int>> edges_;
};

inline bool Walk::validate(const Digraph& d) const {
    if (vertices.empty()) return false;
    for (int v : vertices)
        if (v < 0 || v >= d.n()) return false;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!d.has_edge(vertices[i], vertices[i + 1])) return false;
    if (closed && vertices.front() != vertices.back()) return false;
    return true;
}

/// Memoises strong-component partitions of D - X keyed by the removed set.
/// Owned by individual solvers so the Digraph itself stays stateless.
class SccCache {
public:
    explicit SccCache(const Digraph& d) : d_(&d) {}

    const SccPartition& partition(VertexSet removed) {
        auto it = cache_.find(removed.bits());
        if (it != cache_.end()) return it->second;
        return cache_.emplace(removed.bits(), d_->strong_components(removed)).first->second;
    }

    /// Strong component of D - removed containing the (alive) vertex v.
    VertexSet component_of(VertexSet removed, int v) {
        return partition(removed).component_containing(v);
    }

    const Digraph& graph() const { return *d_; }

private:
    const Digraph* d_;
    std::unordered_map<std::uint64_t, SccPartition> cache_;
};

}  // namespace dtw

#endif
