#ifndef DTW_ISO_HPP
#define DTW_ISO_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "dtw/digraph.hpp"

namespace dtw {

namespace detail {

/// Iterated degree refinement over both graphs at once, so equal colours
/// mean equal signatures across the pair; unequal colours rule a
/// correspondence out.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> refine_pair(const Digraph& a,
                                                                                     const Digraph& b,
                                                                                     int rounds = 3) {
    auto initial = [](const Digraph& d) {
        std::vector<std::uint32_t> col(static_cast<std::size_t>(d.n()));
        for (int v = 0; v < d.n(); ++v)
            col[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(d.out_degree(v) * 64 + d.in_degree(v));
        return col;
    };
    std::vector<std::uint32_t> ca = initial(a), cb = initial(b);
    for (int r = 0; r < rounds; ++r) {
        auto signature = [](const Digraph& d, const std::vector<std::uint32_t>& col, int v) {
            std::vector<std::uint32_t> s{col[static_cast<std::size_t>(v)], 0xffffffffu};
            std::vector<std::uint32_t> outs, ins;
            for (int w : d.out_neighbours(v)) outs.push_back(col[static_cast<std::size_t>(w)]);
            for (int w : d.in_neighbours(v)) ins.push_back(col[static_cast<std::size_t>(w)]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            s.insert(s.end(), outs.begin(), outs.end());
            s.push_back(0xfffffffeu);
            s.insert(s.end(), ins.begin(), ins.end());
            return s;
        };
        std::map<std::vector<std::uint32_t>, std::uint32_t> dict;
        auto assign = [&](const Digraph& d, std::vector<std::uint32_t>& col) {
            std::vector<std::uint32_t> next(col.size());
            for (int v = 0; v < d.n(); ++v) {
                auto [it, fresh] = dict.emplace(signature(d, col, v), static_cast<std::uint32_t>(dict.size()));
                (void)fresh;
                next[static_cast<std::size_t>(v)] = it->second;
            }
            return next;
        };
        // signatures of both graphs feed one shared dictionary
        std::vector<std::uint32_t> na = assign(a, ca);
        std::vector<std::uint32_t> nb = assign(b, cb);
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {ca, cb};
}

inline bool extend_mapping(const Digraph& a, const Digraph& b, const std::vector<std::uint32_t>& ca,
                           const std::vector<std::uint32_t>& cb, std::vector<int>& order, std::size_t pos,
                           std::vector<int>& map, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < b.n(); ++w) {
        if (used[static_cast<std::size_t>(w)] || ca[static_cast<std::size_t>(v)] != cb[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pos && ok; ++i) {
            int u = order[i], x = map[static_cast<std::size_t>(u)];
            if (a.has_edge(v, u) != b.has_edge(w, x)) ok = false;
            if (a.has_edge(u, v) != b.has_edge(x, w)) ok = false;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = true;
        if (extend_mapping(a, b, ca, cb, order, pos + 1, map, used)) return true;
        used[static_cast<std::size_t>(w)] = false;
        map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

}  // namespace detail

/// Vertex bijection a -> b preserving edges, or nullopt. Vertex names carry no
/// meaning here; this is pure structure.
inline std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (a.n() == 0) return std::vector<int>{};
    auto [ca, cb] = detail::refine_pair(a, b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    // Most constrained first: rare colours early.
    std::map<std::uint32_t, int> count;
    for (auto c : ca) count[c]++;
    std::vector<int> order(static_cast<std::size_t>(a.n()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int cx = count[ca[static_cast<std::size_t>(x)]], cy = count[ca[static_cast<std::size_t>(y)]];
        if (cx != cy) return cx < cy;
        return x < y;
    });
    std::vector<int> map(static_cast<std::size_t>(a.n()), -1);
    std::vector<bool> used(static_cast<std::size_t>(b.n()), false);
    if (detail::extend_mapping(a, b, ca, cb, order, 0, map, used)) return map;
    return std::nullopt;
}

inline bool are_isomorphic(const Digraph& a, const Digraph& b) { return find_isomorphism(a, b).has_value(); }

/// Canonical adjacency key for graphs with at most 8 vertices: the minimum
/// row-major adjacency bitmask over all vertex orderings. Keys are only
/// comparable among graphs with the same vertex count.
inline std::uint64_t canonical_key8(const Digraph& d) {
    int n = d.n();
    if (n > 8) throw Error("canonical_key8 works for n <= 8 only");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t key = 0;
        for (auto [t, h] : d.edges())
            key |= std::uint64_t{1}
                   << (perm[static_cast<std::size_t>(t)] * n + perm[static_cast<std::size_t>(h)]);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace dtw

#endif
