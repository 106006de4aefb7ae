#ifndef DTW_MINORIZE_HPP
#define DTW_MINORIZE_HPP

#include <memory>

#include "dtw/decomp.hpp"
#include "dtw/minors.hpp"

namespace dtw {

/// Carries an NCW0 decomposition along a butterfly-minor witness: restrict to
/// the witness's kept subgraph, then fold the contraction rewrite over the
/// script. The width never increases, which is the closure property of the
/// NCW0 flavor.
inline TreeDecomposition minorize(const TreeDecomposition& T, const MinorWitness& w) {
    if (T.flavor != Flavor::NCW0) throw Error("minorize requires flavor NCW0");
    const Digraph& D = *T.host;
    replay_script(D, w.script);  // a broken script fails here, before any rewriting
    Digraph sub = D.induced_subgraph(D.set_of(w.script.keep_vertices));
    {
        std::vector<std::pair<int, int>> drop;
        for (const auto& [a, b] : w.script.drop_edges) drop.emplace_back(sub.index_of(a), sub.index_of(b));
        sub = sub.delete_edges(drop);
    }
    TreeDecomposition cur = restrict_to_subgraph(T, std::make_shared<const Digraph>(std::move(sub)));
    for (const auto& step : w.script.steps) cur = lift_contraction(cur, step.tail, step.head, step.merged);
    if (!w.rename.empty()) {
        auto renamed = std::make_shared<const Digraph>(apply_rename(*cur.host, w.rename));
        cur.host = renamed;  // bags and guards are index-based, names only shift
    }
    return cur;
}

}  // namespace dtw

#endif
