// Shared fixtures, random-instance helpers, and the independent brute-force
// oracles the property suites compare against.
#pragma once

#include <algorithm>
#include <vector>

#include "ftcut/graph.hpp"
#include "ftcut/instances.hpp"

namespace testutil {

using namespace ftcut;

// Two triangles sharing vertex 0.
inline Graph two_triangles() {
    return load_graph("p 5 6\n0 1 1\n1 2 1\n0 2 1\n0 3 1\n3 4 1\n0 4 1");
}

// Path 0-1-2-3-4 with leaf 5 on vertex 3.
inline Graph path_with_leaf() { return generate(PathLeaf{}); }

inline Graph triangle() { return generate(CycleSpec{3}); }
inline Graph c4() { return generate(CycleSpec{4}); }
inline Graph single_edge() { return Graph(2, {{0, 1, 1}}); }
inline Graph star(int leaves) { return generate(StarSpec{leaves}); }

// Cut from 1-indexed vertex labels, handy for values worked out on 1-indexed
// drawings of the fixtures.
inline Cut cut_1idx(int n, std::initializer_list<int> ids_1indexed) {
    Cut s(n);
    for (int id : ids_1indexed) s.set(id - 1, true);
    return s;
}

// G(n,p) without a connectivity guarantee; weights all 1.
inline Graph random_graph(Rng& rng, int n, double p) {
    std::vector<WeightedEdge<Weight>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.push_back({u, v, 1});
    return Graph(n, std::move(edges));
}

inline Graph random_weighted_graph(Rng& rng, int n, double p, Weight max_w) {
    std::vector<WeightedEdge<Weight>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                edges.push_back({u, v, 1 + static_cast<Weight>(rng.below(max_w))});
    return Graph(n, std::move(edges));
}

inline Cut random_cut(Rng& rng, int n) {
    Cut s(n);
    for (int v = 0; v < n; ++v)
        if (rng.coin()) s.set(v, true);
    return s;
}

template <typename Fn>
void for_each_cut(int n, Fn&& fn) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        fn(Cut::from_mask(n, mask));
}

// Independent phi oracle: physically deletes the fault set (reindexing the
// survivors) and re-evaluates the cut, instead of using C_S - d_S(F).
inline Weight phi_by_deletion(const Graph& g, const Cut& s, int k) {
    Weight best = 0;
    bool first = true;
    for_each_combination(g.n(), k, [&](const std::vector<int>& ids) {
        FaultSet f(ids);
        std::vector<int> new_id(g.n(), -1);
        int next = 0;
        for (int v = 0; v < g.n(); ++v)
            if (!f.contains(v)) new_id[v] = next++;
        std::vector<WeightedEdge<Weight>> edges;
        for (const auto& e : g.edges())
            if (!f.contains(e.u) && !f.contains(e.v))
                edges.push_back({new_id[e.u], new_id[e.v], e.w});
        Graph sub(next, std::move(edges));
        Cut mapped(next);
        for (int v = 0; v < g.n(); ++v)
            if (new_id[v] >= 0 && s.contains(v)) mapped.set(new_id[v], true);
        Weight value = cut_value(sub, mapped);
        if (first || value < best) {
            best = value;
            first = false;
        }
    });
    if (first) return cut_value(g, s); // k == 0
    return best;
}

} // namespace testutil
