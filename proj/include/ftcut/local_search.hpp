// k-greedy stabilization and the combinatorial single-fault local search.
//
// Both routines are restricted to unweighted graphs; every threshold the
// analysis relies on ((d(v)-k)/2, d(v)/2, (m-Delta)/2) is compared as a
// doubled integer, never as a float.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftcut/graph.hpp"
#include "ftcut/rational.hpp"

namespace ftcut {

enum class StepKind { Type0, Type1, BuildUp, Type2 };

inline const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Type0: return "type-0";
        case StepKind::Type1: return "type-1";
        case StepKind::BuildUp: return "build-up";
        case StepKind::Type2: return "type-2";
    }
    return "?";
}

struct Step {
    StepKind kind;
    int vertex;
    Weight cut_value; // after the move
    Weight ft_value;  // after the move (k = 1 inside the local search)
};

using StepTrace = std::vector<Step>;

// Excess x_S(v) = d_S(v) - d(v)/2 as an exact half-integer.
inline Rat excess(const Graph& g, const Cut& s, int v) {
    return Rat(2 * crossing_degree(g, s, v) - g.degree(v), 2);
}

namespace detail {
inline void require_unweighted(const Graph& g, const char* what) {
    if (!g.is_unweighted())
        throw ValidationError(std::string(what) + ": weighted input rejected");
}

// phi(S,1) = C_S - max_v d_S(v), the single-fault fast path.
inline Weight phi_single(const Graph& g, const Cut& s) {
    Weight c = 0;
    std::vector<Weight> deg(g.n(), 0);
    for (const auto& e : g.edges()) {
        if (s.contains(e.u) != s.contains(e.v)) {
            c += e.w;
            deg[e.u] += e.w;
            deg[e.v] += e.w;
        }
    }
    Weight worst = 0;
    for (Weight d : deg)
        if (d > worst) worst = d;
    return c - worst;
}
} // namespace detail

// All v with C_{S-v,G-v} = phi(S,1), i.e. the crossing-degree maximizers.
inline std::vector<int> critical_vertices(const Graph& g, const Cut& s) {
    auto deg = crossing_degrees(g, s);
    Weight worst = 0;
    for (Weight d : deg)
        if (d > worst) worst = d;
    std::vector<int> crit;
    for (int v = 0; v < g.n(); ++v)
        if (deg[v] == worst) crit.push_back(v);
    return crit;
}

// Repeatedly applies a k-greedy step (vertex with d_S(v) <= (d(v)-k)/2) until
// the cut is k-stable. Scan order is ascending id, restarting after each move.
// The optional trace records every move as a type-1 step.
inline Cut stabilize_cut(const Graph& g, Cut s, int k, StepTrace* trace = nullptr) {
    detail::require_unweighted(g, "stabilize_cut");
    if (k < 0 || k > g.n()) throw ValidationError("stabilize_cut: fault budget out of range");
    detail::check_dimension(g.n(), s);
    auto deg = crossing_degrees(g, s);
    for (;;) {
        bool moved = false;
        for (int v = 0; v < g.n(); ++v) {
            if (2 * deg[v] <= g.degree(v) - k) {
                s.toggle(v);
                deg = crossing_degrees(g, s);
                if (trace)
                    trace->push_back({StepKind::Type1, v, cut_value(g, s), ft_value(g, s, k)});
                moved = true;
                break;
            }
        }
        if (!moved) return s;
    }
}

inline bool is_k_stable(const Graph& g, const Cut& s, int k) {
    auto deg = crossing_degrees(g, s);
    for (int v = 0; v < g.n(); ++v)
        if (2 * deg[v] <= g.degree(v) - k) return false;
    return true;
}

struct LocalSearchResult {
    Cut cut;
    StepTrace trace;
};

// Combinatorial 1/2-approximation for a single fault.
//
// For Delta <= 2 a stable cut suffices. Otherwise, starting from the empty
// cut, repeat until phi(S) >= (m-Delta)/2, each iteration taking the first
// applicable step in priority order:
//   type-0:   some flip reaches the target outright;
//   type-1:   a greedy step (d_S(v) < d(v)/2);
//   build-up: a neutral flip (d_S(v) = d(v)/2) that keeps phi and enables a
//             type-1 step;
//   type-2:   a neutral flip that strictly increases phi (always exists here).
// Within a step kind the smallest qualifying vertex id is taken.
inline LocalSearchResult local_search_single_fault(const Graph& g) {
    detail::require_unweighted(g, "local_search_single_fault");
    const Weight m = g.total_weight();
    const Weight delta = g.max_degree();

    LocalSearchResult result{Cut(g.n()), {}};
    if (delta <= 2) {
        result.cut = stabilize_cut(g, Cut(g.n()), 1, &result.trace);
        return result;
    }

    Cut s(g.n());
    const Weight target_twice = m - delta; // phi target is (m-Delta)/2
    const std::size_t iteration_bound = static_cast<std::size_t>(4 * m + 2);

    auto phi = [&](const Cut& c) { return detail::phi_single(g, c); };

    while (2 * phi(s) < target_twice) {
        if (result.trace.size() >= iteration_bound)
            throw std::logic_error(
                "local_search_single_fault: exceeded the 4m+2 iteration bound");
        auto deg = crossing_degrees(g, s);
        int chosen = -1;
        StepKind kind{};

        for (int v = 0; v < g.n() && chosen < 0; ++v)
            if (2 * phi(flip(s, v)) >= target_twice) {
                chosen = v;
                kind = StepKind::Type0;
            }
        if (chosen < 0) {
            for (int v = 0; v < g.n() && chosen < 0; ++v)
                if (2 * deg[v] < g.degree(v)) {
                    chosen = v;
                    kind = StepKind::Type1;
                }
        }
        const Weight phi_now = phi(s);
        if (chosen < 0) {
            for (int v = 0; v < g.n() && chosen < 0; ++v) {
                if (2 * deg[v] != g.degree(v)) continue;
                Cut moved = flip(s, v);
                if (phi(moved) < phi_now) continue;
                auto moved_deg = crossing_degrees(g, moved);
                for (int w = 0; w < g.n(); ++w) {
                    if (2 * moved_deg[w] < g.degree(w)) {
                        chosen = v;
                        kind = StepKind::BuildUp;
                        break;
                    }
                }
            }
        }
        if (chosen < 0) {
            for (int v = 0; v < g.n() && chosen < 0; ++v)
                if (2 * deg[v] == g.degree(v) && phi(flip(s, v)) > phi_now) {
                    chosen = v;
                    kind = StepKind::Type2;
                }
        }
        if (chosen < 0)
            throw std::logic_error(
                "local_search_single_fault: no applicable step below the target; "
                "a stable cut this poor must admit a neutral improving move");

        s.toggle(chosen);
        result.trace.push_back({kind, chosen, cut_value(g, s), phi(s)});
    }
    result.cut = s;
    return result;
}

} // namespace ftcut
