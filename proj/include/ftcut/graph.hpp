// Immutable weighted graph plus cut arithmetic and the fault-tolerant value.
//
// The graph is templated on the weight scalar: the combinatorial algorithms
// run on WeightedGraph<int64> so every cut identity is bit-exact, while the
// LP pipeline reweights edges into a WeightedGraph<double>.
#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "ftcut/combinatorics.hpp"
#include "ftcut/cut.hpp"
#include "ftcut/errors.hpp"

namespace ftcut {

using Weight = std::int64_t;

template <typename W>
struct WeightedEdge {
    int u = 0;
    int v = 0;
    W w{};

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

template <typename W>
class WeightedGraph {
public:
    using weight_type = W;
    using Edge = WeightedEdge<W>;

    WeightedGraph() = default;

    // Validates and canonicalizes: endpoints distinct and < n, u < v after
    // normalization, edges sorted, no duplicate pair. Integer weights must be
    // >= 1; real weights >= 0 and finite.
    WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw ValidationError("negative vertex count");
        for (auto& e : edges_) {
            if (e.u == e.v) throw ValidationError("self-loop");
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n_) throw ValidationError("edge endpoint out of range");
            if constexpr (std::is_integral_v<W>) {
                if (e.w < 1) throw ValidationError("edge weight below 1");
            } else {
                if (!(e.w >= W{0}) || !std::isfinite(e.w))
                    throw ValidationError("edge weight negative or non-finite");
            }
        }
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
                throw ValidationError("duplicate edge");

        degree_.assign(n_, W{0});
        incident_offsets_.assign(n_ + 1, 0);
        for (const auto& e : edges_) {
            degree_[e.u] += e.w;
            degree_[e.v] += e.w;
            total_weight_ += e.w;
            ++incident_offsets_[e.u + 1];
            ++incident_offsets_[e.v + 1];
        }
        for (int v = 0; v < n_; ++v) incident_offsets_[v + 1] += incident_offsets_[v];
        incident_.resize(edges_.size() * 2);
        std::vector<int> fill(incident_offsets_.begin(), incident_offsets_.end() - 1);
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            incident_[fill[edges_[i].u]++] = i;
            incident_[fill[edges_[i].v]++] = i;
        }
        max_degree_ = n_ == 0 ? W{0} : *std::max_element(degree_.begin(), degree_.end());
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    // Indices of edges incident to v.
    std::span<const int> incident(int v) const {
        return {incident_.data() + incident_offsets_[v],
                incident_.data() + incident_offsets_[v + 1]};
    }

    W degree(int v) const { return degree_[v]; }
    const std::vector<W>& degrees() const { return degree_; }
    W total_weight() const { return total_weight_; }
    W max_degree() const { return max_degree_; }

    bool is_unweighted() const {
        for (const auto& e : edges_)
            if (e.w != W{1}) return false;
        return true;
    }

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> incident_;
    std::vector<int> incident_offsets_{0};
    std::vector<W> degree_;
    W total_weight_{0};
    W max_degree_{0};
};

using Graph = WeightedGraph<Weight>;
using RealGraph = WeightedGraph<double>;

template <typename To, typename From>
WeightedGraph<To> convert_weights(const WeightedGraph<From>& g) {
    std::vector<WeightedEdge<To>> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, static_cast<To>(e.w)});
    return WeightedGraph<To>(g.n(), std::move(edges));
}

namespace detail {
inline void check_dimension(int graph_n, const Cut& s) {
    if (s.n() != graph_n) throw ValidationError("cut dimension does not match graph");
}
template <typename W>
void check_fault_set(const WeightedGraph<W>& g, const FaultSet& f) {
    if (!f.members().empty() && f.members().back() >= g.n())
        throw ValidationError("fault set vertex id out of range");
}
} // namespace detail

// Total weight of edges crossing S.
template <typename W>
W cut_value(const WeightedGraph<W>& g, const Cut& s) {
    detail::check_dimension(g.n(), s);
    W total{0};
    for (const auto& e : g.edges())
        if (s.contains(e.u) != s.contains(e.v)) total += e.w;
    return total;
}

// d_S(v) for every vertex in one pass.
template <typename W>
std::vector<W> crossing_degrees(const WeightedGraph<W>& g, const Cut& s) {
    detail::check_dimension(g.n(), s);
    std::vector<W> d(g.n(), W{0});
    for (const auto& e : g.edges()) {
        if (s.contains(e.u) != s.contains(e.v)) {
            d[e.u] += e.w;
            d[e.v] += e.w;
        }
    }
    return d;
}

template <typename W>
W crossing_degree(const WeightedGraph<W>& g, const Cut& s, int v) {
    detail::check_dimension(g.n(), s);
    if (v < 0 || v >= g.n()) throw ValidationError("vertex id out of range");
    W d{0};
    for (int ei : g.incident(v)) {
        const auto& e = g.edge(ei);
        if (s.contains(e.u) != s.contains(e.v)) d += e.w;
    }
    return d;
}

// d_S(F): weight of crossing edges touching F, each edge counted once even if
// both endpoints lie in F.
template <typename W>
W crossing_degree(const WeightedGraph<W>& g, const Cut& s, const FaultSet& f) {
    detail::check_dimension(g.n(), s);
    detail::check_fault_set(g, f);
    W d{0};
    std::vector<int> seen;
    for (int v : f.members()) {
        for (int ei : g.incident(v)) {
            const auto& e = g.edge(ei);
            if (s.contains(e.u) != s.contains(e.v)) {
                // Edges inside F show up from both endpoints; count from the
                // smaller one only.
                if (e.u != v && f.contains(e.u)) continue;
                d += e.w;
            }
        }
    }
    return d;
}

// d(F): weight of all edges adjacent to F.
template <typename W>
W fault_degree(const WeightedGraph<W>& g, const FaultSet& f) {
    detail::check_fault_set(g, f);
    W d{0};
    for (int v : f.members()) {
        for (int ei : g.incident(v)) {
            const auto& e = g.edge(ei);
            if (e.u != v && f.contains(e.u)) continue;
            d += e.w;
        }
    }
    return d;
}

// Delta_k = max_{|F|=k} d(F), by direct enumeration.
template <typename W>
W max_fault_degree(const WeightedGraph<W>& g, int k) {
    if (k < 0 || k > g.n()) throw ValidationError("fault budget out of range");
    W best{0};
    for_each_combination(g.n(), k, [&](const std::vector<int>& ids) {
        W d = fault_degree(g, FaultSet(ids));
        if (d > best) best = d;
    });
    return best;
}

template <typename W>
struct FtWitness {
    W value{};
    FaultSet worst;
};

// phi(S,k,G) = min_{|F|=k} C_{S-F,G-F} = C_S - max_F d_S(F), with the
// lexicographically smallest maximizing F as witness. Direct enumeration of
// all fault sets; intended regime k <= 3, n <= 64.
template <typename W>
FtWitness<W> ft_value_witness(const WeightedGraph<W>& g, const Cut& s, int k) {
    detail::check_dimension(g.n(), s);
    if (k < 0 || k > g.n()) throw ValidationError("fault budget out of range");
    const W c = cut_value(g, s);
    if (k == 0) return {c, FaultSet{}};
    if (k == 1) {
        auto d = crossing_degrees(g, s);
        int arg = 0;
        for (int v = 1; v < g.n(); ++v)
            if (d[v] > d[arg]) arg = v;
        return {c - d[arg], FaultSet({arg})};
    }
    W worst_removed{0};
    std::vector<int> worst = {};
    bool first = true;
    for_each_combination(g.n(), k, [&](const std::vector<int>& ids) {
        W d = crossing_degree(g, s, FaultSet(ids));
        if (first || d > worst_removed) {
            worst_removed = d;
            worst = ids;
            first = false;
        }
    });
    return {c - worst_removed, FaultSet(std::move(worst))};
}

template <typename W>
W ft_value(const WeightedGraph<W>& g, const Cut& s, int k) {
    return ft_value_witness(g, s, k).value;
}

// G_{not F}: same vertex set, edges touching F deleted.
template <typename W>
WeightedGraph<W> masked_graph(const WeightedGraph<W>& g, const FaultSet& f) {
    detail::check_fault_set(g, f);
    std::vector<WeightedEdge<W>> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        if (!f.contains(e.u) && !f.contains(e.v)) edges.push_back(e);
    return WeightedGraph<W>(g.n(), std::move(edges));
}

// --- graph file format -------------------------------------------------
//
// Line-oriented text: optional header "p <n> <m>", then one edge per line
// "u v [w]" with 0-indexed ids and w defaulting to 1; '#' starts a comment.

inline Graph load_graph(std::string_view text) {
    std::vector<WeightedEdge<Weight>> edges;
    long declared_n = -1, declared_m = -1;
    int max_id = -1;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string_view> tok;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) tok.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tok.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        auto parse_int = [&](std::string_view t) -> long {
            long value = 0;
            auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
            if (ec != std::errc{} || p != t.data() + t.size())
                throw ValidationError("parse error at line " + std::to_string(line_no));
            return value;
        };
        if (tok[0] == "p") {
            if (declared_n >= 0 || !edges.empty() || tok.size() != 3)
                throw ValidationError("parse error at line " + std::to_string(line_no) +
                                      ": misplaced or malformed header");
            declared_n = parse_int(tok[1]);
            declared_m = parse_int(tok[2]);
            if (declared_n < 0 || declared_m < 0)
                throw ValidationError("parse error at line " + std::to_string(line_no));
            continue;
        }
        if (tok.size() != 2 && tok.size() != 3)
            throw ValidationError("parse error at line " + std::to_string(line_no));
        long u = parse_int(tok[0]);
        long v = parse_int(tok[1]);
        long w = tok.size() == 3 ? parse_int(tok[2]) : 1;
        if (u < 0 || v < 0) throw ValidationError("negative vertex id at line " + std::to_string(line_no));
        edges.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<Weight>(w)});
        max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
    }
    long n = declared_n >= 0 ? declared_n : max_id + 1;
    if (declared_m >= 0 && declared_m != static_cast<long>(edges.size()))
        throw ValidationError("header edge count does not match edge lines");
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return out.str();
}

} // namespace ftcut
