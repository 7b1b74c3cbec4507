#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "gsleaf/graph.hpp"
#include "gsleaf/metrics.hpp"
#include "gsleaf/search.hpp"

namespace gsleaf {

/// Articulation vertices of a connected graph (lowpoint DFS, iterative).
inline std::vector<int> cut_vertices(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    if (!is_connected(g)) throw Error("cut vertices undefined: graph is disconnected");
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<size_t>(n), false);
    int root_children = 0;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        size_t next_edge;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0});
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_edge < g.neighbors(f.v).size()) {
            int w = g.neighbors(f.v)[f.next_edge++];
            if (w == f.parent) continue;  // simple graph: the parent edge occurs once
            if (disc[static_cast<size_t>(w)] != -1) {
                low[static_cast<size_t>(f.v)] =
                    std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
            } else {
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                if (f.v == 0) ++root_children;
                stack.push_back({w, f.v, 0});
            }
        } else {
            int v = f.v, parent = f.parent;
            stack.pop_back();
            if (parent >= 0) {
                low[static_cast<size_t>(parent)] =
                    std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
                if (parent != 0 && low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(parent)])
                    is_cut[static_cast<size_t>(parent)] = true;
            }
        }
    }
    if (root_children >= 2) is_cut[0] = true;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

inline bool is_cut_vertex(const Graph& g, int v) {
    auto cuts = cut_vertices(g);
    return std::binary_search(cuts.begin(), cuts.end(), v);
}

/// True iff N(v) is a clique.
inline bool is_simplicial(const Graph& g, int v) {
    const auto& nbrs = g.neighbors(v);
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.has_edge(nbrs[i], nbrs[j])) return false;
    return true;
}

/// Some nonadjacent pair inside N(v), if one exists.
inline std::optional<std::pair<int, int>> nonadjacent_neighbor_pair(const Graph& g, int v) {
    const auto& nbrs = g.neighbors(v);
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.has_edge(nbrs[i], nbrs[j])) return std::make_pair(nbrs[i], nbrs[j]);
    return std::nullopt;
}

/// Perfect elimination ordering test: every vertex's earlier neighbors must
/// form a clique.
inline bool is_peo(const Graph& g, const Ordering& sigma) {
    if (sigma.size() != g.vertex_count()) return false;
    std::vector<int> left;
    for (int i = 1; i <= sigma.size(); ++i) {
        int v = sigma.at(i);
        left.clear();
        for (int w : g.neighbors(v))
            if (sigma.position(w) < i) left.push_back(w);
        for (size_t a = 0; a < left.size(); ++a)
            for (size_t b = a + 1; b < left.size(); ++b)
                if (!g.has_edge(left[a], left[b])) return false;
    }
    return true;
}

/// Chordality via one LBFS sweep: the sweep's output is a perfect
/// elimination ordering exactly when the graph is chordal. Accepts
/// disconnected graphs (the sweep finishes each component before moving on).
inline bool is_chordal(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    Ordering sigma = detail::run_search_core(g, SearchKind::LBFS,
                                             [](const std::vector<int>& elig) { return elig.front(); });
    return is_peo(g, sigma);
}

/// Two-colorability, all components.
inline bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        queue.clear();
        queue.push_back(s);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = color[static_cast<size_t>(u)] ^ 1;
                    queue.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Split partition (clique side C, independent side I) via the degree
/// sequence criterion: with degrees d1 >= ... >= dn and h the largest i with
/// d_i >= i-1, the graph is split iff sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i,
/// in which case the h highest-degree vertices form the clique. The extracted
/// partition is verified before returning.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> split_partition(
    const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> by_degree(static_cast<size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int h = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(by_degree[static_cast<size_t>(i - 1)]) >= i - 1) h = i;
    long long lhs = 0, rhs = static_cast<long long>(h) * (h - 1);
    for (int i = 0; i < n; ++i) {
        if (i < h)
            lhs += g.degree(by_degree[static_cast<size_t>(i)]);
        else
            rhs += g.degree(by_degree[static_cast<size_t>(i)]);
    }
    if (lhs != rhs) return std::nullopt;
    std::vector<int> clique(by_degree.begin(), by_degree.begin() + h);
    std::vector<int> independent(by_degree.begin() + h, by_degree.end());
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(clique[i], clique[j])) return std::nullopt;
    for (size_t i = 0; i < independent.size(); ++i)
        for (size_t j = i + 1; j < independent.size(); ++j)
            if (g.has_edge(independent[i], independent[j])) return std::nullopt;
    std::sort(clique.begin(), clique.end());
    std::sort(independent.begin(), independent.end());
    return std::make_pair(std::move(clique), std::move(independent));
}

inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }

}  // namespace gsleaf
