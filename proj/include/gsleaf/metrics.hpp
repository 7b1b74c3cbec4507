#pragma once

#include <vector>

#include "gsleaf/graph.hpp"

namespace gsleaf {

/// BFS layer structure from a source vertex. depth[v] is the edge distance
/// from the source, or `unreachable` (-1) when no path exists.
struct Layers {
    static constexpr int unreachable = -1;
    int source = 0;
    std::vector<int> depth;

    bool reachable(int v) const { return depth[static_cast<size_t>(v)] != unreachable; }
    int max_depth() const {
        int d = 0;
        for (int x : depth)
            if (x > d) d = x;
        return d;
    }
    std::vector<int> layer(int ell) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(depth.size()); ++v)
            if (depth[static_cast<size_t>(v)] == ell) out.push_back(v);
        return out;
    }
};

namespace detail {

/// One BFS distance row. `skip` (if >= 0) is treated as deleted, giving
/// distances in G - skip. `ops`, when non-null, accumulates dequeues and
/// scanned adjacency entries (used for the per-query cost accounting).
inline std::vector<int> bfs_row(const Graph& g, int src, int skip = -1,
                                long long* ops = nullptr) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), Layers::unreachable);
    if (src == skip) return dist;
    std::vector<int> queue;
    queue.reserve(static_cast<size_t>(g.vertex_count()));
    dist[static_cast<size_t>(src)] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (ops) ++*ops;
        for (int w : g.neighbors(u)) {
            if (ops) ++*ops;
            if (w == skip || dist[static_cast<size_t>(w)] != Layers::unreachable) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

}  // namespace detail

inline Layers layers_from(const Graph& g, int r) {
    if (r < 0 || r >= g.vertex_count()) throw Error("layers_from: vertex out of range");
    return Layers{r, detail::bfs_row(g, r)};
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto row = detail::bfs_row(g, 0);
    for (int d : row)
        if (d == Layers::unreachable) return false;
    return true;
}

/// Per-vertex eccentricities plus diameter, radius, and a central vertex.
/// Defined for connected graphs only.
struct Metrics {
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;
    int center = 0;  // some vertex attaining the radius
};

inline Metrics graph_metrics(const Graph& g) {
    if (g.vertex_count() == 0) throw Error("metrics undefined: empty graph");
    if (!is_connected(g)) throw Error("metrics undefined: graph is disconnected");
    Metrics m;
    m.ecc.resize(static_cast<size_t>(g.vertex_count()));
    m.radius = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto row = detail::bfs_row(g, v);
        int e = 0;
        for (int d : row)
            if (d > e) e = d;
        m.ecc[static_cast<size_t>(v)] = e;
        if (e > m.diameter) m.diameter = e;
        if (e < m.radius) {
            m.radius = e;
            m.center = v;
        }
    }
    return m;
}

inline int eccentricity(const Graph& g, int v) {
    auto row = detail::bfs_row(g, v);
    int e = 0;
    for (int d : row) {
        if (d == Layers::unreachable) throw Error("metrics undefined: graph is disconnected");
        if (d > e) e = d;
    }
    return e;
}

}  // namespace gsleaf
