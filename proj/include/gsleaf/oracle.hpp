#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gsleaf/classify.hpp"
#include "gsleaf/gadget.hpp"
#include "gsleaf/graph.hpp"
#include "gsleaf/leaf.hpp"
#include "gsleaf/metrics.hpp"
#include "gsleaf/search.hpp"
#include "gsleaf/tree.hpp"

namespace gsleaf {

// ---------------------------------------------------------------------------
// Exhaustive leaf sets of one search on one graph
// ---------------------------------------------------------------------------

/// Vertex sets (as bitmasks over ids) of positive answers across all
/// orderings of one search, plus the end-vertex set and the ordering count.
struct LeafSets {
    uint32_t f_root = 0;
    uint32_t f_branch = 0;
    uint32_t l_root = 0;
    uint32_t l_branch = 0;
    uint32_t end_vertex = 0;
    long long orderings = 0;

    uint32_t f_any() const { return f_root | f_branch; }
    uint32_t l_any() const { return l_root | l_branch; }
};

struct LeafSetsOptions {
    std::optional<int> start;
    int cap = kDefaultExhaustiveCap;
    bool record_witnesses = false;
    /// Called after each ordering; return true to stop early. With no
    /// stop predicate the enumeration is exhaustive and `orderings` counts
    /// every ordering of the kind.
    std::function<bool(const LeafSets&)> stop;
};

struct LeafSetsResult {
    LeafSets sets;
    // first witnessing ordering per vertex per role (only when recorded)
    std::vector<std::optional<Ordering>> f_root_witness, f_branch_witness, l_root_witness,
        l_branch_witness, end_witness;
};

/// Enumerates every kind-ordering, reading off root/branch leaves of both
/// tree flavors and the end-vertex. Parents and child counts come straight
/// from the enumeration engine's incremental bookkeeping.
inline LeafSetsResult leaf_sets(const Graph& g, SearchKind kind, const LeafSetsOptions& opt = {}) {
    int n = g.vertex_count();
    if (n > opt.cap)
        throw Error("oracle cap exceeded: n=" + std::to_string(n) + " > cap=" +
                    std::to_string(opt.cap));
    if (n > 31) throw Error("oracle supports at most 31 vertices");
    LeafSetsResult res;
    if (opt.record_witnesses) {
        res.f_root_witness.resize(static_cast<size_t>(n));
        res.f_branch_witness.resize(static_cast<size_t>(n));
        res.l_root_witness.resize(static_cast<size_t>(n));
        res.l_branch_witness.resize(static_cast<size_t>(n));
        res.end_witness.resize(static_cast<size_t>(n));
    }
    detail::SearchEngine engine(g, kind);
    detail::EnumerateRawOptions raw{opt.start, -1};
    detail::enumerate_raw(engine, raw, [&](detail::SearchEngine& e) {
        LeafSets& s = res.sets;
        ++s.orderings;
        int root = e.order().front();
        int last = e.order().back();
        auto mark = [&](uint32_t& set, std::vector<std::optional<Ordering>>& wit, int v) {
            uint32_t bit = uint32_t{1} << v;
            if (!(set & bit)) {
                set |= bit;
                if (opt.record_witnesses) wit[static_cast<size_t>(v)] = Ordering(e.order());
            }
        };
        for (int v = 0; v < n; ++v) {
            if (v == root) {
                if (e.f_children(v) == 1) mark(s.f_root, res.f_root_witness, v);
                if (e.l_children(v) == 1) mark(s.l_root, res.l_root_witness, v);
            } else {
                if (e.f_children(v) == 0) mark(s.f_branch, res.f_branch_witness, v);
                if (e.l_children(v) == 0) mark(s.l_branch, res.l_branch_witness, v);
            }
        }
        mark(s.end_vertex, res.end_witness, last);
        return !(opt.stop && opt.stop(s));
    });
    return res;
}

// ---------------------------------------------------------------------------
// Graph corpora
// ---------------------------------------------------------------------------

enum class GraphClass { Any, Chordal, Bipartite, Split };

inline std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Any: return "any";
        case GraphClass::Chordal: return "chordal";
        case GraphClass::Bipartite: return "bipartite";
        case GraphClass::Split: return "split";
    }
    return "?";
}

inline std::optional<GraphClass> graph_class_from_string(const std::string& s) {
    if (s == "any") return GraphClass::Any;
    if (s == "chordal") return GraphClass::Chordal;
    if (s == "bipartite") return GraphClass::Bipartite;
    if (s == "split") return GraphClass::Split;
    return std::nullopt;
}

inline bool in_graph_class(const Graph& g, GraphClass c) {
    switch (c) {
        case GraphClass::Any: return true;
        case GraphClass::Chordal: return is_chordal(g);
        case GraphClass::Bipartite: return is_bipartite(g);
        case GraphClass::Split: return is_split(g);
    }
    return false;
}

/// Streams every connected labeled graph on exactly n vertices, in
/// ascending edge-mask order. Returns the number visited; the visitor
/// returns false to stop.
inline long long for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > 7) throw Error("exhaustive corpus supports 1 <= n <= 7");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    int p = static_cast<int>(pairs.size());
    long long count = 0;
    std::vector<std::pair<int, int>> edges;
    for (uint32_t mask = 0; mask < (uint32_t{1} << p); ++mask) {
        // cheap connectivity prefilter on adjacency bitmasks
        std::array<uint8_t, 7> nb{};
        for (int b = 0; b < p; ++b)
            if (mask >> b & 1) {
                nb[static_cast<size_t>(pairs[static_cast<size_t>(b)].first)] |=
                    uint8_t(1 << pairs[static_cast<size_t>(b)].second);
                nb[static_cast<size_t>(pairs[static_cast<size_t>(b)].second)] |=
                    uint8_t(1 << pairs[static_cast<size_t>(b)].first);
            }
        uint8_t reach = 1, prev = 0;
        while (reach != prev) {
            prev = reach;
            for (int v = 0; v < n; ++v)
                if (reach >> v & 1) reach |= nb[static_cast<size_t>(v)];
        }
        if (reach != (1u << n) - 1) continue;
        edges.clear();
        for (int b = 0; b < p; ++b)
            if (mask >> b & 1) edges.push_back(pairs[static_cast<size_t>(b)]);
        ++count;
        if (!visit(Graph::from_edges(n, edges))) break;
    }
    return count;
}

/// Seeded stream of connected G(n, edge_prob) samples.
inline long long for_each_random_connected_graph(int n, int count, uint64_t seed,
                                                 double edge_prob,
                                                 const std::function<bool(const Graph&)>& visit) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    long long produced = 0;
    long long attempts = 0;
    const long long max_attempts = 10000LL * (count + 1);
    std::vector<std::pair<int, int>> edges;
    while (produced < count) {
        if (++attempts > max_attempts)
            throw Error("random corpus: too many disconnected samples; raise edge probability");
        edges.clear();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        ++produced;
        if (!visit(g)) break;
    }
    return produced;
}

// ---------------------------------------------------------------------------
// Theorem certification
// ---------------------------------------------------------------------------

struct CertifyOptions {
    int nmax = 5;
    GraphClass cls = GraphClass::Any;  // composed with the check's own class
    int samples = 0;                   // 0 = exhaustive corpus; else seeded random
    uint64_t seed = 0;
    double edge_prob = 0.5;
    int cap = kDefaultExhaustiveCap;
};

struct Counterexample {
    int n = 0;
    std::string edges;   // edge-list text
    std::string detail;  // what disagreed
};

struct CertifyReport {
    std::string id;
    std::string description;
    GraphClass graph_class = GraphClass::Any;
    long long graphs = 0;
    long long checks = 0;  // vertex-level comparisons
    bool pass = true;
    std::optional<Counterexample> counterexample;
};

namespace detail {

inline uint32_t full_mask(int n) { return n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1; }

inline std::string describe_mask(const Graph& g, uint32_t mask) {
    std::string out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mask >> v & 1) {
            if (!out.empty()) out += ",";
            out += g.name_of(v);
        }
    return out.empty() ? "-" : out;
}

/// Exhaustive set-vs-predicate comparison with sound early exits: stop as
/// soon as a vertex outside `expected` is witnessed (violation), or once
/// every vertex is witnessed and `expected` is the full set (success).
inline std::optional<std::string> check_leaf_set(const Graph& g, SearchKind kind,
                                                 uint32_t expected,
                                                 uint32_t (*select)(const LeafSets&), int cap,
                                                 const char* what) {
    uint32_t full = full_mask(g.vertex_count());
    LeafSetsOptions opt;
    opt.cap = cap;
    opt.stop = [&](const LeafSets& s) {
        uint32_t got = select(s);
        if (got & ~expected) return true;                  // violation found
        return expected == full && got == full;            // nothing left to prove
    };
    LeafSets s = leaf_sets(g, kind, opt).sets;
    uint32_t got = select(s);
    if (got == expected) return std::nullopt;
    return std::string(what) + " mismatch for " + to_string(kind) + ": oracle={" +
           describe_mask(g, got) + "} expected={" + describe_mask(g, expected) + "}";
}

inline uint32_t select_f_root(const LeafSets& s) { return s.f_root; }
inline uint32_t select_f_branch(const LeafSets& s) { return s.f_branch; }
inline uint32_t select_l_root(const LeafSets& s) { return s.l_root; }
inline uint32_t select_l_branch(const LeafSets& s) { return s.l_branch; }
inline uint32_t select_l_any(const LeafSets& s) { return s.l_root | s.l_branch; }
inline uint32_t select_end(const LeafSets& s) { return s.end_vertex; }

inline uint32_t noncut_mask(const Graph& g) {
    uint32_t mask = full_mask(g.vertex_count());
    for (int v : cut_vertices(g)) mask &= ~(uint32_t{1} << v);
    return mask;
}

}  // namespace detail

namespace detail {

using CheckFn = std::function<std::optional<std::string>(const Graph&, long long&, int)>;

struct TheoremCheck {
    std::string id;
    std::string description;
    GraphClass cls = GraphClass::Any;
    CheckFn fn;
};

// --- individual theorem checks (return a failure description or nullopt) ---

inline std::optional<std::string> check_O1(const Graph& g, long long& checks, int cap) {
    uint32_t expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) expected |= uint32_t{1} << v;
    checks += g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool d = f_root_leaf(g, v, SearchKind::GS, {cap, false}).answer;
        if (d != bool(expected >> v & 1))
            return "degree decider disagrees at vertex " + g.name_of(v);
    }
    return check_leaf_set(g, SearchKind::GS, expected, select_f_root, cap, "F-root leaves");
}

inline std::optional<std::string> check_T2(const Graph& g, long long& checks, int cap) {
    int n = g.vertex_count();
    uint32_t noncut = noncut_mask(g);
    uint32_t full = full_mask(n);

    // GS: L-root, L-branch, F-branch and end-vertex sets all equal non-cut set
    LeafSetsOptions gs_opt;
    gs_opt.cap = cap;
    gs_opt.stop = [&](const LeafSets& s) {
        if ((s.l_root | s.l_branch | s.f_branch | s.end_vertex) & ~noncut) return true;
        return noncut == full && s.l_root == full && s.l_branch == full && s.f_branch == full &&
               s.end_vertex == full;
    };
    LeafSets gs = leaf_sets(g, SearchKind::GS, gs_opt).sets;
    if (gs.l_root != noncut) return "GS L-root leaves differ from non-cut set";
    if (gs.l_branch != noncut) return "GS L-branch leaves differ from non-cut set";
    if (gs.f_branch != noncut) return "GS F-branch leaves differ from non-cut set";
    if (gs.end_vertex != noncut) return "GS end-vertices differ from non-cut set";

    // MCS: L-root set equals non-cut set
    auto mcs_bad = check_leaf_set(g, SearchKind::MCS, noncut, select_l_root, cap, "L-root leaves");
    if (mcs_bad) return mcs_bad;

    // DFS from v: "some ordering makes v an L-root leaf" and "every ordering
    // does" must both coincide with v being non-cut
    for (int v = 0; v < n; ++v) {
        bool some = false, counterexample_ordering = false;
        SearchEngine engine(g, SearchKind::DFS);
        EnumerateRawOptions raw{v, -1};
        enumerate_raw(engine, raw, [&](SearchEngine& e) {
            if (e.l_children(v) == 1)
                some = true;
            else
                counterexample_ordering = true;
            return !(some && counterexample_ordering);
        });
        bool every = !counterexample_ordering;
        bool expected = noncut >> v & 1;
        checks += 2;
        if (some != expected)
            return "some-DFS-from-" + g.name_of(v) + " L-root leaf != non-cut";
        if (every != expected)
            return "every-DFS-from-" + g.name_of(v) + " L-root leaf != non-cut";
    }

    // decider agreement
    for (int v = 0; v < n; ++v) {
        ++checks;
        for (SearchKind k : {SearchKind::GS, SearchKind::DFS, SearchKind::MCS}) {
            LeafVerdict verdict = l_root_leaf(g, v, k, {cap, true});
            if (verdict.answer != bool(noncut >> v & 1))
                return "l_root_leaf(" + to_string(k) + ") disagrees at " + g.name_of(v);
            LeafQuery q{k, TreeKind::L, LeafKind::Root, v};
            if (!verify_verdict(g, q, verdict))
                return "l_root_leaf(" + to_string(k) + ") witness fails replay at " + g.name_of(v);
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> check_T3(const Graph& g, long long& checks, int cap) {
    uint32_t noncut = noncut_mask(g);
    checks += 5LL * g.vertex_count();
    for (SearchKind k : {SearchKind::GS, SearchKind::DFS, SearchKind::LDFS, SearchKind::MCS,
                         SearchKind::MNS}) {
        auto bad = check_leaf_set(g, k, noncut, select_l_any, cap, "L-leaves");
        if (bad) return bad;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_T4(const Graph& g, long long& checks, int cap) {
    uint32_t expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
        if (is_connected(sub)) expected |= uint32_t{1} << v;
        bool d = l_root_leaf_bfs(g, v, {cap, false}).answer;
        ++checks;
        if (d != bool(expected >> v & 1))
            return "neighborhood-connectivity decider disagrees at " + g.name_of(v);
    }
    return check_leaf_set(g, SearchKind::BFS, expected, select_l_root, cap, "BFS L-root leaves");
}

inline std::optional<std::string> check_T5(const Graph& g, long long& checks, int cap) {
    uint32_t full = full_mask(g.vertex_count());
    LeafSetsOptions opt;
    opt.cap = cap;
    opt.record_witnesses = true;
    opt.stop = [&](const LeafSets& s) { return s.l_branch == full && s.end_vertex == full; };
    LeafSetsResult res = leaf_sets(g, SearchKind::DFS, opt);
    if (res.sets.l_branch != res.sets.end_vertex)
        return "DFS L-branch leaves {" + describe_mask(g, res.sets.l_branch) +
               "} != DFS end-vertices {" + describe_mask(g, res.sets.end_vertex) + "}";
    for (int v = 0; v < g.vertex_count(); ++v) {
        ++checks;
        bool d = dfs_l_branch_leaf(g, v, {cap, false}).answer;
        if (d != bool(res.sets.l_branch >> v & 1))
            return "end-vertex decider disagrees at " + g.name_of(v);
        if (!(res.sets.l_branch >> v & 1)) continue;
        const Ordering& sigma = *res.l_branch_witness[static_cast<size_t>(v)];
        Ordering tau = branch_leaf_to_end_vertex(g, sigma, v);
        if (tau.last() != v) return "conversion does not end at " + g.name_of(v);
        if (!is_search_ordering(g, SearchKind::DFS, tau))
            return "conversion output is not a DFS ordering (vertex " + g.name_of(v) + ")";
        if (!(build_tree(g, tau, TreeKind::L) == build_tree(g, sigma, TreeKind::L)))
            return "conversion changed the L-tree (vertex " + g.name_of(v) + ")";
    }
    return std::nullopt;
}

inline std::optional<std::string> check_T9(const Graph& g, long long& checks, int cap) {
    const long long budget_constant = 16;  // ops <= 16 * n * m, Theta(n*m)-shaped
    uint32_t expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ++checks;
        LeafVerdict verdict = bfs_l_branch_leaf_bipartite(g, v, {cap, false});
        if (verdict.answer) expected |= uint32_t{1} << v;
        long long ops = -1;
        for (auto& [key, value] : verdict.certificate)
            if (key == "operations") ops = std::stoll(value);
        long long budget =
            budget_constant * static_cast<long long>(g.vertex_count()) * g.edge_count();
        if (ops < 0 || ops > budget)
            return "distance decider used " + std::to_string(ops) + " ops > budget " +
                   std::to_string(budget);
    }
    return check_leaf_set(g, SearchKind::BFS, expected, select_l_branch, cap,
                          "BFS L-branch leaves");
}

inline std::optional<std::string> check_T12(const Graph& g, long long& checks, int cap) {
    uint32_t expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_simplicial(g, v)) expected |= uint32_t{1} << v;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ++checks;
        LeafVerdict verdict = peo_l_branch_leaf_chordal(g, v, SearchKind::MNS, {cap, true});
        if (verdict.answer != bool(expected >> v & 1))
            return "simplicial decider disagrees at " + g.name_of(v);
        LeafQuery q{SearchKind::MNS, TreeKind::L, LeafKind::Branch, v};
        if (!verify_verdict(g, q, verdict))
            return "simplicial witness fails replay at " + g.name_of(v);
    }
    for (SearchKind k :
         {SearchKind::LBFS, SearchKind::LDFS, SearchKind::MCS, SearchKind::MNS}) {
        checks += g.vertex_count();
        auto bad = check_leaf_set(g, k, expected, select_l_branch, cap, "L-branch leaves");
        if (bad) return bad;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_T14(const Graph& g, long long& checks, int cap) {
    uint32_t expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
        bool has_dominating_clique =
            is_connected(sub) && (sub.vertex_count() <= 1 || graph_metrics(sub).diameter <= 3);
        if (has_dominating_clique) expected |= uint32_t{1} << v;
        // the eccentricity probe must agree with the brute-force diameter
        LeafVerdict verdict = peo_f_branch_leaf_chordal(g, v, SearchKind::MNS, {cap, true});
        ++checks;
        if (verdict.answer != has_dominating_clique)
            return "eccentricity probe disagrees with diameter at " + g.name_of(v);
        LeafQuery q{SearchKind::MNS, TreeKind::F, LeafKind::Branch, v};
        if (!verify_verdict(g, q, verdict))
            return "dominating-clique witness fails replay at " + g.name_of(v);
    }
    for (SearchKind k :
         {SearchKind::LBFS, SearchKind::LDFS, SearchKind::MCS, SearchKind::MNS}) {
        checks += g.vertex_count();
        auto bad = check_leaf_set(g, k, expected, select_f_branch, cap, "F-branch leaves");
        if (bad) return bad;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_T21(const Graph& g, long long& checks, int cap) {
    uint32_t expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
        bool yes = is_connected(sub) && graph_metrics(sub).radius <= 2;
        if (yes) expected |= uint32_t{1} << v;
        LeafVerdict verdict = bfs_f_branch_leaf_chordal(g, v, {cap, true});
        ++checks;
        if (verdict.answer != yes) return "radius decider disagrees at " + g.name_of(v);
        LeafQuery q{SearchKind::BFS, TreeKind::F, LeafKind::Branch, v};
        if (!verify_verdict(g, q, verdict))
            return "radius witness fails replay at " + g.name_of(v);
    }
    return check_leaf_set(g, SearchKind::BFS, expected, select_f_branch, cap,
                          "BFS F-branch leaves");
}

inline std::optional<std::string> check_T23(const Graph& g, long long& checks, int cap) {
    uint32_t expected = noncut_mask(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        ++checks;
        LeafVerdict verdict = dfs_f_branch_leaf_split(g, v, {cap, true});
        if (verdict.answer != bool(expected >> v & 1))
            return "split decider disagrees at " + g.name_of(v);
        LeafQuery q{SearchKind::DFS, TreeKind::F, LeafKind::Branch, v};
        if (!verify_verdict(g, q, verdict))
            return "split witness fails replay at " + g.name_of(v);
    }
    return check_leaf_set(g, SearchKind::DFS, expected, select_f_branch, cap,
                          "DFS F-branch leaves");
}

inline std::optional<std::string> check_L18(const Graph& g, long long& checks, int) {
    for (int r = 0; r < g.vertex_count(); ++r) {
        Layers layers = layers_from(g, r);
        for (int z = 0; z < g.vertex_count(); ++z) {
            int dz = layers.depth[static_cast<size_t>(z)];
            if (dz <= 0) continue;
            const auto& nbrs = g.neighbors(z);
            for (size_t a = 0; a < nbrs.size(); ++a)
                for (size_t b = a + 1; b < nbrs.size(); ++b) {
                    int x = nbrs[a], y = nbrs[b];
                    if (layers.depth[static_cast<size_t>(x)] != dz - 1 ||
                        layers.depth[static_cast<size_t>(y)] != dz - 1)
                        continue;
                    ++checks;
                    if (!g.has_edge(x, y))
                        return "same-layer vertices " + g.name_of(x) + "," + g.name_of(y) +
                               " with common deeper neighbor " + g.name_of(z) + " not adjacent";
                }
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> check_L19(const Graph& g, long long& checks, int) {
    for (int r = 0; r < g.vertex_count(); ++r) {
        Layers layers = layers_from(g, r);
        for (auto [x, y] : g.edges()) {
            int d = layers.depth[static_cast<size_t>(x)];
            if (d < 1 || layers.depth[static_cast<size_t>(y)] != d) continue;
            ++checks;
            bool x_in_y = true, y_in_x = true;
            for (int w : g.neighbors(x))
                if (layers.depth[static_cast<size_t>(w)] == d - 1 && !g.has_edge(y, w))
                    x_in_y = false;
            for (int w : g.neighbors(y))
                if (layers.depth[static_cast<size_t>(w)] == d - 1 && !g.has_edge(x, w))
                    y_in_x = false;
            if (!x_in_y && !y_in_x)
                return "incomparable up-neighborhoods for same-layer edge " + g.name_of(x) + "," +
                       g.name_of(y) + " from root " + g.name_of(r);
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> check_L20(const Graph& g, long long& checks, int) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
        std::vector<int> sub_id(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < ids.size(); ++i) sub_id[static_cast<size_t>(ids[i])] = static_cast<int>(i);
        for (int x : g.neighbors(v)) {
            auto del_row = detail::bfs_row(g, x, v);
            auto sub_row = detail::bfs_row(sub, sub_id[static_cast<size_t>(x)]);
            for (int y : g.neighbors(v)) {
                ++checks;
                if (del_row[static_cast<size_t>(y)] !=
                    sub_row[static_cast<size_t>(sub_id[static_cast<size_t>(y)])])
                    return "distance between " + g.name_of(x) + " and " + g.name_of(y) +
                           " differs between G-" + g.name_of(v) + " and the neighborhood graph";
            }
        }
    }
    return std::nullopt;
}

/// Full dispatcher-vs-oracle agreement: every search kind, both tree
/// flavors, both leaf flavors, every vertex; every positive witness must
/// replay.
inline std::optional<std::string> check_dispatch(const Graph& g, long long& checks, int cap) {
    for (SearchKind kind : kAllSearchKinds) {
        LeafSetsOptions opt;
        opt.cap = cap;
        LeafSets sets = leaf_sets(g, kind, opt).sets;
        struct Row {
            TreeKind tree;
            LeafKind leaf;
            uint32_t expected;
        };
        Row rows[] = {
            {TreeKind::F, LeafKind::Root, sets.f_root},
            {TreeKind::F, LeafKind::Branch, sets.f_branch},
            {TreeKind::L, LeafKind::Root, sets.l_root},
            {TreeKind::L, LeafKind::Branch, sets.l_branch},
            {TreeKind::F, LeafKind::Any, sets.f_any()},
            {TreeKind::L, LeafKind::Any, sets.l_any()},
        };
        for (const Row& row : rows) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                ++checks;
                LeafQuery q{kind, row.tree, row.leaf, v};
                LeafVerdict verdict = query_leaf(g, q, {cap, true});
                bool expected = row.expected >> v & 1;
                if (verdict.answer != expected)
                    return to_string(kind) + " " + to_string(row.tree) + "-tree " +
                           to_string(row.leaf) + " at " + g.name_of(v) + ": dispatcher says " +
                           (verdict.answer ? "yes" : "no") + " (method " + verdict.method +
                           "), oracle says " + (expected ? "yes" : "no");
                if (!verify_verdict(g, q, verdict))
                    return to_string(kind) + " " + to_string(row.tree) + "-tree " +
                           to_string(row.leaf) + " at " + g.name_of(v) +
                           ": witness fails replay (method " + verdict.method + ")";
            }
        }
    }
    return std::nullopt;
}

inline const std::vector<TheoremCheck>& theorem_checks() {
    static const std::vector<TheoremCheck> table = {
        {"O1", "F-root leaves of generic search are the degree-one vertices", GraphClass::Any,
         check_O1},
        {"T2", "L-root leaves of GS/DFS/MCS, GS branch leaves and GS end-vertices are the non-cut "
               "vertices (eight-way equivalence)",
         GraphClass::Any, check_T2},
        {"T3", "L-leaves of GS, DFS, LDFS, MCS, MNS are the non-cut vertices", GraphClass::Any,
         check_T3},
        {"T4", "BFS L-root leaves are the vertices with connected neighborhood", GraphClass::Any,
         check_T4},
        {"T5", "DFS L-branch leaves are the DFS end-vertices (with witness conversion)",
         GraphClass::Any, check_T5},
        {"T9", "bipartite BFS L-branch leaves are the distance-preserving-deletion vertices",
         GraphClass::Bipartite, check_T9},
        {"T12", "chordal L-branch leaves of the MNS family are the simplicial vertices",
         GraphClass::Chordal, check_T12},
        {"T14", "chordal F-branch leaves of the MNS family are the vertices whose neighborhood "
                "has a dominating clique (diameter at most 3)",
         GraphClass::Chordal, check_T14},
        {"T21", "chordal BFS F-branch leaves are the vertices whose neighborhood has radius at "
                "most 2",
         GraphClass::Chordal, check_T21},
        {"T23", "split DFS F-branch leaves are the non-cut vertices", GraphClass::Split,
         check_T23},
        {"L18", "chordal layer lemma: same-layer vertices with a common deeper neighbor are "
                "adjacent",
         GraphClass::Chordal, check_L18},
        {"L19", "chordal layer lemma: same-layer adjacent vertices have nested up-neighborhoods",
         GraphClass::Chordal, check_L19},
        {"L20", "chordal neighborhood lemma: distances between neighbors of v agree in G-v and "
                "G[N(v)]",
         GraphClass::Chordal, check_L20},
        {"DISPATCH", "dispatcher answers equal oracle answers for every query; witnesses replay",
         GraphClass::Any, check_dispatch},
    };
    return table;
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::string>> certify_catalog() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& t : detail::theorem_checks()) out.emplace_back(t.id, t.description);
    return out;
}

/// Runs one theorem check over the corpus (exhaustive by default, seeded
/// random with opts.samples > 0), stopping at the first counterexample.
inline CertifyReport certify(const std::string& id, const CertifyOptions& opts = {}) {
    const detail::TheoremCheck* check = nullptr;
    for (const auto& t : detail::theorem_checks())
        if (t.id == id) check = &t;
    if (!check) throw Error("unknown theorem id '" + id + "'");
    CertifyReport rep;
    rep.id = check->id;
    rep.description = check->description;
    rep.graph_class = check->cls;
    auto consider = [&](const Graph& g) {
        if (!in_graph_class(g, check->cls)) return true;
        if (opts.cls != GraphClass::Any && !in_graph_class(g, opts.cls)) return true;
        ++rep.graphs;
        auto fail = check->fn(g, rep.checks, opts.cap);
        if (fail) {
            rep.pass = false;
            rep.counterexample = Counterexample{g.vertex_count(), format_graph(g), *fail};
            return false;
        }
        return true;
    };
    if (opts.samples > 0) {
        for_each_random_connected_graph(opts.nmax, opts.samples, opts.seed, opts.edge_prob,
                                        consider);
    } else {
        for (int n = 2; n <= opts.nmax && rep.pass; ++n) for_each_connected_graph(n, consider);
    }
    return rep;
}

}  // namespace gsleaf
