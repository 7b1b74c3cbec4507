#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsleaf/classify.hpp"
#include "gsleaf/graph.hpp"
#include "gsleaf/metrics.hpp"
#include "gsleaf/ordering.hpp"
#include "gsleaf/search.hpp"
#include "gsleaf/tree.hpp"

namespace gsleaf {

enum class LeafKind { Root, Branch, Any };

inline std::string to_string(LeafKind k) {
    switch (k) {
        case LeafKind::Root: return "root";
        case LeafKind::Branch: return "branch";
        case LeafKind::Any: return "any";
    }
    return "?";
}

inline std::optional<LeafKind> leaf_kind_from_string(const std::string& s) {
    if (s == "root") return LeafKind::Root;
    if (s == "branch") return LeafKind::Branch;
    if (s == "any") return LeafKind::Any;
    return std::nullopt;
}

/// Can vertex `vertex` be a leaf of the given flavor in the given search's
/// tree, over all orderings of that search?
struct LeafQuery {
    SearchKind search = SearchKind::GS;
    TreeKind tree = TreeKind::F;
    LeafKind leaf = LeafKind::Any;
    int vertex = 0;
};

/// Answer plus a replayable witness or a structured refutation. When
/// `witness_is_peo` is set the witness certifies the leaf role through the
/// perfect-elimination property rather than by simulating the search kind
/// (used by the chordal routes, whose trees coincide with those of PEOs).
struct LeafVerdict {
    bool answer = false;
    std::string method;
    std::optional<Ordering> witness;
    SearchKind witness_kind = SearchKind::GS;
    bool witness_is_peo = false;
    std::vector<std::pair<std::string, std::string>> certificate;

    void note(const std::string& k, const std::string& v) { certificate.emplace_back(k, v); }
};

struct LeafOptions {
    int cap = kDefaultExhaustiveCap;  // exact-search size limit
    bool want_witness = true;
};

namespace detail {

inline void require_leaf_query(const Graph& g, int v) {
    if (g.vertex_count() < 2)
        throw Error("no spanning-tree leaf exists: graph has fewer than two vertices");
    if (v < 0 || v >= g.vertex_count()) throw Error("vertex out of range");
    if (!is_connected(g)) throw Error("leaf queries require a connected graph");
}

/// prefix vertices first (in the given order), remaining vertices ascending.
inline Ordering rho_with_prefix(int n, const std::vector<int>& prefix) {
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(n));
    for (int v : prefix) {
        if (used[static_cast<size_t>(v)]) throw Error("duplicate vertex in tie-break prefix");
        used[static_cast<size_t>(v)] = true;
        seq.push_back(v);
    }
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<size_t>(v)]) seq.push_back(v);
    return Ordering(std::move(seq));
}

/// Ordering of g obtained from an ordering of an induced subgraph via its
/// new->old id map, with extra vertices appended as given.
inline Ordering lift_sub_ordering(int n, const Ordering& sub, const std::vector<int>& old_ids,
                                  const std::vector<int>& tail) {
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(n));
    for (int u : sub.seq()) seq.push_back(old_ids[static_cast<size_t>(u)]);
    for (int v : tail) seq.push_back(v);
    return Ordering(std::move(seq));
}

struct ExactResult {
    bool answer = false;
    std::optional<Ordering> witness;
    long long nodes = 0;  // full orderings examined before deciding
};

/// Backtracking over kind-orderings, pruning every prefix in which `v` has
/// already acquired a child of the queried tree flavor (parents are fixed
/// when a vertex is numbered, so the condition is permanent). Root queries
/// force v first and allow exactly one child; branch queries forbid v first.
/// Sound and complete within the cap.
inline ExactResult exact_leaf_search(const Graph& g, int v, SearchKind kind, TreeKind tree,
                                     LeafKind role, int cap) {
    if (g.vertex_count() > cap)
        throw Error("exact search cap exceeded: n=" + std::to_string(g.vertex_count()) + " > cap=" +
                    std::to_string(cap) + " (raise --cap or use a characterized graph class)");
    if (role == LeafKind::Any) throw Error("exact search role must be root or branch");
    const int n = g.vertex_count();
    SearchEngine engine(g, kind);
    ExactResult res;
    std::vector<std::vector<int>> buf(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            ++res.nodes;
            res.answer = true;
            res.witness = Ordering(engine.order());
            return;
        }
        auto& elig = buf[static_cast<size_t>(depth)];
        engine.eligible(elig);
        for (int u : elig) {
            if (depth == 0) {
                if (role == LeafKind::Root && u != v) continue;
                if (role == LeafKind::Branch && u == v) continue;
            }
            engine.number(u);
            bool pruned = false;
            if (depth > 0) {
                int p = tree == TreeKind::F ? engine.f_parent(u) : engine.l_parent(u);
                if (p == v) {
                    int kids = tree == TreeKind::F ? engine.f_children(v) : engine.l_children(v);
                    pruned = role == LeafKind::Branch || kids >= 2;
                }
            }
            if (!pruned) self(self, depth + 1);
            engine.unnumber();
            if (res.answer) return;
        }
    };
    rec(rec, 0);
    return res;
}

/// Backtracking over kind-orderings that never number `v` before the final
/// step: decides whether v is an end-vertex (optionally with a forced start).
inline ExactResult exact_end_vertex_search(const Graph& g, int v, SearchKind kind,
                                           std::optional<int> start, int cap) {
    if (g.vertex_count() > cap)
        throw Error("exact search cap exceeded: n=" + std::to_string(g.vertex_count()) + " > cap=" +
                    std::to_string(cap));
    const int n = g.vertex_count();
    if (start && *start == v && n > 1) return {};
    SearchEngine engine(g, kind);
    ExactResult res;
    std::vector<std::vector<int>> buf(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            ++res.nodes;
            res.answer = true;
            res.witness = Ordering(engine.order());
            return;
        }
        auto& elig = buf[static_cast<size_t>(depth)];
        engine.eligible(elig);
        for (int u : elig) {
            if (u == v && depth != n - 1) continue;
            if (depth == 0 && start && u != *start) continue;
            engine.number(u);
            self(self, depth + 1);
            engine.unnumber();
            if (res.answer) return;
        }
    };
    rec(rec, 0);
    return res;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Root-leaf deciders
// ---------------------------------------------------------------------------

/// F-root leaves are the degree-one vertices, for every search kind: the
/// start vertex's F-children are exactly its neighbors (each neighbor's
/// leftmost neighbor is the start itself).
inline LeafVerdict f_root_leaf(const Graph& g, int v, SearchKind kind,
                               const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    LeafVerdict out;
    out.method = "degree-one";
    out.note("degree", std::to_string(g.degree(v)));
    if (g.degree(v) != 1) return out;
    out.answer = true;
    if (opt.want_witness) {
        out.witness = run_search_plus(g, kind, detail::rho_with_prefix(g.vertex_count(), {v}));
        out.witness_kind = kind;
    }
    return out;
}

/// L-root leaves of GS, DFS, LDFS, MCS, and MNS are the non-cut vertices.
/// Witnesses: GS prepends v to a search of G-v from a neighbor; DFS/LDFS may
/// start anywhere at v; MCS/MNS run the plus-search whose reference ordering
/// starts with v and keeps v's neighbors after all non-neighbors.
inline LeafVerdict l_root_leaf(const Graph& g, int v, SearchKind kind,
                               const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    if (kind == SearchKind::BFS || kind == SearchKind::LBFS)
        throw Error("no cut-vertex characterization for " + to_string(kind) + " L-root leaves");
    LeafVerdict out;
    out.method = "non-cut-vertex";
    if (is_cut_vertex(g, v)) {
        out.note("cut_vertex", g.name_of(v));
        return out;
    }
    out.answer = true;
    if (!opt.want_witness) return out;
    out.witness_kind = kind;
    switch (kind) {
        case SearchKind::GS: {
            auto [sub, ids] = remove_vertex(g, v);
            // map: find a neighbor's sub id to start from
            int start_sub = -1;
            for (size_t i = 0; i < ids.size(); ++i)
                if (g.has_edge(ids[i], v)) {
                    start_sub = static_cast<int>(i);
                    break;
                }
            Ordering sub_sigma = run_search_plus(
                sub, SearchKind::GS, detail::rho_with_prefix(sub.vertex_count(), {start_sub}));
            std::vector<int> seq{v};
            for (int u : sub_sigma.seq()) seq.push_back(ids[static_cast<size_t>(u)]);
            out.witness = Ordering(std::move(seq));
            break;
        }
        case SearchKind::DFS:
        case SearchKind::LDFS:
            out.witness = run_search_plus(g, kind, detail::rho_with_prefix(g.vertex_count(), {v}));
            break;
        case SearchKind::MCS:
        case SearchKind::MNS: {
            // v first, neighbors of v to the right of all non-neighbors
            std::vector<int> prefix{v};
            for (int u = 0; u < g.vertex_count(); ++u)
                if (u != v && !g.has_edge(u, v)) prefix.push_back(u);
            out.witness = run_search_plus(g, SearchKind::MCS,
                                          detail::rho_with_prefix(g.vertex_count(), prefix));
            break;
        }
        default:
            break;
    }
    return out;
}

/// L-leaf (root or branch) of GS, DFS, LDFS, MCS, MNS: again the non-cut
/// vertices; the root-leaf witness doubles as the leaf witness.
inline LeafVerdict l_leaf_any(const Graph& g, int v, SearchKind kind,
                              const LeafOptions& opt = {}) {
    LeafVerdict out = l_root_leaf(g, v, kind, opt);
    out.method = "non-cut-vertex";
    return out;
}

/// BFS L-root leaf iff the open neighborhood induces a connected graph.
/// Witness: v, then a generic search of G[N(v)], extended to a BFS ordering.
inline LeafVerdict l_root_leaf_bfs(const Graph& g, int v, const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    LeafVerdict out;
    out.method = "neighborhood-connected";
    auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
    if (!is_connected(sub)) {
        int comps = 0;
        std::vector<int> color(static_cast<size_t>(sub.vertex_count()), -1);
        for (int s = 0; s < sub.vertex_count(); ++s)
            if (color[static_cast<size_t>(s)] == -1) {
                ++comps;
                auto row = detail::bfs_row(sub, s);
                for (int u = 0; u < sub.vertex_count(); ++u)
                    if (row[static_cast<size_t>(u)] != Layers::unreachable)
                        color[static_cast<size_t>(u)] = 0;
            }
        out.note("neighborhood_components", std::to_string(comps));
        return out;
    }
    out.answer = true;
    if (opt.want_witness) {
        Ordering sub_gs = run_search_plus(sub, SearchKind::GS,
                                          identity_ordering(sub.vertex_count()));
        std::vector<int> prefix{v};
        for (int u : sub_gs.seq()) prefix.push_back(ids[static_cast<size_t>(u)]);
        out.witness =
            run_search_plus(g, SearchKind::BFS, detail::rho_with_prefix(g.vertex_count(), prefix));
        out.witness_kind = SearchKind::BFS;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Branch-leaf deciders
// ---------------------------------------------------------------------------

/// GS branch leaves (either tree flavor) are the non-cut vertices; the
/// witness makes v the end-vertex, which is a branch leaf of both trees.
inline LeafVerdict gs_branch_leaf(const Graph& g, int v, const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    LeafVerdict out;
    out.method = "non-cut-vertex";
    if (is_cut_vertex(g, v)) {
        out.note("cut_vertex", g.name_of(v));
        return out;
    }
    out.answer = true;
    if (opt.want_witness) {
        auto [sub, ids] = remove_vertex(g, v);
        Ordering sub_sigma =
            run_search_plus(sub, SearchKind::GS, identity_ordering(sub.vertex_count()));
        out.witness = detail::lift_sub_ordering(g.vertex_count(), sub_sigma, ids, {v});
        out.witness_kind = SearchKind::GS;
    }
    return out;
}

/// DFS L-branch leaves coincide with DFS end-vertices; decided exactly by
/// backtracking that keeps v unnumbered until the last step.
inline LeafVerdict dfs_l_branch_leaf(const Graph& g, int v, const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    LeafVerdict out;
    out.method = "exact-dfs-end-vertex";
    auto res = detail::exact_end_vertex_search(g, v, SearchKind::DFS, std::nullopt, opt.cap);
    out.answer = res.answer;
    if (res.answer && opt.want_witness) {
        out.witness = std::move(res.witness);
        out.witness_kind = SearchKind::DFS;
    }
    return out;
}

/// Re-orders the L-tree of a DFS ordering so that its branch leaf v becomes
/// the end-vertex: a tree DFS from the root that always prefers children
/// that are not ancestors of v. The result is a DFS ordering of g with the
/// same L-tree, ending exactly at v.
inline Ordering branch_leaf_to_end_vertex(const Graph& g, const Ordering& sigma, int v) {
    RootedTree t = build_tree(g, sigma, TreeKind::L);
    if (classify_leaf(t, v) != LeafRole::BranchLeaf)
        throw Error("vertex '" + g.name_of(v) + "' is not a branch leaf of the ordering's L-tree");
    int n = g.vertex_count();
    std::vector<bool> toward_v(static_cast<size_t>(n), false);
    for (int u = v; u != -1; u = t.parent[static_cast<size_t>(u)]) toward_v[static_cast<size_t>(u)] = true;
    std::vector<int> priority(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u)
        priority[static_cast<size_t>(u)] = toward_v[static_cast<size_t>(u)] ? n + u : u;
    return dfs_order_of_tree(t, t.root, priority);
}

/// Bipartite BFS L-branch test: some root r must see unchanged distances to
/// every other vertex when v is deleted. Two all-source BFS sweeps; `ops`
/// counts dequeues, adjacency scans, and row comparisons.
inline LeafVerdict bfs_l_branch_leaf_bipartite(const Graph& g, int v,
                                               const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    if (!is_bipartite(g)) throw Error("characterization requires a bipartite graph");
    LeafVerdict out;
    out.method = "distance-preserving-root";
    long long ops = 0;
    int n = g.vertex_count();
    int found_r = -1;
    std::vector<int> dist_g, dist_del;
    for (int r = 0; r < n && found_r < 0; ++r) {
        if (r == v) continue;
        dist_g = detail::bfs_row(g, r, -1, &ops);
        dist_del = detail::bfs_row(g, r, v, &ops);
        bool same = true;
        for (int w = 0; w < n; ++w) {
            ++ops;
            if (w == v) continue;
            if (dist_g[static_cast<size_t>(w)] != dist_del[static_cast<size_t>(w)]) {
                same = false;
                break;
            }
        }
        if (same) found_r = r;
    }
    out.note("operations", std::to_string(ops));
    if (found_r < 0) return out;
    out.answer = true;
    out.note("preserving_root", g.name_of(found_r));
    if (opt.want_witness) {
        // shortest r-v path heads each of its layers in the witness
        auto dist = detail::bfs_row(g, found_r);
        std::vector<int> path{v};
        int cur = v;
        while (cur != found_r) {
            for (int w : g.neighbors(cur))
                if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(cur)] - 1) {
                    cur = w;
                    break;
                }
            path.push_back(cur);
        }
        std::reverse(path.begin(), path.end());
        out.witness =
            run_search_plus(g, SearchKind::BFS, detail::rho_with_prefix(g.vertex_count(), path));
        out.witness_kind = SearchKind::BFS;
    }
    return out;
}

namespace detail {

/// Smallest dominating clique of g by subset enumeration (test-scale sizes).
inline std::optional<std::vector<int>> find_dominating_clique(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap || n > 30) return std::nullopt;
    for (int size = 1; size <= n; ++size) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            std::vector<int> cand;
            for (int u = 0; u < n; ++u)
                if (mask >> u & 1) cand.push_back(u);
            bool clique = true;
            for (size_t i = 0; i < cand.size() && clique; ++i)
                for (size_t j = i + 1; j < cand.size(); ++j)
                    if (!g.has_edge(cand[i], cand[j])) {
                        clique = false;
                        break;
                    }
            if (!clique) continue;
            bool dominating = true;
            for (int u = 0; u < n && dominating; ++u) {
                if (mask >> u & 1) continue;
                bool covered = false;
                for (int w : g.neighbors(u))
                    if (mask >> w & 1) {
                        covered = true;
                        break;
                    }
                dominating = covered;
            }
            if (dominating) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// L-branch leaves of PEOs of a chordal graph (equivalently of LBFS, LDFS,
/// MCS, MNS orderings) are the simplicial vertices. Witness: a PEO of G-v
/// followed by v.
inline LeafVerdict peo_l_branch_leaf_chordal(const Graph& g, int v,
                                             [[maybe_unused]] SearchKind kind = SearchKind::MNS,
                                             const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    if (!is_chordal(g)) throw Error("characterization requires a chordal graph");
    LeafVerdict out;
    out.method = "simplicial";
    auto bad = nonadjacent_neighbor_pair(g, v);
    if (bad) {
        out.note("nonadjacent_neighbors", g.name_of(bad->first) + "," + g.name_of(bad->second));
        return out;
    }
    out.answer = true;
    if (opt.want_witness) {
        // a simplicial vertex is never a cut vertex, so G-v stays connected
        auto [sub, ids] = remove_vertex(g, v);
        Ordering sub_peo =
            run_search_plus(sub, SearchKind::LBFS, identity_ordering(sub.vertex_count()));
        out.witness = detail::lift_sub_ordering(g.vertex_count(), sub_peo, ids, {v});
        out.witness_is_peo = true;
    }
    return out;
}

/// F-branch leaves of PEOs of a chordal graph: G[N(v)] must have a
/// dominating clique, i.e. diameter at most 3 (a chordal graph has a
/// dominating clique iff its diameter is at most 3). Decided by probing the
/// eccentricity of an LBFS end-vertex u of G[N(v)]: ecc(u) > 3 refutes,
/// ecc(u) = 3 forces diameter 3, and ecc(u) < 3 bounds the diameter by
/// ecc(u)+1 <= 3, since an LBFS end-vertex's eccentricity undershoots the
/// diameter by at most one (and only at even values).
inline LeafVerdict peo_f_branch_leaf_chordal(const Graph& g, int v,
                                             SearchKind kind = SearchKind::MNS,
                                             const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    if (!is_chordal(g)) throw Error("characterization requires a chordal graph");
    LeafVerdict out;
    out.method = "dominating-clique-diameter";
    auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
    if (!is_connected(sub)) {
        // a clique sits inside one component and cannot dominate another
        out.note("neighborhood_connected", "false");
        return out;
    }
    if (sub.vertex_count() > 1) {
        Ordering lbfs =
            run_search_plus(sub, SearchKind::LBFS, identity_ordering(sub.vertex_count()));
        int probe = lbfs.last();
        int e = eccentricity(sub, probe);
        out.note("probe_vertex", g.name_of(ids[static_cast<size_t>(probe)]));
        out.note("probe_eccentricity", std::to_string(e));
        if (e > 3) return out;
    }
    out.answer = true;
    if (opt.want_witness) {
        auto clique_sub = detail::find_dominating_clique(sub, opt.cap);
        if (clique_sub) {
            std::vector<int> prefix;
            for (int u : *clique_sub) prefix.push_back(ids[static_cast<size_t>(u)]);
            out.witness = run_search_plus(g, SearchKind::LBFS,
                                          detail::rho_with_prefix(g.vertex_count(), prefix));
            if (kind == SearchKind::LBFS || kind == SearchKind::MNS) {
                out.witness_kind = kind;  // LBFS output is valid for both
            } else {
                out.witness_is_peo = true;
            }
        } else {
            out.note("witness", "omitted: neighborhood exceeds clique-search cap");
        }
    }
    return out;
}

/// BFS F-branch leaves of a chordal graph: the radius of G[N(v)] must be at
/// most 2. Witness: BFS from a central vertex w of G[N(v)], with all of
/// N(w) except v first in layer one and v last in it.
inline LeafVerdict bfs_f_branch_leaf_chordal(const Graph& g, int v, const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    if (!is_chordal(g)) throw Error("characterization requires a chordal graph");
    LeafVerdict out;
    out.method = "neighborhood-radius";
    auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
    if (!is_connected(sub)) {
        out.note("neighborhood_radius", "infinite");
        return out;
    }
    Metrics m = graph_metrics(sub);
    out.note("neighborhood_radius", std::to_string(m.radius));
    if (m.radius > 2) return out;
    out.answer = true;
    int w = ids[static_cast<size_t>(m.center)];
    out.note("neighborhood_center", g.name_of(w));
    if (opt.want_witness) {
        std::vector<int> prefix{w};
        for (int u : g.neighbors(w))
            if (u != v) prefix.push_back(u);
        prefix.push_back(v);
        out.witness =
            run_search_plus(g, SearchKind::BFS, detail::rho_with_prefix(g.vertex_count(), prefix));
        out.witness_kind = SearchKind::BFS;
    }
    return out;
}

/// DFS F-branch leaves of a split graph are the non-cut vertices. Witness:
/// a DFS that numbers the clique side (minus v) first.
inline LeafVerdict dfs_f_branch_leaf_split(const Graph& g, int v, const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    auto part = split_partition(g);
    if (!part) throw Error("characterization requires a split graph");
    LeafVerdict out;
    out.method = "split-non-cut-vertex";
    if (is_cut_vertex(g, v)) {
        out.note("cut_vertex", g.name_of(v));
        return out;
    }
    out.answer = true;
    if (opt.want_witness) {
        std::vector<int> prefix;
        for (int u : part->first)
            if (u != v) prefix.push_back(u);
        out.witness =
            run_search_plus(g, SearchKind::DFS, detail::rho_with_prefix(g.vertex_count(), prefix));
        out.witness_kind = SearchKind::DFS;
    }
    return out;
}

/// Exact decision by pruned enumeration for the regimes with no polynomial
/// characterization.
inline LeafVerdict exact_branch_leaf(const Graph& g, int v, SearchKind kind, TreeKind tree,
                                     const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    LeafVerdict out;
    out.method = "exact-enumeration";
    auto res = detail::exact_leaf_search(g, v, kind, tree, LeafKind::Branch, opt.cap);
    out.answer = res.answer;
    if (res.answer && opt.want_witness) {
        out.witness = std::move(res.witness);
        out.witness_kind = kind;
    }
    return out;
}

inline LeafVerdict exact_root_leaf(const Graph& g, int v, SearchKind kind, TreeKind tree,
                                   const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, v);
    LeafVerdict out;
    out.method = "exact-enumeration";
    auto res = detail::exact_leaf_search(g, v, kind, tree, LeafKind::Root, opt.cap);
    out.answer = res.answer;
    if (res.answer && opt.want_witness) {
        out.witness = std::move(res.witness);
        out.witness_kind = kind;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

namespace detail {

inline LeafVerdict query_root(const Graph& g, SearchKind kind, TreeKind tree, int v,
                              const LeafOptions& opt) {
    if (tree == TreeKind::F) return f_root_leaf(g, v, kind, opt);
    switch (kind) {
        case SearchKind::GS:
        case SearchKind::DFS:
        case SearchKind::MCS:
        case SearchKind::LDFS:
        case SearchKind::MNS:
            return l_root_leaf(g, v, kind, opt);
        case SearchKind::BFS:
            return l_root_leaf_bfs(g, v, opt);
        case SearchKind::LBFS: {
            // no characterization, but LBFS orderings are BFS orderings, so
            // a disconnected neighborhood already refutes
            LeafVerdict necessary = l_root_leaf_bfs(g, v, LeafOptions{opt.cap, false});
            if (!necessary.answer) {
                necessary.method = "neighborhood-disconnected";
                return necessary;
            }
            return exact_root_leaf(g, v, kind, tree, opt);
        }
    }
    return {};
}

inline LeafVerdict query_branch(const Graph& g, SearchKind kind, TreeKind tree, int v,
                                const LeafOptions& opt) {
    // a cut vertex is never a branch leaf of any generic-search ordering,
    // and every kind's orderings are generic-search orderings
    if (is_cut_vertex(g, v)) {
        LeafVerdict out;
        out.method = "cut-vertex";
        out.note("cut_vertex", g.name_of(v));
        return out;
    }
    if (kind == SearchKind::GS) return gs_branch_leaf(g, v, opt);
    if (tree == TreeKind::L) {
        switch (kind) {
            case SearchKind::DFS:
                return dfs_l_branch_leaf(g, v, opt);
            case SearchKind::BFS:
                if (is_bipartite(g)) return bfs_l_branch_leaf_bipartite(g, v, opt);
                return exact_branch_leaf(g, v, kind, tree, opt);
            case SearchKind::LBFS:
            case SearchKind::LDFS:
            case SearchKind::MCS:
            case SearchKind::MNS:
                if (is_chordal(g)) return peo_l_branch_leaf_chordal(g, v, kind, opt);
                return exact_branch_leaf(g, v, kind, tree, opt);
            default:
                break;
        }
    } else {
        switch (kind) {
            case SearchKind::DFS:
                if (is_split(g)) return dfs_f_branch_leaf_split(g, v, opt);
                return exact_branch_leaf(g, v, kind, tree, opt);
            case SearchKind::BFS:
                if (is_chordal(g)) return bfs_f_branch_leaf_chordal(g, v, opt);
                return exact_branch_leaf(g, v, kind, tree, opt);
            case SearchKind::LBFS:
            case SearchKind::LDFS:
            case SearchKind::MCS:
            case SearchKind::MNS:
                if (is_chordal(g)) return peo_f_branch_leaf_chordal(g, v, kind, opt);
                return exact_branch_leaf(g, v, kind, tree, opt);
            default:
                break;
        }
    }
    return exact_branch_leaf(g, v, kind, tree, opt);
}

}  // namespace detail

/// Routes the query to the most specific characterized method (by leaf kind,
/// search kind, and graph class), falling back to the exact solver.
inline LeafVerdict query_leaf(const Graph& g, const LeafQuery& q, const LeafOptions& opt = {}) {
    detail::require_leaf_query(g, q.vertex);
    switch (q.leaf) {
        case LeafKind::Root:
            return detail::query_root(g, q.search, q.tree, q.vertex, opt);
        case LeafKind::Branch:
            return detail::query_branch(g, q.search, q.tree, q.vertex, opt);
        case LeafKind::Any: {
            // either side may answer yes; a cap error on one side is only
            // fatal when the other side cannot already settle the query
            std::optional<LeafVerdict> root;
            std::optional<Error> root_error;
            try {
                root = detail::query_root(g, q.search, q.tree, q.vertex, opt);
            } catch (const Error& e) {
                root_error = e;
            }
            if (root && root->answer) {
                root->method = "root:" + root->method;
                return *root;
            }
            LeafVerdict branch = detail::query_branch(g, q.search, q.tree, q.vertex, opt);
            if (branch.answer) {
                branch.method = "branch:" + branch.method;
                return branch;
            }
            if (root_error) throw *root_error;
            branch.method = "root:" + root->method + "+branch:" + branch.method;
            return branch;
        }
    }
    return {};
}

/// Replays a positive verdict's witness: the ordering must be valid (under
/// the witness kind, or as a PEO) and must give the queried vertex the
/// queried leaf role in the queried tree flavor.
inline bool verify_verdict(const Graph& g, const LeafQuery& q, const LeafVerdict& verdict) {
    if (!verdict.answer || !verdict.witness) return true;
    const Ordering& w = *verdict.witness;
    if (w.size() != g.vertex_count()) return false;
    if (verdict.witness_is_peo) {
        if (!is_peo(g, w)) return false;
    } else if (!is_search_ordering(g, verdict.witness_kind, w)) {
        return false;
    }
    RootedTree t = build_tree(g, w, q.tree);
    LeafRole role = classify_leaf(t, q.vertex);
    switch (q.leaf) {
        case LeafKind::Root: return role == LeafRole::RootLeaf;
        case LeafKind::Branch: return role == LeafRole::BranchLeaf;
        case LeafKind::Any: return role != LeafRole::Internal;
    }
    return false;
}

}  // namespace gsleaf
