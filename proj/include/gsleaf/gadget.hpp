#pragma once

#include <array>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsleaf/classify.hpp"
#include "gsleaf/graph.hpp"
#include "gsleaf/leaf.hpp"
#include "gsleaf/metrics.hpp"
#include "gsleaf/search.hpp"

namespace gsleaf {

/// A 3-CNF instance: clauses of exactly three (possibly repeated) signed
/// literals over variables 1..k. The reductions need at least two variables
/// and two clauses: with a single variable the literal layer of the clause
/// gadget is edgeless and the equivalence breaks down.
struct CnfInstance {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;  // signed 1-based variable indices

    void validate() const {
        if (variables < 2) throw Error("CNF instance needs at least 2 variables");
        if (clauses.size() < 2) throw Error("CNF instance needs at least 2 clauses");
        for (const auto& c : clauses)
            for (int lit : c)
                if (lit == 0 || lit > variables || lit < -variables)
                    throw Error("CNF literal out of range");
    }

    bool satisfiable() const {
        validate();
        for (unsigned assignment = 0; assignment < (1u << variables); ++assignment) {
            bool ok = true;
            for (const auto& c : clauses) {
                bool clause_ok = false;
                for (int lit : c) {
                    int var = lit > 0 ? lit : -lit;
                    bool value = (assignment >> (var - 1)) & 1;
                    if ((lit > 0) == value) {
                        clause_ok = true;
                        break;
                    }
                }
                if (!clause_ok) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }
};

/// DIMACS CNF: "c" comments, "p cnf <k> <l>", clauses as 0-terminated
/// literal runs (may span lines). Short clauses are padded by repeating
/// their last literal; clauses with more than three literals are rejected.
inline CnfInstance load_cnf(std::istream& in) {
    CnfInstance cnf;
    std::string line;
    bool header = false;
    std::vector<int> current;
    int lineno = 0;
    long long declared_clauses = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> cnf.variables >> declared_clauses) || fmt != "cnf")
                throw Error("line " + std::to_string(lineno) + ": malformed DIMACS cnf header");
            header = true;
            continue;
        }
        if (!header) throw Error("line " + std::to_string(lineno) + ": clause before header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty())
                    throw Error("line " + std::to_string(lineno) + ": empty clause");
                if (current.size() > 3)
                    throw Error("line " + std::to_string(lineno) + ": clause has " +
                                std::to_string(current.size()) + " literals, 3-CNF required");
                while (current.size() < 3) current.push_back(current.back());
                cnf.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) throw Error("unterminated clause at end of CNF document");
    cnf.validate();
    return cnf;
}

inline CnfInstance load_cnf(const std::string& text) {
    std::istringstream in(text);
    return load_cnf(in);
}

enum class GadgetType { DfsF, BfsF, SatF };

inline std::string to_string(GadgetType t) {
    switch (t) {
        case GadgetType::DfsF: return "dfs-f";
        case GadgetType::BfsF: return "bfs-f";
        case GadgetType::SatF: return "sat-f";
    }
    return "?";
}

/// A reduction instance: the source problem, the constructed graph, and the
/// leaf query on it that mirrors the source answer.
struct GadgetInstance {
    GadgetType type = GadgetType::DfsF;
    Graph target;
    LeafQuery query;
    // source data, kept for verification
    std::optional<Graph> source_graph;
    int source_r = -1;
    int source_v = -1;
    std::optional<CnfInstance> source_cnf;
};

namespace detail {

class NamePool {
public:
    explicit NamePool(const Graph& g) {
        for (int v = 0; v < g.vertex_count(); ++v) taken_.insert(g.name_of(v));
        names_.reserve(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) names_.push_back(g.name_of(v));
    }
    NamePool() = default;

    int add(std::string base) {
        while (!taken_.insert(base).second) base += "'";
        names_.push_back(base);
        return static_cast<int>(names_.size()) - 1;
    }

    std::vector<std::string> names() { return names_; }

private:
    std::set<std::string> taken_;
    std::vector<std::string> names_;
};

}  // namespace detail

/// Hamiltonian-path source gadget: attach a pendant to every vertex and add
/// one universal vertex y. y can be an F-branch leaf of a DFS ordering of
/// the result iff the source has a Hamiltonian path. Preserves chordality.
inline GadgetInstance dfs_f_gadget(const Graph& g) {
    if (g.vertex_count() < 2) throw Error("gadget needs a source with at least 2 vertices");
    int n = g.vertex_count();
    detail::NamePool pool(g);
    auto edges = g.edges();
    for (int i = 0; i < n; ++i) {
        int pendant = pool.add(g.name_of(i) + "'");
        edges.emplace_back(i, pendant);
    }
    int y = pool.add("y");
    for (int u = 0; u < y; ++u) edges.emplace_back(u, y);
    GadgetInstance inst;
    inst.type = GadgetType::DfsF;
    inst.target = Graph::from_edges(y + 1, edges, pool.names());
    inst.query = LeafQuery{SearchKind::DFS, TreeKind::F, LeafKind::Branch, y};
    inst.source_graph = g;
    return inst;
}

/// Beginning-end-vertex source gadget for BFS on bipartite graphs: graft a
/// path of length k+3 onto r (k = ecc(r)), tie its far end to v, and give
/// every other last-layer vertex w a private degree-2 vertex w' adjacent to
/// v and w. v can be an F-branch leaf of a BFS ordering of the result iff
/// some BFS of the source starting at r ends at v. Preserves bipartiteness.
inline GadgetInstance bfs_f_gadget(const Graph& g, int r, int v) {
    if (g.vertex_count() < 2) throw Error("gadget needs a source with at least 2 vertices");
    if (!is_connected(g)) throw Error("gadget source must be connected");
    if (!is_bipartite(g)) throw Error("gadget source must be bipartite");
    if (r == v) throw Error("gadget start and query vertices must differ");
    Layers layers = layers_from(g, r);
    int k = layers.max_depth();
    if (layers.depth[static_cast<size_t>(v)] != k)
        throw Error("query vertex must lie in the last layer of the start vertex");
    detail::NamePool pool(g);
    auto edges = g.edges();
    int prev = r;
    int xk3 = -1;
    for (int i = 1; i <= k + 3; ++i) {
        int xi = pool.add("x" + std::to_string(i));
        edges.emplace_back(prev, xi);
        prev = xi;
        xk3 = xi;
    }
    edges.emplace_back(v, xk3);
    for (int w : layers.layer(k)) {
        if (w == v) continue;
        int wp = pool.add(g.name_of(w) + "'");
        edges.emplace_back(v, wp);
        edges.emplace_back(w, wp);
    }
    GadgetInstance inst;
    inst.type = GadgetType::BfsF;
    inst.target = Graph::from_edges(static_cast<int>(pool.names().size()), edges, pool.names());
    inst.query = LeafQuery{SearchKind::BFS, TreeKind::F, LeafKind::Branch, v};
    inst.source_graph = g;
    inst.source_r = r;
    inst.source_v = v;
    return inst;
}

/// 3-SAT source gadget: literal vertices induce the complement of the
/// matching x_i~x_i, clause vertices form an independent set adjacent to
/// their literals, and t is universal. t can be an F-branch leaf of an
/// ordering of the given MNS-family search iff the formula is satisfiable.
inline GadgetInstance sat_f_gadget(const CnfInstance& cnf, SearchKind kind = SearchKind::MNS) {
    cnf.validate();
    if (kind != SearchKind::LBFS && kind != SearchKind::LDFS && kind != SearchKind::MCS &&
        kind != SearchKind::MNS)
        throw Error("clause gadget queries an MNS-family search");
    int k = cnf.variables;
    int l = static_cast<int>(cnf.clauses.size());
    detail::NamePool pool;
    for (int i = 1; i <= k; ++i) pool.add("x" + std::to_string(i));
    for (int i = 1; i <= k; ++i) pool.add("~x" + std::to_string(i));
    for (int j = 1; j <= l; ++j) pool.add("c" + std::to_string(j));
    int t = pool.add("t");
    auto pos_vertex = [&](int var) { return var - 1; };
    auto neg_vertex = [&](int var) { return k + var - 1; };
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 2 * k; ++a)
        for (int b = a + 1; b < 2 * k; ++b)
            if (b != a + k) edges.emplace_back(a, b);  // complement of the matching
    for (int j = 0; j < l; ++j) {
        int cv = 2 * k + j;
        for (int lit : cnf.clauses[static_cast<size_t>(j)]) {
            int lv = lit > 0 ? pos_vertex(lit) : neg_vertex(-lit);
            edges.emplace_back(cv, lv);  // duplicates collapse in the builder
        }
    }
    for (int u = 0; u < t; ++u) edges.emplace_back(u, t);
    GadgetInstance inst;
    inst.type = GadgetType::SatF;
    inst.target = Graph::from_edges(t + 1, edges, pool.names());
    inst.query = LeafQuery{kind, TreeKind::F, LeafKind::Branch, t};
    inst.source_cnf = cnf;
    return inst;
}

/// Brute-force Hamiltonian path search.
inline bool has_hamiltonian_path(const Graph& g, int cap = kDefaultExhaustiveCap) {
    int n = g.vertex_count();
    if (n > cap) throw Error("Hamiltonian path brute force cap exceeded");
    if (n <= 1) return true;
    std::vector<bool> used(static_cast<size_t>(n), false);
    auto rec = [&](auto&& self, int u, int len) -> bool {
        if (len == n) return true;
        for (int w : g.neighbors(u)) {
            if (used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = true;
            if (self(self, w, len + 1)) return true;
            used[static_cast<size_t>(w)] = false;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        used.assign(static_cast<size_t>(n), false);
        used[static_cast<size_t>(s)] = true;
        if (rec(rec, s, 1)) return true;
    }
    return false;
}

struct GadgetReport {
    bool source_answer = false;
    bool target_answer = false;
    bool equivalent = false;
    std::vector<std::pair<std::string, std::string>> checks;
};

/// Decides the source problem by brute force and the target leaf query by
/// the exact solver, and asserts the reduction's structural claims.
inline GadgetReport verify_gadget(const GadgetInstance& inst, int cap = kDefaultExhaustiveCap) {
    GadgetReport rep;
    if (inst.target.vertex_count() > cap)
        throw Error("gadget verification cap exceeded: target has " +
                    std::to_string(inst.target.vertex_count()) + " vertices");
    switch (inst.type) {
        case GadgetType::DfsF: {
            rep.source_answer = has_hamiltonian_path(*inst.source_graph, cap);
            if (is_chordal(*inst.source_graph))
                rep.checks.emplace_back("target_chordal", is_chordal(inst.target) ? "true" : "FAIL");
            break;
        }
        case GadgetType::BfsF: {
            auto res = detail::exact_end_vertex_search(*inst.source_graph, inst.source_v,
                                                       SearchKind::BFS, inst.source_r, cap);
            rep.source_answer = res.answer;
            rep.checks.emplace_back("target_bipartite",
                                    is_bipartite(inst.target) ? "true" : "FAIL");
            break;
        }
        case GadgetType::SatF: {
            rep.source_answer = inst.source_cnf->satisfiable();
            int k = inst.source_cnf->variables;
            bool pairs_ok = true;
            for (int i = 0; i < k; ++i)
                if (inst.target.has_edge(i, k + i)) pairs_ok = false;
            rep.checks.emplace_back("matched_pairs_nonadjacent", pairs_ok ? "true" : "FAIL");
            int t = inst.query.vertex;
            rep.checks.emplace_back(
                "query_vertex_universal",
                inst.target.degree(t) == inst.target.vertex_count() - 1 ? "true" : "FAIL");
            break;
        }
    }
    auto res = detail::exact_leaf_search(inst.target, inst.query.vertex, inst.query.search,
                                         inst.query.tree, LeafKind::Branch, cap);
    rep.target_answer = res.answer;
    rep.equivalent = rep.source_answer == rep.target_answer;
    for (auto& [key, value] : rep.checks)
        if (value == "FAIL") rep.equivalent = false;
    return rep;
}

}  // namespace gsleaf
