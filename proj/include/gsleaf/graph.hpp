#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gsleaf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph. Vertices are dense ids 0..n-1 with an
/// optional name table for I/O. Adjacency lists are sorted, symmetric, and
/// free of self-loops and duplicates by construction.
class Graph {
public:
    Graph() = default;

    /// Build from an edge list. Deduplicates; throws on self-loops or
    /// out-of-range endpoints. `names` may be empty (ids print as decimals).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> names = {}) {
        if (n < 0) throw Error("vertex count must be non-negative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw Error("edge endpoint out of range");
            if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
            g.adj_[static_cast<size_t>(u)].push_back(v);
            g.adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& nbrs : g.adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            g.m_ += static_cast<int>(nbrs.size());
        }
        g.m_ /= 2;
        if (!names.empty()) {
            if (static_cast<int>(names.size()) != n)
                throw Error("name table size does not match vertex count");
            g.names_ = std::move(names);
            for (int v = 0; v < n; ++v) g.name_index_.emplace(g.names_[static_cast<size_t>(v)], v);
        }
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        const auto& nbrs = adj_[static_cast<size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    bool has_names() const { return !names_.empty(); }

    std::string name_of(int v) const {
        if (v < 0 || v >= n_) throw Error("vertex id out of range");
        if (names_.empty()) return std::to_string(v);
        return names_[static_cast<size_t>(v)];
    }

    std::optional<int> id_of(const std::string& name) const {
        if (!names_.empty()) {
            auto it = name_index_.find(name);
            if (it != name_index_.end()) return it->second;
            return std::nullopt;
        }
        // unnamed graphs accept decimal ids
        try {
            size_t pos = 0;
            int v = std::stoi(name, &pos);
            if (pos == name.size() && v >= 0 && v < n_) return v;
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }

    /// id_of that throws with a useful message.
    int vertex_by_name(const std::string& name) const {
        auto v = id_of(name);
        if (!v) throw Error("unknown vertex '" + name + "'");
        return *v;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> name_index_;
};

/// Induced subgraph on `keep` (ids of g). Returns the subgraph plus the
/// new-id -> old-id map. Names carry over.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                           const std::vector<int>& keep) {
    std::vector<int> old_ids = keep;
    std::sort(old_ids.begin(), old_ids.end());
    old_ids.erase(std::unique(old_ids.begin(), old_ids.end()), old_ids.end());
    std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < old_ids.size(); ++i) {
        int v = old_ids[i];
        if (v < 0 || v >= g.vertex_count()) throw Error("induced subgraph: vertex out of range");
        new_id[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : old_ids)
        for (int v : g.neighbors(u))
            if (u < v && new_id[static_cast<size_t>(v)] >= 0)
                edges.emplace_back(new_id[static_cast<size_t>(u)], new_id[static_cast<size_t>(v)]);
    std::vector<std::string> names;
    if (g.has_names()) {
        names.reserve(old_ids.size());
        for (int v : old_ids) names.push_back(g.name_of(v));
    }
    return {Graph::from_edges(static_cast<int>(old_ids.size()), edges, std::move(names)), old_ids};
}

inline std::pair<Graph, std::vector<int>> remove_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(static_cast<size_t>(g.vertex_count() - 1));
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

namespace detail {

inline bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

inline Graph load_dimacs_graph(std::istream& in) {
    std::string line;
    int n = -1;
    long long m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m_declared) || (kind != "edge" && kind != "col"))
                throw Error("line " + std::to_string(lineno) + ": malformed DIMACS problem line");
            continue;
        }
        if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v))
                throw Error("line " + std::to_string(lineno) + ": malformed DIMACS edge line");
            if (n < 0) throw Error("line " + std::to_string(lineno) + ": edge before problem line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw Error("line " + std::to_string(lineno) + ": vertex out of range 1.." +
                            std::to_string(n));
            if (u == v)
                throw Error("line " + std::to_string(lineno) + ": self-loop rejected");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw Error("line " + std::to_string(lineno) + ": unrecognized DIMACS line '" + tag + "'");
    }
    if (n < 0) throw Error("empty graph document rejected");
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) names.push_back(std::to_string(v));
    return Graph::from_edges(n, edges, std::move(names));
}

}  // namespace detail

/// Parse a graph document. Two formats, auto-detected on the first
/// non-comment line:
///   - edge list: lines "u v" (vertex names), '#' comments, blank lines
///     allowed; ids assigned in first-appearance order; duplicates collapse
///   - DIMACS: "p edge n m" header and "e u v" lines (1-based ids)
/// Self-loops are rejected with the offending line number; so is an empty
/// document.
inline Graph load_graph(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    // DIMACS iff a well-formed problem line exists; otherwise edge list
    // (vertex names like "c" or "e" must not trip the detection)
    std::istringstream probe(content);
    std::string line;
    while (std::getline(probe, line)) {
        std::istringstream ls(line);
        std::string tag, kind;
        int n, m;
        if (ls >> tag >> kind >> n >> m && tag == "p" && (kind == "edge" || kind == "col")) {
            std::istringstream again(content);
            return detail::load_dimacs_graph(again);
        }
    }

    std::istringstream body(content);
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(names.size());
        names.push_back(s);
        index.emplace(s, id);
        return id;
    };
    int lineno = 0;
    while (std::getline(body, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b))
            throw Error("line " + std::to_string(lineno) + ": expected 'u v'");
        if (ls >> extra)
            throw Error("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        if (a == b)
            throw Error("line " + std::to_string(lineno) + ": self-loop '" + a + " " + b +
                        "' rejected");
        int ia = intern(a);  // sequenced: ids follow first appearance
        int ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    if (names.empty()) throw Error("empty graph document rejected");
    int n = static_cast<int>(names.size());
    return Graph::from_edges(n, edges, std::move(names));
}

inline Graph load_graph(const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
}

/// Edge-list serialization, one edge per line in ascending id order.
inline std::string format_graph(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << g.name_of(u) << ' ' << g.name_of(v) << '\n';
    return out.str();
}

}  // namespace gsleaf
