#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gsleaf/graph.hpp"
#include "gsleaf/ordering.hpp"
#include "gsleaf/search.hpp"

namespace gsleaf {

enum class TreeKind { F, L };

inline std::string to_string(TreeKind k) { return k == TreeKind::F ? "f" : "l"; }

inline std::optional<TreeKind> tree_kind_from_string(const std::string& s) {
    if (s == "f" || s == "F") return TreeKind::F;
    if (s == "l" || s == "L") return TreeKind::L;
    return std::nullopt;
}

/// Rooted spanning tree as a parent map. parent[root] == -1.
struct RootedTree {
    int root = 0;
    std::vector<int> parent;

    int size() const { return static_cast<int>(parent.size()); }

    std::vector<std::vector<int>> children() const {
        std::vector<std::vector<int>> ch(parent.size());
        for (int v = 0; v < size(); ++v)
            if (v != root) ch[static_cast<size_t>(parent[static_cast<size_t>(v)])].push_back(v);
        return ch;
    }

    int child_count(int v) const {
        int c = 0;
        for (int u = 0; u < size(); ++u)
            if (u != root && parent[static_cast<size_t>(u)] == v) ++c;
        return c;
    }

    bool operator==(const RootedTree& o) const { return root == o.root && parent == o.parent; }
};

enum class LeafRole { RootLeaf, BranchLeaf, Internal };

/// The root counts as a leaf exactly when it has one child (tree degree 1);
/// a non-root vertex is a leaf exactly when it is childless.
inline LeafRole classify_leaf(const RootedTree& t, int v) {
    int c = t.child_count(v);
    if (v == t.root) return c == 1 ? LeafRole::RootLeaf : LeafRole::Internal;
    return c == 0 ? LeafRole::BranchLeaf : LeafRole::Internal;
}

/// All tree-degree-1 vertices.
inline std::vector<int> leaves(const RootedTree& t) {
    std::vector<int> deg(t.parent.size(), 0);
    for (int v = 0; v < t.size(); ++v) {
        if (v == t.root) continue;
        ++deg[static_cast<size_t>(v)];
        ++deg[static_cast<size_t>(t.parent[static_cast<size_t>(v)])];
    }
    std::vector<int> out;
    for (int v = 0; v < t.size(); ++v)
        if (deg[static_cast<size_t>(v)] == 1) out.push_back(v);
    return out;
}

/// Search tree of an ordering: each later vertex hangs off its leftmost
/// neighbor (F) or its rightmost earlier neighbor (L). Requires sigma to be
/// a generic-search ordering, i.e. every non-first vertex has an earlier
/// neighbor.
inline RootedTree build_tree(const Graph& g, const Ordering& sigma, TreeKind kind) {
    if (sigma.size() != g.vertex_count()) throw Error("ordering does not match graph");
    if (sigma.size() == 0) throw Error("tree of an empty ordering");
    RootedTree t;
    t.root = sigma.first();
    t.parent.assign(static_cast<size_t>(sigma.size()), -1);
    for (int i = 2; i <= sigma.size(); ++i) {
        int v = sigma.at(i);
        int best = -1, best_pos = 0;
        for (int w : g.neighbors(v)) {
            int p = sigma.position(w);
            if (kind == TreeKind::F) {
                if (best < 0 || p < best_pos) best = w, best_pos = p;
            } else {
                if (p < i && (best < 0 || p > best_pos)) best = w, best_pos = p;
            }
        }
        if (best < 0 || best_pos >= i)
            throw Error("not a search ordering: vertex '" + g.name_of(v) +
                        "' has no earlier neighbor");
        t.parent[static_cast<size_t>(v)] = best;
    }
    return t;
}

/// DFS tree test: every graph edge must join an ancestor/descendant pair.
inline bool is_dfs_l_tree(const Graph& g, const RootedTree& t) {
    int n = g.vertex_count();
    if (t.size() != n) throw Error("tree does not match graph");
    auto ch = t.children();
    std::vector<int> tin(static_cast<size_t>(n), 0), tout(static_cast<size_t>(n), 0);
    int timer = 0;
    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> stack{{t.root, 0}};
    tin[static_cast<size_t>(t.root)] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < ch[static_cast<size_t>(f.v)].size()) {
            int w = ch[static_cast<size_t>(f.v)][f.next++];
            tin[static_cast<size_t>(w)] = timer++;
            stack.push_back({w, 0});
        } else {
            tout[static_cast<size_t>(f.v)] = timer++;
            stack.pop_back();
        }
    }
    auto comparable = [&](int u, int v) {
        return (tin[static_cast<size_t>(u)] <= tin[static_cast<size_t>(v)] &&
                tout[static_cast<size_t>(v)] <= tout[static_cast<size_t>(u)]) ||
               (tin[static_cast<size_t>(v)] <= tin[static_cast<size_t>(u)] &&
                tout[static_cast<size_t>(u)] <= tout[static_cast<size_t>(v)]);
    };
    for (auto [u, v] : g.edges())
        if (!comparable(u, v)) return false;
    return true;
}

/// Preorder traversal of the tree itself, exploring each vertex's children
/// by ascending priority. With `t` the L-tree of a DFS ordering of g and s
/// its root, the result is again a DFS ordering of g with the same L-tree.
inline Ordering dfs_order_of_tree(const RootedTree& t, int s,
                                  const std::vector<int>& priority) {
    if (s != t.root) throw Error("traversal must start at the tree root");
    if (static_cast<int>(priority.size()) != t.size())
        throw Error("child policy must rank every vertex");
    auto ch = t.children();
    for (auto& c : ch)
        std::sort(c.begin(), c.end(), [&](int a, int b) {
            return priority[static_cast<size_t>(a)] < priority[static_cast<size_t>(b)];
        });
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(t.size()));
    std::vector<int> stack{s};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        seq.push_back(v);
        const auto& c = ch[static_cast<size_t>(v)];
        for (auto it = c.rbegin(); it != c.rend(); ++it) stack.push_back(*it);
    }
    return Ordering(std::move(seq));
}

inline Ordering dfs_order_of_tree(const RootedTree& t, int s) {
    std::vector<int> identity(static_cast<size_t>(t.size()));
    for (int v = 0; v < t.size(); ++v) identity[static_cast<size_t>(v)] = v;
    return dfs_order_of_tree(t, s, identity);
}

/// "root <name>" header plus one "child parent" line per non-root vertex.
inline std::string format_tree(const Graph& g, const RootedTree& t) {
    std::ostringstream out;
    out << "root " << g.name_of(t.root) << '\n';
    for (int v = 0; v < t.size(); ++v)
        if (v != t.root)
            out << g.name_of(v) << ' ' << g.name_of(t.parent[static_cast<size_t>(v)]) << '\n';
    return out.str();
}

}  // namespace gsleaf
