#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "gsleaf/gsleaf.hpp"
#include "helpers.hpp"

using namespace gsleaf;
using namespace testgraphs;

TEST_CASE("F-tree of the worked BFS ordering", "[tree]") {
    Graph g = fig1();
    Ordering sigma = parse_ordering(g, "w,v,x,z,u,y");
    RootedTree t = build_tree(g, sigma, TreeKind::F);
    auto parent = [&](const std::string& c) {
        return g.name_of(t.parent[size_t(g.vertex_by_name(c))]);
    };
    REQUIRE(g.name_of(t.root) == "w");
    REQUIRE(parent("v") == "w");
    REQUIRE(parent("x") == "w");
    REQUIRE(parent("z") == "w");
    REQUIRE(parent("u") == "v");
    REQUIRE(parent("y") == "x");
    std::set<std::string> leaf_names;
    for (int v : leaves(t)) leaf_names.insert(g.name_of(v));
    REQUIRE(leaf_names == std::set<std::string>{"z", "u", "y"});
    REQUIRE(classify_leaf(t, g.vertex_by_name("z")) == LeafRole::BranchLeaf);
}

TEST_CASE("small tree constructions", "[tree]") {
    Graph two = k2();
    RootedTree t2 = build_tree(two, identity_ordering(2), TreeKind::L);
    REQUIRE(t2.parent[1] == 0);
    REQUIRE(classify_leaf(t2, 0) == LeafRole::RootLeaf);

    Graph tri = k3();
    RootedTree tl = build_tree(tri, parse_ordering(tri, "a,b,c"), TreeKind::L);
    REQUIRE(tl.parent[size_t(tri.vertex_by_name("b"))] == tri.vertex_by_name("a"));
    REQUIRE(tl.parent[size_t(tri.vertex_by_name("c"))] == tri.vertex_by_name("b"));

    Graph path = p3();
    RootedTree pt = build_tree(path, parse_ordering(path, "a,b,c"), TreeKind::L);
    REQUIRE(classify_leaf(pt, path.vertex_by_name("b")) == LeafRole::Internal);

    Graph two_comp = load_graph("a b\nc d\n");
    REQUIRE_THROWS_WITH(build_tree(two_comp, parse_ordering(two_comp, "a,b,c,d"), TreeKind::F),
                        Catch::Matchers::ContainsSubstring("no earlier neighbor"));
}

TEST_CASE("ancestor-descendant test for DFS trees", "[tree]") {
    Graph tri = k3();
    RootedTree path_tree = build_tree(tri, parse_ordering(tri, "a,b,c"), TreeKind::L);
    REQUIRE(is_dfs_l_tree(tri, path_tree));

    RootedTree star;  // a as root, b and c as its children: edge bc joins siblings
    star.root = tri.vertex_by_name("a");
    star.parent = {-1, star.root, star.root};
    REQUIRE_FALSE(is_dfs_l_tree(tri, star));

    Graph cyc = c4();
    RootedTree spine = build_tree(cyc, parse_ordering(cyc, "a,b,c,d"), TreeKind::L);
    REQUIRE(is_dfs_l_tree(cyc, spine));
}

TEST_CASE("tree traversal with a child policy", "[tree]") {
    Graph path = p3();
    RootedTree t = build_tree(path, parse_ordering(path, "a,b,c"), TreeKind::L);
    REQUIRE(format_ordering(path, dfs_order_of_tree(t, t.root)) == "a,b,c");
    REQUIRE_THROWS(dfs_order_of_tree(t, path.vertex_by_name("b")));

    Graph st = load_graph("r l1\nr l2\n");
    RootedTree s = build_tree(st, parse_ordering(st, "r,l1,l2"), TreeKind::F);
    std::vector<int> prefer_l2{0, 2, 1};  // lower rank first
    REQUIRE(format_ordering(st, dfs_order_of_tree(s, s.root, prefer_l2)) == "r,l2,l1");
}

TEST_CASE("tree serialization", "[tree]") {
    Graph path = p3();
    RootedTree t = build_tree(path, parse_ordering(path, "b,a,c"), TreeKind::F);
    REQUIRE(format_tree(path, t) == "root b\na b\nc b\n");
}

TEST_CASE("both tree flavors are spanning trees", "[tree][property]") {
    std::mt19937 rng(5);
    for (int n = 2; n <= 5; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            Ordering o = run_search(g, SearchKind::GS, TieBreak::arbitrary(rng()));
            for (TreeKind k : {TreeKind::F, TreeKind::L}) {
                RootedTree t = build_tree(g, o, k);
                // n-1 parent edges, all graph edges, reaching the root
                int edges = 0;
                for (int v = 0; v < n; ++v) {
                    if (v == t.root) {
                        REQUIRE(t.parent[size_t(v)] == -1);
                        continue;
                    }
                    ++edges;
                    REQUIRE(g.has_edge(v, t.parent[size_t(v)]));
                    int hops = 0, cur = v;
                    while (cur != t.root && hops <= n) cur = t.parent[size_t(cur)], ++hops;
                    REQUIRE(cur == t.root);
                }
                REQUIRE(edges == n - 1);
            }
            return true;
        });
}

TEST_CASE("DFS orderings yield DFS L-trees and survive the round trip",
          "[tree][property]") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 5; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            EnumerateOptions opts;
            enumerate_orderings(g, SearchKind::DFS, opts, [&](const Ordering& o) {
                RootedTree t = build_tree(g, o, TreeKind::L);
                REQUIRE(is_dfs_l_tree(g, t));
                // any tree DFS from the root reproduces a DFS ordering of g
                // with the same L-tree
                std::vector<int> priority(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v) priority[size_t(v)] = v;
                std::shuffle(priority.begin(), priority.end(), rng);
                Ordering tau = dfs_order_of_tree(t, t.root, priority);
                REQUIRE(is_search_ordering(g, SearchKind::DFS, tau));
                REQUIRE(build_tree(g, tau, TreeKind::L) == t);
                return true;
            });
            return true;
        });
}

TEST_CASE("the end-vertex is a branch leaf of both trees", "[tree][property]") {
    std::mt19937 rng(13);
    for (int n = 2; n <= 5; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            for (SearchKind k : kAllSearchKinds) {
                Ordering o = run_search(g, k, TieBreak::arbitrary(rng()));
                for (TreeKind tk : {TreeKind::F, TreeKind::L})
                    REQUIRE(classify_leaf(build_tree(g, o, tk), o.last()) ==
                            LeafRole::BranchLeaf);
            }
            return true;
        });
}

TEST_CASE("tree flavors agree exactly where extreme earlier neighbors agree",
          "[tree][property]") {
    for (int n = 2; n <= 5; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            Ordering o = run_search(g, SearchKind::GS);
            RootedTree f = build_tree(g, o, TreeKind::F);
            RootedTree l = build_tree(g, o, TreeKind::L);
            for (int v = 0; v < n; ++v) {
                if (v == f.root) continue;
                int leftmost = -1, rightmost = -1;
                for (int w : g.neighbors(v))
                    if (o.position(w) < o.position(v)) {
                        if (leftmost == -1 || o.position(w) < o.position(leftmost)) leftmost = w;
                        if (rightmost == -1 || o.position(w) > o.position(rightmost)) rightmost = w;
                    }
                REQUIRE(f.parent[size_t(v)] == leftmost);
                REQUIRE(l.parent[size_t(v)] == rightmost);
                REQUIRE((f.parent[size_t(v)] == l.parent[size_t(v)]) ==
                        (leftmost == rightmost));
            }
            return true;
        });
}
