#pragma once

// Named graphs shared across the test suite.

#include "gsleaf/gsleaf.hpp"

namespace testgraphs {

using gsleaf::Graph;

// path a-b-c
inline Graph p3() { return gsleaf::load_graph("a b\nb c\n"); }

// path a-b-c-d
inline Graph p4() { return gsleaf::load_graph("a b\nb c\nc d\n"); }

// path a-b-c-d-e
inline Graph p5() { return gsleaf::load_graph("a b\nb c\nc d\nd e\n"); }

// 4-cycle a-b-c-d-a
inline Graph c4() { return gsleaf::load_graph("a b\nb c\nc d\nd a\n"); }

// 5-cycle
inline Graph c5() { return gsleaf::load_graph("a b\nb c\nc d\nd e\ne a\n"); }

inline Graph k2() { return gsleaf::load_graph("a b\n"); }

inline Graph k3() { return gsleaf::load_graph("a b\nb c\nc a\n"); }

// star with center c and three leaves
inline Graph star3() { return gsleaf::load_graph("c l1\nc l2\nc l3\n"); }

// triangle a,b,c plus pendant p on a
inline Graph k3_pendant() { return gsleaf::load_graph("a b\nb c\nc a\na p\n"); }

// the 6-vertex, 9-edge worked example: path u-v-w-x-y plus z adjacent to all
inline Graph fig1() {
    return gsleaf::load_graph("u v\nv w\nw x\nx y\nw z\nz u\nz v\nz x\nz y\n");
}

}  // namespace testgraphs
