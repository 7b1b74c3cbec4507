#pragma once

// Graph search trees and their leaves: searches, F-/L-trees, leaf
// recognition, hardness-reduction gadgets, and an exhaustive oracle.

#include "gsleaf/classify.hpp"
#include "gsleaf/gadget.hpp"
#include "gsleaf/graph.hpp"
#include "gsleaf/leaf.hpp"
#include "gsleaf/metrics.hpp"
#include "gsleaf/oracle.hpp"
#include "gsleaf/ordering.hpp"
#include "gsleaf/search.hpp"
#include "gsleaf/tree.hpp"
