#pragma once

#include "coopcolor/graph.hpp"
#include "coopcolor/search.hpp"

namespace coopcolor {

// Number of nodes of the complete q-ary tree of height h.
std::uint64_t qary_tree_size(int q, int h);

// Searches g for the complete q-ary tree of height h as a subgraph (not
// necessarily induced). Rooted DFS over BFS-numbered pattern nodes with
// disjointness backtracking; sibling images are kept ascending to break the
// permutation symmetry between isomorphic sibling subtrees. Sat carries a
// TreeEmbedding; Unsat means exhaustion; Unknown means the budget fired.
SearchOutcome find_qary_tree(const Graph& g, int q, int h, const Budget& budget = {},
                             int pattern_cap = 63);

}  // namespace coopcolor
