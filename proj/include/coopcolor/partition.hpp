#pragma once

#include <functional>
#include <map>
#include <vector>

#include "coopcolor/decomposition.hpp"
#include "coopcolor/family.hpp"
#include "coopcolor/search.hpp"
#include "coopcolor/solvers.hpp"

namespace coopcolor {

// Introspection snapshot of a two-phase partition solve, filled on request.
struct PartitionState {
  std::vector<Split> splits;                      // one per member, index order
  std::vector<Vertex> heavy;                      // U, ascending
  std::map<Vertex, std::vector<int>> inventories;  // u -> C_u (ascending)
  CooperativeColoring phase1;                     // colors taken by U
  std::map<Vertex, int> available_counts;         // final tally per non-U vertex
};

// Two-phase star-forest solver. Phase 0 splits every member into leaves
// (plus isolated vertices) and centers. Heavy vertices (center in more than
// epsilon*(l_v - 1) members) each sample a single center-membership and take
// it; everyone else takes a leaf-membership whose center did not claim it,
// resampling the blocking heavy centers when none is left. Sat with a
// verified witness or Unknown at resample_cap. Preconditions: every member
// is a star forest and every vertex has at least 2 memberships.
SearchOutcome star_partition_solve(const GraphFamily& family, const SolverParams& params,
                                   PartitionState* state = nullptr);

using Splitter = std::function<Split(const Graph&)>;
// Sub-solvers receive list-mode sub-families (member i's vertex set = the
// vertices allowed color i) and must honor membership lists.
using SubSolver = std::function<SearchOutcome(const GraphFamily&, const SolverParams&)>;

// The same pipeline with pluggable splits and sub-solvers. With no heavy
// vertices the A-restricted family goes straight to sub_a. Otherwise heavy
// vertices draw inventories of params.inventory_size center-memberships
// (clamped to what they have), sub_b colors the inventory-restricted
// B-family, availability discounts the colors heavy neighbors took, and
// sub_a extends over the available leaf-memberships; empty availability
// resamples the blocking inventories. Sub-solver failures and caps yield
// Unknown — never Unsat, since the split pipeline is incomplete.
SearchOutcome partition_solve_generic(const GraphFamily& family, const Splitter& splitter,
                                      const SubSolver& sub_a, const SubSolver& sub_b,
                                      const SolverParams& params,
                                      PartitionState* state = nullptr);

}  // namespace coopcolor
