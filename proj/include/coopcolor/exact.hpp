#pragma once

#include <cstdint>
#include <vector>

#include "coopcolor/family.hpp"
#include "coopcolor/multigraph.hpp"
#include "coopcolor/search.hpp"

namespace coopcolor {

// Backtracking search for an adapted coloring. Variable order: minimum
// remaining values, ties by lowest vertex id; value order: ascending color.
// Propagation: assigning sigma(u) = c removes c from every neighbor joined
// to u by a color-c edge. Unsat only on exhaustion; budgets yield Unknown.
SearchOutcome solve_adapted_exact(const EdgeColoredMultigraph& m,
                                  const std::vector<int>& palette, const Budget& budget = {});

// Per-vertex palette variant; allowed[i] lists the colors open to the i-th
// vertex of m.vertices(). tie_seed permutes only the MRV tie-break order
// (used by the portfolio); tie_seed 0 keeps lowest-id ties.
SearchOutcome solve_adapted_exact(const EdgeColoredMultigraph& m,
                                  const std::vector<std::vector<int>>& allowed,
                                  const Budget& budget = {}, std::uint64_t tie_seed = 0);

// Adapted-route solve of the cooperative problem: palette of vertex v is its
// membership list. The returned witness is checked by verify_cooperative.
SearchOutcome solve_cooperative_exact(const GraphFamily& family, const Budget& budget = {});

// Runs `workers` independent searches (worker 0 canonical, others with
// seeded tie orders) in parallel and returns the first definitive outcome;
// Unknown only if every worker exhausted its budget.
SearchOutcome solve_adapted_portfolio(const EdgeColoredMultigraph& m,
                                      const std::vector<std::vector<int>>& allowed,
                                      const Budget& budget, int workers,
                                      std::uint64_t seed = 0);

SearchOutcome solve_cooperative_portfolio(const GraphFamily& family, const Budget& budget,
                                          int workers, std::uint64_t seed = 0);

}  // namespace coopcolor
