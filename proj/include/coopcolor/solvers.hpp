#pragma once

#include <cstdint>

#include "coopcolor/family.hpp"
#include "coopcolor/search.hpp"

namespace coopcolor {

struct SolverParams {
  double epsilon = 0.5;              // heavy-vertex threshold factor
  int inventory_size = 1;            // colors sampled per heavy vertex
  std::uint64_t resample_cap = 1'000'000;
  std::uint64_t seed = 0;
};

// epsilon in (0, 1/2], positive caps.
void validate_params(const SolverParams& params);

// satisfied <=> e*p*(D+1) <= 1. Requires 0 <= p <= 1, D >= 0.
LLLCheck lll_condition(double p, std::int64_t D);

// Assigns every vertex a uniform member index among its memberships; while
// some colored edge has both endpoints on its own color, resamples both
// endpoints of the lowest such edge. Sat with a verified witness, Unknown at
// resample_cap. The outcome reports lll_condition(1/l_min^2, 2*l_max*d_max).
SearchOutcome lll_solve(const GraphFamily& family, const SolverParams& params);

// Baseline: lowest available member index in vertex-id order ("available" =
// no neighbor in that member already took it). Unknown when stuck.
SearchOutcome greedy_solve(const GraphFamily& family);

// k independent random star forests on n shared vertices: repeatedly pick an
// unused vertex as center and attach a uniform 1..d-sized set of unused
// vertices as leaves until none remain. Byte-identical per seed.
GraphFamily sample_random_star_family(int n, int k, int d, std::uint64_t seed);

}  // namespace coopcolor
