#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopcolor/coloring.hpp"
#include "coopcolor/graph.hpp"

namespace coopcolor {

enum class Status { Sat, Unsat, Unknown };

std::string to_string(Status s);

// 0 means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
};

struct SearchStats {
  std::uint64_t nodes = 0;         // decisions expanded
  std::uint64_t propagations = 0;  // color removals by forward checking
  std::uint64_t resamples = 0;     // randomized solvers only
  double wall_ms = 0.0;
  bool budget_hit = false;
};

// Symmetric local-lemma check. satisfied <=> e*p*(D+1) <= 1, evaluated as
// p*(D+1) <= 1/e so that the boundary instance p = 1/(2e), D = 1 lands
// exactly on equality in double arithmetic.
struct LLLCheck {
  double p = 0.0;
  std::int64_t D = 0;
  bool satisfied = false;
};

// Injective embedding of the complete q-ary tree of height h. Pattern nodes
// are BFS-numbered (children of j are q*j+1 .. q*j+q); mapping[j] is the
// host vertex for pattern node j.
struct TreeEmbedding {
  int q = 0;
  int h = 0;
  std::vector<Vertex> mapping;
};

struct SearchOutcome {
  Status status = Status::Unknown;
  std::optional<CooperativeColoring> witness;
  SearchStats stats;
  std::optional<LLLCheck> lll;             // set by lll_solve
  std::optional<TreeEmbedding> embedding;  // set by find_qary_tree on Sat
};

}  // namespace coopcolor
