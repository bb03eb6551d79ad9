#pragma once

#include <optional>
#include <vector>

#include "coopcolor/graph.hpp"
#include "coopcolor/treedepth.hpp"

namespace coopcolor {

// Vertex bipartition with a certified bound: every A-vertex has at most
// neighbor_bound neighbors inside B. Checked at construction against the
// graph it splits.
class Split {
 public:
  Split(const Graph& g, std::vector<Vertex> a, std::vector<Vertex> b, int neighbor_bound);

  const std::vector<Vertex>& a() const { return a_; }
  const std::vector<Vertex>& b() const { return b_; }
  int neighbor_bound() const { return bound_; }
  bool in_b(Vertex v) const;

 private:
  std::vector<Vertex> a_;  // sorted
  std::vector<Vertex> b_;  // sorted
  int bound_ = 0;
};

// Leaves-and-isolated vs. centers. Canonical center of a K_2 component is
// the lower id; isolated vertices go to A (zero B-neighbors). bound = 1.
Split star_split(const Graph& g);

// A = vertices of degree < 2q^h, B = the rest; bound = 2q^h - 1.
Split threshold_split(const Graph& g, int q, int h);

// Contracts each part to one vertex (part index), dropping loops and
// parallels. parts must partition V(g).
Graph quotient(const Graph& g, const std::vector<std::vector<Vertex>>& parts);

// A partition of a base graph whose quotient is contained in the closure of
// an elimination forest on the part indices.
struct QuotientInstance {
  Graph base;
  std::vector<std::vector<Vertex>> parts;
  Graph quotient_graph;           // on part indices 0..k-1
  RootedForest elimination_forest;  // on part indices; quotient <= its closure
  int max_part_size = 0;
};

// Builds the quotient and a minimum-height elimination forest per component
// via treedepth_exact, rejecting components whose treedepth exceeds h_cap.
// A caller-supplied forest skips the search and is verified instead.
QuotientInstance build_quotient_instance(const Graph& g,
                                         const std::vector<std::vector<Vertex>>& parts,
                                         int h_cap,
                                         const std::optional<RootedForest>& forest = {});

// Root parts form B, everything else A; bound = max part size. The
// component_forests entries are elimination forests for the components of
// the A-side quotient (ordered by smallest part index), each of height at
// most one less than the parent forest's.
struct QuotientSplit {
  Split split;
  std::vector<RootedForest> component_forests;
};

QuotientSplit quotient_split(const QuotientInstance& qi);

}  // namespace coopcolor
