#pragma once

#include <string>
#include <vector>

#include "coopcolor/coloring.hpp"
#include "coopcolor/graph.hpp"

namespace coopcolor {

// Ordered family G_1..G_k over a universal vertex set V. The general shape
// is list mode (members cover V between them); common mode is the special
// case where every member spans all of V.
class GraphFamily {
 public:
  // Universal set is taken to be the union of the member vertex sets.
  explicit GraphFamily(std::vector<Graph> members);

  const std::vector<Graph>& members() const { return members_; }
  const Graph& member(int i) const;  // 1-based
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<Vertex>& universal_vertices() const { return universe_; }

  bool is_common_mode() const { return common_; }
  // 1-based indices i with v in V(G_i), ascending; empty if v unknown.
  std::vector<int> memberships(Vertex v) const;
  int membership_count(Vertex v) const { return static_cast<int>(memberships(v).size()); }

 private:
  std::vector<Graph> members_;
  std::vector<Vertex> universe_;  // sorted union of member vertex sets
  bool common_ = false;
};

// True iff each color class R_i = c^{-1}(i) is independent in G_i and every
// vertex is assigned one of its own memberships. With `why` set, a failed
// check stores one human-readable reason.
bool verify_cooperative(const GraphFamily& family, const CooperativeColoring& c,
                        std::string* why = nullptr);

}  // namespace coopcolor
