#pragma once

#include <map>

#include "coopcolor/graph.hpp"

namespace coopcolor {

// Total or partial assignment vertex -> color. Colors are 1-based positive
// integers. Read against a GraphFamily the color is a member index (v is
// placed in R_color); read against an EdgeColoredMultigraph it is an adapted
// coloring sigma. std::map keeps iteration order deterministic.
struct CooperativeColoring {
  std::map<Vertex, int> assignment;

  bool assigned(Vertex v) const { return assignment.count(v) != 0; }
  // 0 if unassigned.
  int color_of(Vertex v) const {
    auto it = assignment.find(v);
    return it == assignment.end() ? 0 : it->second;
  }
  void set(Vertex v, int color) { assignment[v] = color; }

  friend bool operator==(const CooperativeColoring&, const CooperativeColoring&) = default;
};

}  // namespace coopcolor
