#pragma once

#include <compare>
#include <string>
#include <vector>

#include "coopcolor/coloring.hpp"
#include "coopcolor/family.hpp"
#include "coopcolor/graph.hpp"

namespace coopcolor {

struct ColoredEdge {
  Edge e;
  int color = 0;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Multigraph with edge coloring phi. Parallel edges are allowed only with
// distinct colors: duplicate (pair, color) entries collapse on construction.
class EdgeColoredMultigraph {
 public:
  EdgeColoredMultigraph() = default;
  // Colors must lie in 1..palette_size; endpoints in the vertex set.
  EdgeColoredMultigraph(std::vector<Vertex> vertices, std::vector<ColoredEdge> colored_edges,
                        int palette_size);

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<ColoredEdge>& colored_edges() const { return edges_; }
  int palette_size() const { return palette_; }
  bool has_vertex(Vertex v) const;

  // Max over vertices of incident colored-edge count (parallel edges each
  // count once per color).
  int max_degree() const;

  friend bool operator==(const EdgeColoredMultigraph& a, const EdgeColoredMultigraph& b) {
    return a.verts_ == b.verts_ && a.edges_ == b.edges_ && a.palette_ == b.palette_;
  }

 private:
  std::vector<Vertex> verts_;        // sorted, unique
  std::vector<ColoredEdge> edges_;   // sorted, unique
  int palette_ = 0;
};

// True iff no edge e = {u,v} has phi(e) = sigma(u) = sigma(v). Fails (with
// diagnostic) when sigma misses a vertex or uses a color outside 1..palette.
bool verify_adapted(const EdgeColoredMultigraph& m, const CooperativeColoring& sigma,
                    std::string* why = nullptr);

// Colors the edges of member i with color i and unions the results over the
// family's universal vertex set. Adapted colorings of the output are exactly
// the cooperative colorings of the input.
EdgeColoredMultigraph family_to_adapted(const GraphFamily& family);

// Inverse direction: member i carries exactly the color-i edges on the full
// vertex set (common mode). Requires palette_size >= every edge color.
GraphFamily adapted_to_family(const EdgeColoredMultigraph& m, int palette_size);

// Sub-instance on a vertex subset: keeps colored edges with both endpoints
// in `keep`, same palette.
EdgeColoredMultigraph induced_multigraph(const EdgeColoredMultigraph& m,
                                         std::span<const Vertex> keep);

}  // namespace coopcolor
