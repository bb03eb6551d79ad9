#include "coopcolor/multigraph.hpp"

#include <algorithm>
#include <map>

#include "coopcolor/errors.hpp"

namespace coopcolor {

EdgeColoredMultigraph::EdgeColoredMultigraph(std::vector<Vertex> vertices,
                                             std::vector<ColoredEdge> colored_edges,
                                             int palette_size)
    : verts_(std::move(vertices)), edges_(std::move(colored_edges)), palette_(palette_size) {
  if (palette_ < 1) throw ContractError("palette size must be positive");
  for (Vertex v : verts_) {
    if (v < 0) throw ContractError("negative vertex id " + std::to_string(v));
  }
  std::sort(verts_.begin(), verts_.end());
  verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
  for (ColoredEdge& ce : edges_) {
    ce.e = make_edge(ce.e.u, ce.e.v);
    if (!std::binary_search(verts_.begin(), verts_.end(), ce.e.u) ||
        !std::binary_search(verts_.begin(), verts_.end(), ce.e.v)) {
      throw ContractError("colored edge endpoint outside the vertex set");
    }
    if (ce.color < 1 || ce.color > palette_) {
      throw ContractError("edge color " + std::to_string(ce.color) + " outside palette 1.." +
                          std::to_string(palette_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeColoredMultigraph::has_vertex(Vertex v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

int EdgeColoredMultigraph::max_degree() const {
  std::map<Vertex, int> deg;
  for (const ColoredEdge& ce : edges_) {
    ++deg[ce.e.u];
    ++deg[ce.e.v];
  }
  int best = 0;
  for (const auto& [v, d] : deg) best = std::max(best, d);
  return best;
}

bool verify_adapted(const EdgeColoredMultigraph& m, const CooperativeColoring& sigma,
                    std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  for (Vertex v : m.vertices()) {
    int c = sigma.color_of(v);
    if (c == 0) return fail("vertex " + std::to_string(v) + " unassigned");
    if (c < 1 || c > m.palette_size()) {
      return fail("vertex " + std::to_string(v) + " colored " + std::to_string(c) +
                  " outside palette 1.." + std::to_string(m.palette_size()));
    }
  }
  for (const ColoredEdge& ce : m.colored_edges()) {
    if (sigma.color_of(ce.e.u) == ce.color && sigma.color_of(ce.e.v) == ce.color) {
      return fail("edge (" + std::to_string(ce.e.u) + "," + std::to_string(ce.e.v) +
                  ") with color " + std::to_string(ce.color) +
                  " has both endpoints colored " + std::to_string(ce.color));
    }
  }
  return true;
}

EdgeColoredMultigraph family_to_adapted(const GraphFamily& family) {
  std::vector<ColoredEdge> edges;
  for (int i = 1; i <= family.size(); ++i) {
    for (const Edge& e : family.member(i).edges()) edges.push_back({e, i});
  }
  return EdgeColoredMultigraph(family.universal_vertices(), std::move(edges), family.size());
}

GraphFamily adapted_to_family(const EdgeColoredMultigraph& m, int palette_size) {
  if (palette_size < 1) throw ContractError("palette size must be positive");
  for (const ColoredEdge& ce : m.colored_edges()) {
    if (ce.color > palette_size) {
      throw ContractError("edge color " + std::to_string(ce.color) + " exceeds palette " +
                          std::to_string(palette_size));
    }
  }
  std::vector<Graph> members;
  for (int i = 1; i <= palette_size; ++i) {
    std::vector<Edge> edges;
    for (const ColoredEdge& ce : m.colored_edges()) {
      if (ce.color == i) edges.push_back(ce.e);
    }
    members.emplace_back(m.vertices(), std::move(edges));
  }
  return GraphFamily(std::move(members));
}

EdgeColoredMultigraph induced_multigraph(const EdgeColoredMultigraph& m,
                                         std::span<const Vertex> keep) {
  std::vector<Vertex> verts(keep.begin(), keep.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (Vertex v : verts) {
    if (!m.has_vertex(v)) {
      throw ContractError("induced_multigraph: vertex " + std::to_string(v) + " not present");
    }
  }
  std::vector<ColoredEdge> edges;
  for (const ColoredEdge& ce : m.colored_edges()) {
    if (std::binary_search(verts.begin(), verts.end(), ce.e.u) &&
        std::binary_search(verts.begin(), verts.end(), ce.e.v)) {
      edges.push_back(ce);
    }
  }
  return EdgeColoredMultigraph(std::move(verts), std::move(edges), m.palette_size());
}

}  // namespace coopcolor
