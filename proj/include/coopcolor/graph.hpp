#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace coopcolor {

// Vertex identifiers are dense nonnegative integers; arbitrary external
// labels are mapped onto them at parse time (see io.hpp).
using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order; rejects self-loops.
Edge make_edge(Vertex a, Vertex b);

// Finite simple undirected graph on an explicit vertex set. Immutable after
// construction, so shared instances are safe to read concurrently.
class Graph {
 public:
  Graph() = default;
  // Sorts and deduplicates both lists; rejects edges whose endpoints are not
  // in the vertex set and negative vertex ids.
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(Vertex v) const;
  // Position of v in vertices(), or -1.
  int index_of(Vertex v) const;
  // Sorted neighbor list; rejects vertices not in the graph.
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.verts_ == b.verts_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> verts_;             // sorted, unique
  std::vector<Edge> edges_;               // sorted, unique
  std::vector<std::vector<Vertex>> adj_;  // parallel to verts_, each sorted
};

// 0 for edgeless graphs.
int max_degree(const Graph& g);

// True iff g is acyclic and every connected component has at most one vertex
// of degree >= 2 (i.e. every component is a star, an edge, or a vertex).
bool is_star_forest(const Graph& g);

// Components as sorted vertex lists, ordered by smallest contained vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph without_vertex(const Graph& g, Vertex v);

}  // namespace coopcolor
