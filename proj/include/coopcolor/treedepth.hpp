#pragma once

#include <vector>

#include "coopcolor/graph.hpp"

namespace coopcolor {

// Forest with one designated root per component. parent[i] is the parent of
// vertices[i], or -1 for roots. Height counts edges on the longest root-leaf
// path (a lone root has height 0, an empty forest -1).
class RootedForest {
 public:
  RootedForest() = default;
  RootedForest(std::vector<Vertex> vertices, std::vector<Vertex> parent);

  const std::vector<Vertex>& vertices() const { return verts_; }
  // Parent of v, or -1 when v is a root.
  Vertex parent_of(Vertex v) const;
  std::vector<Vertex> roots() const;
  int depth_of(Vertex v) const;  // edges from v's root
  int height() const;
  bool empty() const { return verts_.empty(); }

 private:
  int index_of(Vertex v) const;
  std::vector<Vertex> verts_;   // sorted
  std::vector<Vertex> parent_;  // parallel to verts_
};

// Graph joining every proper ancestor-descendant pair, unioned over the
// forest's components.
Graph closure(const RootedForest& f);

struct TreedepthResult {
  int depth = 0;
  RootedForest forest;  // height = depth - 1; g is a subgraph of its closure
};

// Exact treedepth by the removal recursion: a single vertex has depth 1, a
// connected graph is 1 + min over v of the depth of g - v, a disconnected
// graph the max over components. Memoized over vertex subsets, so the input
// is capped (default 14 vertices).
TreedepthResult treedepth_exact(const Graph& g, int cap = 14);

// True iff every edge of g is present in h (and every vertex of g is in h).
bool is_subgraph_of(const Graph& g, const Graph& h);

}  // namespace coopcolor
