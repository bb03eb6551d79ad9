#pragma once

#include <string>
#include <vector>

#include "coopcolor/family.hpp"
#include "coopcolor/graph.hpp"

namespace coopcolor {

struct Block {
  std::string name;
  std::vector<Vertex> vertices;  // sorted
};

// Graph plus a partition of its vertex set into named blocks.
class PartitionedGraph {
 public:
  // Blocks must be nonempty, pairwise disjoint, and cover the vertex set.
  PartitionedGraph(Graph graph, std::vector<Block> parts);

  const Graph& graph() const { return graph_; }
  const std::vector<Block>& parts() const { return parts_; }

 private:
  Graph graph_;
  std::vector<Block> parts_;
};

// Independent-transversal form of a common-mode family on n vertices and k
// members: vertex (v,i) is encoded as p*k + (i-1) where p is the rank of v
// in the sorted universal set; blocks {v} x [k] appear in that vertex order.
// A transversal picking (v, c(v)) per block is independent iff c is a valid
// cooperative coloring.
PartitionedGraph family_to_transversal(const GraphFamily& family);

// Encoding used by family_to_transversal.
Vertex transversal_id(const GraphFamily& family, Vertex v, int i);

}  // namespace coopcolor
