#include "coopcolor/transversal.hpp"

#include <algorithm>
#include <set>

#include "coopcolor/errors.hpp"

namespace coopcolor {

PartitionedGraph::PartitionedGraph(Graph graph, std::vector<Block> parts)
    : graph_(std::move(graph)), parts_(std::move(parts)) {
  std::vector<Vertex> covered;
  for (Block& b : parts_) {
    if (b.vertices.empty()) throw ContractError("empty block '" + b.name + "'");
    std::sort(b.vertices.begin(), b.vertices.end());
    covered.insert(covered.end(), b.vertices.begin(), b.vertices.end());
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
    throw ContractError("blocks overlap");
  }
  if (covered != graph_.vertices()) {
    throw ContractError("blocks do not cover the vertex set exactly");
  }
}

Vertex transversal_id(const GraphFamily& family, Vertex v, int i) {
  const auto& uni = family.universal_vertices();
  auto it = std::lower_bound(uni.begin(), uni.end(), v);
  if (it == uni.end() || *it != v) {
    throw ContractError("vertex " + std::to_string(v) + " not in the family");
  }
  if (i < 1 || i > family.size()) {
    throw ContractError("member index " + std::to_string(i) + " out of range");
  }
  return static_cast<Vertex>((it - uni.begin()) * family.size() + (i - 1));
}

PartitionedGraph family_to_transversal(const GraphFamily& family) {
  if (!family.is_common_mode()) {
    throw ContractError("transversal form needs a common-vertex-set family");
  }
  const int k = family.size();
  std::vector<Vertex> verts;
  std::vector<Block> parts;
  for (Vertex v : family.universal_vertices()) {
    Block b{std::to_string(v), {}};
    for (int i = 1; i <= k; ++i) {
      Vertex id = transversal_id(family, v, i);
      verts.push_back(id);
      b.vertices.push_back(id);
    }
    parts.push_back(std::move(b));
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    for (const Edge& e : family.member(i).edges()) {
      edges.push_back(make_edge(transversal_id(family, e.u, i), transversal_id(family, e.v, i)));
    }
  }
  return PartitionedGraph(Graph(std::move(verts), std::move(edges)), std::move(parts));
}

}  // namespace coopcolor
