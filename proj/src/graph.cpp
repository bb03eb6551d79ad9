#include "coopcolor/graph.hpp"

#include <algorithm>
#include <string>

#include "coopcolor/errors.hpp"

namespace coopcolor {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw ContractError("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

namespace {

template <class T>
void sort_unique(std::vector<T>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
  for (Vertex v : verts_) {
    if (v < 0) throw ContractError("negative vertex id " + std::to_string(v));
  }
  sort_unique(verts_);
  for (Edge& e : edges_) {
    e = make_edge(e.u, e.v);
    if (!std::binary_search(verts_.begin(), verts_.end(), e.u) ||
        !std::binary_search(verts_.begin(), verts_.end(), e.v)) {
      throw ContractError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") has an endpoint outside the vertex set");
    }
  }
  sort_unique(edges_);
  adj_.resize(verts_.size());
  for (const Edge& e : edges_) {
    adj_[index_of(e.u)].push_back(e.v);
    adj_[index_of(e.v)].push_back(e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

int Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) return -1;
  return static_cast<int>(it - verts_.begin());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  int i = index_of(v);
  if (i < 0) throw ContractError("vertex " + std::to_string(v) + " not in graph");
  return adj_[static_cast<std::size_t>(i)];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v : g.vertices()) best = std::max(best, g.degree(v));
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (seen[i]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{g.vertices()[i]};
    seen[i] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        int j = g.index_of(w);
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_star_forest(const Graph& g) {
  // Every component must be a star: at most one vertex of degree >= 2, and
  // acyclic. A component with c vertices and c or more edges has a cycle.
  for (const auto& comp : connected_components(g)) {
    std::size_t internal = 0;  // vertices of degree >= 2 within the component
    std::size_t edge_ends = 0;
    for (Vertex v : comp) {
      int d = g.degree(v);
      edge_ends += static_cast<std::size_t>(d);
      if (d >= 2) ++internal;
    }
    if (internal > 1) return false;
    if (edge_ends / 2 >= comp.size()) return false;  // cycle
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> verts(keep.begin(), keep.end());
  sort_unique(verts);
  for (Vertex v : verts) {
    if (!g.has_vertex(v)) {
      throw ContractError("induced_subgraph: vertex " + std::to_string(v) + " not in graph");
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(verts.begin(), verts.end(), e.u) &&
        std::binary_search(verts.begin(), verts.end(), e.v)) {
      edges.push_back(e);
    }
  }
  return Graph(std::move(verts), std::move(edges));
}

Graph without_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> verts;
  verts.reserve(g.vertex_count());
  for (Vertex w : g.vertices()) {
    if (w != v) verts.push_back(w);
  }
  return induced_subgraph(g, verts);
}

}  // namespace coopcolor
