#include "coopcolor/treedepth.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "coopcolor/errors.hpp"

namespace coopcolor {

RootedForest::RootedForest(std::vector<Vertex> vertices, std::vector<Vertex> parent) {
  if (vertices.size() != parent.size()) {
    throw ContractError("rooted forest: vertex/parent lists differ in length");
  }
  std::vector<std::size_t> order(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
  for (std::size_t i : order) {
    verts_.push_back(vertices[i]);
    parent_.push_back(parent[i]);
  }
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end()) {
    throw ContractError("rooted forest: duplicate vertex");
  }
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (parent_[i] == -1) continue;
    if (index_of(parent_[i]) < 0) {
      throw ContractError("rooted forest: parent " + std::to_string(parent_[i]) +
                          " is not a forest vertex");
    }
    if (parent_[i] == verts_[i]) throw ContractError("rooted forest: self-parent");
  }
  // Walking to a root must terminate; depth_of throws on cycles.
  for (Vertex v : verts_) depth_of(v);
}

int RootedForest::index_of(Vertex v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) return -1;
  return static_cast<int>(it - verts_.begin());
}

Vertex RootedForest::parent_of(Vertex v) const {
  int i = index_of(v);
  if (i < 0) throw ContractError("vertex " + std::to_string(v) + " not in forest");
  return parent_[static_cast<std::size_t>(i)];
}

std::vector<Vertex> RootedForest::roots() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (parent_[i] == -1) out.push_back(verts_[i]);
  }
  return out;
}

int RootedForest::depth_of(Vertex v) const {
  int d = 0;
  Vertex cur = v;
  while (true) {
    Vertex p = parent_of(cur);
    if (p == -1) return d;
    ++d;
    if (d > static_cast<int>(verts_.size())) {
      throw ContractError("rooted forest: parent chain from " + std::to_string(v) + " cycles");
    }
    cur = p;
  }
}

int RootedForest::height() const {
  int h = -1;
  for (Vertex v : verts_) h = std::max(h, depth_of(v));
  return h;
}

Graph closure(const RootedForest& f) {
  std::vector<Edge> edges;
  for (Vertex v : f.vertices()) {
    Vertex a = f.parent_of(v);
    while (a != -1) {
      edges.push_back(make_edge(v, a));
      a = f.parent_of(a);
    }
  }
  return Graph(f.vertices(), std::move(edges));
}

bool is_subgraph_of(const Graph& g, const Graph& h) {
  for (Vertex v : g.vertices()) {
    if (!h.has_vertex(v)) return false;
  }
  const auto& he = h.edges();
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(he.begin(), he.end(), e)) return false;
  }
  return true;
}

namespace {

// Subset-mask solver over one graph of n <= cap vertices. depth_[mask] holds
// the treedepth of the induced subgraph; root_[mask] the removal choice that
// attains it for connected masks.
class TdSolver {
 public:
  explicit TdSolver(const Graph& g) : g_(g), n_(static_cast<int>(g.vertex_count())) {
    nbr_mask_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : g.edges()) {
      int ui = g.index_of(e.u), vi = g.index_of(e.v);
      nbr_mask_[static_cast<std::size_t>(ui)] |= 1u << vi;
      nbr_mask_[static_cast<std::size_t>(vi)] |= 1u << ui;
    }
    depth_.assign(std::size_t{1} << n_, -1);
    root_.assign(std::size_t{1} << n_, -1);
  }

  int solve(std::uint32_t mask) {
    if (mask == 0) return 0;
    if (depth_[mask] != -1) return depth_[mask];
    int result;
    std::uint32_t comp = component_of(mask, lowest_bit(mask));
    if (comp != mask) {
      result = std::max(solve(comp), solve(mask & ~comp));
    } else {
      result = n_ + 1;
      for (int v = 0; v < n_; ++v) {
        if (!(mask >> v & 1)) continue;
        int cand = 1 + solve(mask & ~(1u << v));
        if (cand < result) {
          result = cand;
          root_[mask] = v;
        }
      }
    }
    depth_[mask] = result;
    return result;
  }

  // parent ids (-1 = root) for the vertices of mask, appended to out.
  void build_forest(std::uint32_t mask, Vertex parent, std::vector<Vertex>& verts,
                    std::vector<Vertex>& parents) {
    while (mask != 0) {
      std::uint32_t comp = component_of(mask, lowest_bit(mask));
      build_tree(comp, parent, verts, parents);
      mask &= ~comp;
    }
  }

 private:
  void build_tree(std::uint32_t comp, Vertex parent, std::vector<Vertex>& verts,
                  std::vector<Vertex>& parents) {
    solve(comp);
    int r = root_[comp];
    verts.push_back(g_.vertices()[static_cast<std::size_t>(r)]);
    parents.push_back(parent);
    build_forest(comp & ~(1u << r), g_.vertices()[static_cast<std::size_t>(r)], verts, parents);
  }

  static int lowest_bit(std::uint32_t mask) { return __builtin_ctz(mask); }

  std::uint32_t component_of(std::uint32_t mask, int start) const {
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f != 0) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        next |= nbr_mask_[static_cast<std::size_t>(v)] & mask & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint32_t> nbr_mask_;
  std::vector<int> depth_;
  std::vector<int> root_;
};

}  // namespace

TreedepthResult treedepth_exact(const Graph& g, int cap) {
  if (static_cast<int>(g.vertex_count()) > cap) {
    throw ContractError("treedepth_exact: " + std::to_string(g.vertex_count()) +
                        " vertices exceed the cap of " + std::to_string(cap));
  }
  if (g.vertex_count() == 0) return TreedepthResult{0, RootedForest({}, {})};
  TdSolver solver(g);
  std::uint32_t full = (g.vertex_count() == 32)
                           ? ~std::uint32_t{0}
                           : (std::uint32_t{1} << g.vertex_count()) - 1;
  int depth = solver.solve(full);
  std::vector<Vertex> verts, parents;
  solver.build_forest(full, -1, verts, parents);
  TreedepthResult res{depth, RootedForest(std::move(verts), std::move(parents))};
  if (res.forest.height() != depth - 1) {
    throw InternalError("treedepth witness height mismatch");
  }
  if (!is_subgraph_of(g, closure(res.forest))) {
    throw InternalError("treedepth witness closure does not contain the graph");
  }
  return res;
}

}  // namespace coopcolor
