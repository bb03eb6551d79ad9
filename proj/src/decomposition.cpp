#include "coopcolor/decomposition.hpp"

#include <algorithm>
#include <string>

#include "coopcolor/errors.hpp"

namespace coopcolor {

Split::Split(const Graph& g, std::vector<Vertex> a, std::vector<Vertex> b, int neighbor_bound)
    : a_(std::move(a)), b_(std::move(b)), bound_(neighbor_bound) {
  if (bound_ < 0) throw ContractError("split: negative neighbor bound");
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  std::vector<Vertex> all;
  all.reserve(a_.size() + b_.size());
  std::merge(a_.begin(), a_.end(), b_.begin(), b_.end(), std::back_inserter(all));
  if (std::adjacent_find(all.begin(), all.end()) != all.end() || all != g.vertices()) {
    throw ContractError("split: A and B must partition the vertex set");
  }
  for (Vertex v : a_) {
    int count = 0;
    for (Vertex w : g.neighbors(v)) {
      if (in_b(w)) ++count;
    }
    if (count > bound_) {
      throw ContractError("split: vertex " + std::to_string(v) + " has " +
                          std::to_string(count) + " B-neighbors, above the bound " +
                          std::to_string(bound_));
    }
  }
}

bool Split::in_b(Vertex v) const { return std::binary_search(b_.begin(), b_.end(), v); }

Split star_split(const Graph& g) {
  if (!is_star_forest(g)) throw ContractError("star_split needs a star forest");
  std::vector<Vertex> a, b;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) {
      a.push_back(comp[0]);  // isolated: A-side, no B-neighbors
      continue;
    }
    Vertex center = comp[0];  // K_2: lower id is the canonical center
    for (Vertex v : comp) {
      if (g.degree(v) >= 2) center = v;
    }
    for (Vertex v : comp) {
      (v == center ? b : a).push_back(v);
    }
  }
  return Split(g, std::move(a), std::move(b), 1);
}

Split threshold_split(const Graph& g, int q, int h) {
  if (q < 2 || h < 1) throw ContractError("threshold_split needs q >= 2 and h >= 1");
  std::int64_t k = 2;
  for (int i = 0; i < h; ++i) {
    k *= q;
    if (k > (std::int64_t{1} << 31)) throw ContractError("degree threshold 2q^h overflows");
  }
  std::vector<Vertex> a, b;
  for (Vertex v : g.vertices()) {
    (g.degree(v) < k ? a : b).push_back(v);
  }
  return Split(g, std::move(a), std::move(b), static_cast<int>(k - 1));
}

Graph quotient(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
  std::vector<Vertex> covered;
  for (const auto& part : parts) {
    if (part.empty()) throw ContractError("quotient: empty part");
    covered.insert(covered.end(), part.begin(), part.end());
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end() ||
      covered != g.vertices()) {
    throw ContractError("quotient: parts must partition the vertex set");
  }
  std::vector<int> part_of(g.vertex_count());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (Vertex v : parts[p]) part_of[static_cast<std::size_t>(g.index_of(v))] = static_cast<int>(p);
  }
  std::vector<Vertex> verts(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) verts[p] = static_cast<Vertex>(p);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int pu = part_of[static_cast<std::size_t>(g.index_of(e.u))];
    int pv = part_of[static_cast<std::size_t>(g.index_of(e.v))];
    if (pu != pv) edges.push_back(make_edge(pu, pv));
  }
  return Graph(std::move(verts), std::move(edges));
}

QuotientInstance build_quotient_instance(const Graph& g,
                                         const std::vector<std::vector<Vertex>>& parts,
                                         int h_cap,
                                         const std::optional<RootedForest>& forest) {
  if (h_cap < 1) throw ContractError("height cap must be positive");
  QuotientInstance qi;
  qi.base = g;
  qi.parts = parts;
  qi.quotient_graph = quotient(g, parts);
  for (const auto& part : parts) {
    qi.max_part_size = std::max(qi.max_part_size, static_cast<int>(part.size()));
  }
  if (forest.has_value()) {
    if (forest->vertices() != qi.quotient_graph.vertices()) {
      throw ContractError("supplied forest must cover exactly the part indices");
    }
    if (forest->height() > h_cap - 1) {
      throw ContractError("supplied forest height " + std::to_string(forest->height()) +
                          " exceeds cap h-1 = " + std::to_string(h_cap - 1));
    }
    if (!is_subgraph_of(qi.quotient_graph, closure(*forest))) {
      throw ContractError("supplied forest's closure does not contain the quotient");
    }
    qi.elimination_forest = *forest;
    return qi;
  }
  std::vector<Vertex> fverts, fparents;
  for (const auto& comp : connected_components(qi.quotient_graph)) {
    TreedepthResult td = treedepth_exact(induced_subgraph(qi.quotient_graph, comp));
    if (td.depth > h_cap) {
      throw ContractError("quotient component treedepth " + std::to_string(td.depth) +
                          " exceeds the cap " + std::to_string(h_cap));
    }
    for (Vertex v : td.forest.vertices()) {
      fverts.push_back(v);
      fparents.push_back(td.forest.parent_of(v));
    }
  }
  qi.elimination_forest = RootedForest(std::move(fverts), std::move(fparents));
  if (!is_subgraph_of(qi.quotient_graph, closure(qi.elimination_forest))) {
    throw InternalError("computed elimination forest misses quotient edges");
  }
  return qi;
}

namespace {

// Restriction of the forest to `keep`: each kept vertex's parent becomes its
// nearest proper ancestor inside `keep` (or -1). Preserves ancestor pairs,
// never increases height.
RootedForest restrict_forest(const RootedForest& f, const std::vector<Vertex>& keep) {
  std::vector<Vertex> verts, parents;
  for (Vertex v : keep) {
    Vertex a = f.parent_of(v);
    while (a != -1 && !std::binary_search(keep.begin(), keep.end(), a)) {
      a = f.parent_of(a);
    }
    verts.push_back(v);
    parents.push_back(a);
  }
  return RootedForest(std::move(verts), std::move(parents));
}

}  // namespace

QuotientSplit quotient_split(const QuotientInstance& qi) {
  std::vector<Vertex> b_parts = qi.elimination_forest.roots();
  std::vector<Vertex> a, b;
  for (std::size_t p = 0; p < qi.parts.size(); ++p) {
    bool is_root = std::binary_search(b_parts.begin(), b_parts.end(), static_cast<Vertex>(p));
    auto& side = is_root ? b : a;
    side.insert(side.end(), qi.parts[p].begin(), qi.parts[p].end());
  }
  Split split(qi.base, std::move(a), std::move(b), qi.max_part_size);

  std::vector<Vertex> a_parts;
  for (std::size_t p = 0; p < qi.parts.size(); ++p) {
    if (!std::binary_search(b_parts.begin(), b_parts.end(), static_cast<Vertex>(p))) {
      a_parts.push_back(static_cast<Vertex>(p));
    }
  }
  std::vector<RootedForest> forests;
  Graph a_quotient = induced_subgraph(qi.quotient_graph, a_parts);
  for (const auto& comp : connected_components(a_quotient)) {
    forests.push_back(restrict_forest(qi.elimination_forest, comp));
  }
  return QuotientSplit{std::move(split), std::move(forests)};
}

}  // namespace coopcolor
