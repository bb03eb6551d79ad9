#include "coopcolor/construction.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "coopcolor/errors.hpp"

namespace coopcolor {

int shift(int i, int x, int t) {
  if (t < 1) throw ContractError("shift: context size must be positive");
  if (x < 1 || x > t) {
    throw ContractError("shift: color " + std::to_string(x) + " outside 1.." + std::to_string(t));
  }
  if (i < 1 || i > t + 1) {
    throw ContractError("shift: index " + std::to_string(i) + " outside 1.." +
                        std::to_string(t + 1));
  }
  return x <= i - 1 ? x : x + 1;
}

ConstructionStats construction_stats(int t) {
  if (t < 1) throw ContractError("construction level must be positive");
  std::uint64_t v = 2, d = 1, e = 1;
  for (int k = 2; k <= t; ++k) {
    d = v;
    std::uint64_t ke = 0, kv = 0, e_next = 0, v_next = 0;
    const auto uk = static_cast<std::uint64_t>(k);
    if (__builtin_mul_overflow(uk, e, &ke) || __builtin_mul_overflow(uk, v, &kv) ||
        __builtin_add_overflow(ke, kv, &e_next) || __builtin_mul_overflow(uk, v, &v_next) ||
        __builtin_add_overflow(v_next, std::uint64_t{1}, &v_next)) {
      throw ContractError("construction counts overflow 64 bits at t = " + std::to_string(k));
    }
    e = e_next;
    v = v_next;
  }
  return ConstructionStats{t, v, d, e};
}

LabeledConstruction build_construction(int t, int cap) {
  if (t < 1) throw ContractError("construction level must be positive");
  if (t > cap) {
    throw ContractError("construction level " + std::to_string(t) + " exceeds cap " +
                        std::to_string(cap) + "; raise the cap to build it");
  }
  if (t > 10) {
    throw ContractError("levels above 10 are stats-only (vertex count exceeds 10^7)");
  }

  // Bottom-up: rebuild the edge list level by level. Level sizes are small
  // enough that holding one level at a time is cheap (E_8 = 767,208).
  std::vector<ColoredEdge> edges{{Edge{0, 1}, 1}};
  std::uint64_t prev_v = 2;
  for (int level = 2; level <= t; ++level) {
    std::vector<ColoredEdge> next;
    next.reserve(edges.size() * static_cast<std::size_t>(level) +
                 static_cast<std::size_t>(prev_v) * static_cast<std::size_t>(level));
    const Vertex apex = static_cast<Vertex>(prev_v * static_cast<std::uint64_t>(level));
    for (int i = 1; i <= level; ++i) {
      const Vertex off = static_cast<Vertex>(prev_v * static_cast<std::uint64_t>(i - 1));
      for (const ColoredEdge& ce : edges) {
        next.push_back({Edge{ce.e.u + off, ce.e.v + off}, shift(i, ce.color, level - 1)});
      }
      for (Vertex v = 0; v < static_cast<Vertex>(prev_v); ++v) {
        next.push_back({Edge{v + off, apex}, i});
      }
    }
    edges = std::move(next);
    prev_v = prev_v * static_cast<std::uint64_t>(level) + 1;
  }

  LabeledConstruction out;
  out.t = t;
  std::vector<Vertex> verts(static_cast<std::size_t>(prev_v));
  std::iota(verts.begin(), verts.end(), 0);
  out.multigraph = EdgeColoredMultigraph(std::move(verts), std::move(edges), t);
  if (t >= 2) {
    const std::uint64_t sub_v = construction_stats(t - 1).vertex_count;
    out.apex = static_cast<Vertex>(prev_v - 1);
    for (Vertex v = 0; v < *out.apex; ++v) {
      out.copy_map[v] = CopyPos{static_cast<int>(v / static_cast<Vertex>(sub_v)) + 1,
                                v % static_cast<Vertex>(sub_v)};
    }
  }
  return out;
}

GraphFamily extract_star_family(const LabeledConstruction& c) {
  return adapted_to_family(c.multigraph, c.multigraph.palette_size());
}

int max_t_for_degree(std::uint64_t d) {
  if (d < 1) throw ContractError("degree bound must be positive");
  // D_{t+1} = V_t; advance while the next threshold still fits under d.
  int t = 1;
  std::uint64_t v = 2;  // V_t for the current t
  while (v <= d) {
    ++t;
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(v, static_cast<std::uint64_t>(t), &next) ||
        __builtin_add_overflow(next, std::uint64_t{1}, &next)) {
      return t;  // V_{t} overflows 64 bits, so d < V_t = D_{t+1} for any d
    }
    v = next;
  }
  return t;
}

}  // namespace coopcolor
