#include "coopcolor/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numbers>
#include <string>

#include "coopcolor/errors.hpp"
#include "coopcolor/multigraph.hpp"
#include "coopcolor/rng.hpp"

namespace coopcolor {

namespace {
using Clock = std::chrono::steady_clock;
}

void validate_params(const SolverParams& params) {
  if (!(params.epsilon > 0.0) || params.epsilon > 0.5) {
    throw ContractError("epsilon must lie in (0, 1/2]");
  }
  if (params.inventory_size < 1) throw ContractError("inventory size must be positive");
  if (params.resample_cap < 1) throw ContractError("resample cap must be positive");
}

LLLCheck lll_condition(double p, std::int64_t D) {
  if (!(p >= 0.0) || p > 1.0) throw ContractError("probability must lie in [0, 1]");
  if (D < 0) throw ContractError("dependency degree must be nonnegative");
  LLLCheck check;
  check.p = p;
  check.D = D;
  // e*p*(D+1) <= 1, rearranged so the boundary case p = 1/(2e), D = 1 is an
  // exact equality in doubles.
  check.satisfied = p * static_cast<double>(D + 1) <= 1.0 / std::numbers::e;
  return check;
}

SearchOutcome lll_solve(const GraphFamily& family, const SolverParams& params) {
  validate_params(params);
  auto t0 = Clock::now();
  const auto& verts = family.universal_vertices();
  const int n = static_cast<int>(verts.size());

  std::vector<std::vector<int>> member_lists(static_cast<std::size_t>(n));
  std::size_t l_min = SIZE_MAX, l_max = 0;
  for (int i = 0; i < n; ++i) {
    member_lists[static_cast<std::size_t>(i)] = family.memberships(verts[static_cast<std::size_t>(i)]);
    auto l = member_lists[static_cast<std::size_t>(i)].size();
    if (l == 0) throw ContractError("vertex " + std::to_string(verts[static_cast<std::size_t>(i)]) +
                                    " belongs to no member");
    l_min = std::min(l_min, l);
    l_max = std::max(l_max, l);
  }
  std::int64_t d_max = 0;
  for (const Graph& g : family.members()) d_max = std::max<std::int64_t>(d_max, max_degree(g));

  EdgeColoredMultigraph m = family_to_adapted(family);
  auto index_of = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) -
                                    verts.begin());
  };

  std::vector<Substream> streams;
  streams.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    streams.emplace_back(params.seed, static_cast<std::uint64_t>(verts[static_cast<std::size_t>(i)]));
  }
  std::vector<int> color(static_cast<std::size_t>(n));
  auto resample = [&](std::size_t i) {
    const auto& lst = member_lists[i];
    color[i] = lst[streams[i].next_below(lst.size())];
  };
  for (int i = 0; i < n; ++i) resample(static_cast<std::size_t>(i));

  SearchOutcome out;
  out.lll = lll_condition(1.0 / (static_cast<double>(l_min) * static_cast<double>(l_min)),
                          2 * static_cast<std::int64_t>(l_max) * d_max);
  const auto& edges = m.colored_edges();
  while (true) {
    const ColoredEdge* bad = nullptr;
    for (const ColoredEdge& ce : edges) {
      if (color[index_of(ce.e.u)] == ce.color && color[index_of(ce.e.v)] == ce.color) {
        bad = &ce;
        break;  // edges are sorted, so this is the lowest violated one
      }
    }
    if (bad == nullptr) break;
    if (out.stats.resamples >= params.resample_cap) {
      out.status = Status::Unknown;
      out.stats.budget_hit = true;
      out.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      return out;
    }
    ++out.stats.resamples;
    resample(index_of(bad->e.u));
    resample(index_of(bad->e.v));
  }

  CooperativeColoring witness;
  for (int i = 0; i < n; ++i) {
    witness.set(verts[static_cast<std::size_t>(i)], color[static_cast<std::size_t>(i)]);
  }
  std::string why;
  if (!verify_cooperative(family, witness, &why)) {
    throw InternalError("resampling produced an invalid coloring: " + why);
  }
  out.status = Status::Sat;
  out.witness = std::move(witness);
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return out;
}

SearchOutcome greedy_solve(const GraphFamily& family) {
  auto t0 = Clock::now();
  SearchOutcome out;
  CooperativeColoring c;
  for (Vertex v : family.universal_vertices()) {
    int chosen = 0;
    for (int i : family.memberships(v)) {
      bool blocked = false;
      for (Vertex w : family.member(i).neighbors(v)) {
        if (c.color_of(w) == i) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        chosen = i;
        break;
      }
    }
    ++out.stats.nodes;
    if (chosen == 0) {
      out.status = Status::Unknown;  // stuck; greedy never certifies absence
      out.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      return out;
    }
    c.set(v, chosen);
  }
  std::string why;
  if (!verify_cooperative(family, c, &why)) {
    throw InternalError("greedy produced an invalid coloring: " + why);
  }
  out.status = Status::Sat;
  out.witness = std::move(c);
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return out;
}

GraphFamily sample_random_star_family(int n, int k, int d, std::uint64_t seed) {
  if (n < 1 || k < 1 || d < 1) throw ContractError("n, k, d must all be positive");
  std::vector<Graph> members;
  members.reserve(static_cast<std::size_t>(k));
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  for (int i = 1; i <= k; ++i) {
    Substream rng(seed, 0x5f0a000000000000ULL + static_cast<std::uint64_t>(i));
    std::vector<Vertex> unused = all;
    auto take = [&]() {
      std::size_t j = rng.next_below(unused.size());
      Vertex v = unused[j];
      unused[j] = unused.back();
      unused.pop_back();
      return v;
    };
    std::vector<Edge> edges;
    while (!unused.empty()) {
      Vertex center = take();
      auto want = static_cast<std::size_t>(1 + rng.next_below(static_cast<std::uint64_t>(d)));
      std::size_t leaves = std::min(want, unused.size());
      for (std::size_t s = 0; s < leaves; ++s) edges.push_back(make_edge(center, take()));
    }
    members.emplace_back(all, std::move(edges));
  }
  return GraphFamily(std::move(members));
}

}  // namespace coopcolor
