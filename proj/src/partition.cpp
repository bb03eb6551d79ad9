#include "coopcolor/partition.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <string>

#include "coopcolor/errors.hpp"
#include "coopcolor/rng.hpp"

namespace coopcolor {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct MembershipSides {
  std::vector<std::vector<int>> a;  // per universal index, ascending members
  std::vector<std::vector<int>> b;
};

MembershipSides side_memberships(const GraphFamily& family, const std::vector<Split>& splits) {
  const auto& verts = family.universal_vertices();
  MembershipSides out;
  out.a.resize(verts.size());
  out.b.resize(verts.size());
  for (int i = 1; i <= family.size(); ++i) {
    const Split& s = splits[static_cast<std::size_t>(i - 1)];
    for (Vertex v : family.member(i).vertices()) {
      auto vi = static_cast<std::size_t>(
          std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
      (s.in_b(v) ? out.b : out.a)[vi].push_back(i);
    }
  }
  return out;
}

void fill_state(PartitionState* state, std::vector<Split> splits,
                const std::vector<Vertex>& verts, const std::vector<char>& heavy,
                const std::vector<std::vector<int>>& inventories,
                const std::vector<int>& color,
                const std::vector<int>& avail_counts) {
  if (state == nullptr) return;
  state->splits = std::move(splits);
  state->heavy.clear();
  state->inventories.clear();
  state->phase1.assignment.clear();
  state->available_counts.clear();
  for (std::size_t vi = 0; vi < verts.size(); ++vi) {
    if (heavy[vi]) {
      state->heavy.push_back(verts[vi]);
      state->inventories[verts[vi]] = inventories[vi];
      if (color[vi] != 0) state->phase1.set(verts[vi], color[vi]);
    } else {
      state->available_counts[verts[vi]] = avail_counts[vi];
    }
  }
}

}  // namespace

SearchOutcome star_partition_solve(const GraphFamily& family, const SolverParams& params,
                                   PartitionState* state) {
  validate_params(params);
  auto t0 = Clock::now();
  const auto& verts = family.universal_vertices();
  const auto n = verts.size();
  auto idx = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) -
                                    verts.begin());
  };

  std::vector<Split> splits;
  splits.reserve(static_cast<std::size_t>(family.size()));
  for (int i = 1; i <= family.size(); ++i) {
    if (!is_star_forest(family.member(i))) {
      throw ContractError("member " + std::to_string(i) + " is not a star forest");
    }
    splits.push_back(star_split(family.member(i)));
  }
  MembershipSides sides = side_memberships(family, splits);

  std::vector<char> heavy(n, 0);
  for (std::size_t vi = 0; vi < n; ++vi) {
    auto l = sides.a[vi].size() + sides.b[vi].size();
    if (l < 2) {
      throw ContractError("vertex " + std::to_string(verts[vi]) +
                          " has fewer than 2 memberships");
    }
    heavy[vi] = static_cast<double>(sides.b[vi].size()) >
                params.epsilon * static_cast<double>(l - 1);
  }

  // Heavy vertices sample from a per-vertex stream so the interleaving of
  // resamples cannot change anyone else's draws.
  std::vector<Substream> stream(n);
  std::vector<int> color(n, 0);
  std::vector<std::vector<int>> inventories(n);
  auto resample = [&](std::size_t ui) {
    const auto& lst = sides.b[ui];
    inventories[ui] = {lst[stream[ui].next_below(lst.size())]};
    color[ui] = inventories[ui][0];
  };
  for (std::size_t vi = 0; vi < n; ++vi) {
    if (heavy[vi]) {
      stream[vi] = Substream(params.seed, static_cast<std::uint64_t>(verts[vi]));
      resample(vi);
    }
  }

  SearchOutcome out;
  std::deque<std::size_t> queue;
  std::vector<char> queued(n, 0);
  for (std::size_t vi = 0; vi < n; ++vi) {
    if (!heavy[vi]) {
      queue.push_back(vi);
      queued[vi] = 1;
    }
  }

  // A-membership j is unavailable at a leaf iff its center took j; isolated
  // vertices have no center and keep every A-membership open.
  auto blocked_center = [&](std::size_t vi, int j) -> int {
    auto nb = family.member(j).neighbors(verts[vi]);
    if (nb.empty()) return -1;
    auto ci = idx(nb.front());
    return (heavy[ci] && color[ci] == j) ? static_cast<int>(ci) : -1;
  };

  auto finish = [&](Status status) {
    std::vector<int> avail(n, 0);
    for (std::size_t vi = 0; vi < n; ++vi) {
      if (heavy[vi]) continue;
      for (int j : sides.a[vi]) {
        if (blocked_center(vi, j) < 0) ++avail[vi];
      }
    }
    fill_state(state, std::move(splits), verts, heavy, inventories, color, avail);
    out.status = status;
    out.stats.wall_ms = elapsed_ms(t0);
    return out;
  };

  while (!queue.empty()) {
    std::size_t vi = queue.front();
    queue.pop_front();
    queued[vi] = 0;
    ++out.stats.nodes;
    int chosen = 0;
    for (int j : sides.a[vi]) {
      if (blocked_center(vi, j) < 0) {
        chosen = j;
        break;
      }
    }
    if (chosen != 0) {
      color[vi] = chosen;
      continue;
    }
    // Bad event: every leaf-membership is claimed. Resample the claimants.
    if (out.stats.resamples >= params.resample_cap) {
      out.stats.budget_hit = true;
      return finish(Status::Unknown);
    }
    ++out.stats.resamples;
    std::vector<std::size_t> scope;
    for (int j : sides.a[vi]) {
      int ci = blocked_center(vi, j);
      if (ci >= 0) scope.push_back(static_cast<std::size_t>(ci));
    }
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
    for (std::size_t ui : scope) resample(ui);
    for (std::size_t ui : scope) {
      for (int i : sides.b[ui]) {
        for (Vertex w : family.member(i).neighbors(verts[ui])) {
          auto wi = idx(w);
          if (heavy[wi]) continue;
          color[wi] = 0;
          ++out.stats.propagations;
          if (!queued[wi]) {
            queue.push_back(wi);
            queued[wi] = 1;
          }
        }
      }
    }
    if (!queued[vi]) {  // v is re-queued via its blocking centers, but be safe
      color[vi] = 0;
      queue.push_back(vi);
      queued[vi] = 1;
    }
  }

  CooperativeColoring witness;
  for (std::size_t vi = 0; vi < n; ++vi) witness.set(verts[vi], color[vi]);
  std::string why;
  if (!verify_cooperative(family, witness, &why)) {
    throw InternalError("partition solver produced an invalid coloring: " + why);
  }
  out.witness = std::move(witness);
  return finish(Status::Sat);
}

SearchOutcome partition_solve_generic(const GraphFamily& family, const Splitter& splitter,
                                      const SubSolver& sub_a, const SubSolver& sub_b,
                                      const SolverParams& params, PartitionState* state) {
  validate_params(params);
  auto t0 = Clock::now();
  const auto& verts = family.universal_vertices();
  const auto n = verts.size();
  auto idx = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) -
                                    verts.begin());
  };

  std::vector<Split> splits;
  splits.reserve(static_cast<std::size_t>(family.size()));
  for (int i = 1; i <= family.size(); ++i) {
    Split s = splitter(family.member(i));
    // Revalidate against the member, so a misbehaving splitter is caught
    // here with a diagnostic rather than corrupting the phases below.
    splits.emplace_back(family.member(i), s.a(), s.b(), s.neighbor_bound());
  }
  MembershipSides sides = side_memberships(family, splits);

  std::vector<char> heavy(n, 0);
  std::vector<std::size_t> heavy_list;
  for (std::size_t vi = 0; vi < n; ++vi) {
    auto l = sides.a[vi].size() + sides.b[vi].size();
    if (l == 0) {
      throw ContractError("vertex " + std::to_string(verts[vi]) + " belongs to no member");
    }
    heavy[vi] = static_cast<double>(sides.b[vi].size()) >
                params.epsilon * static_cast<double>(l - 1);
    if (heavy[vi]) heavy_list.push_back(vi);
  }

  std::vector<Substream> stream(n);
  std::vector<std::vector<int>> inventories(n);
  auto draw_inventory = [&](std::size_t ui) {
    std::vector<int> pool = sides.b[ui];
    auto want = std::min<std::size_t>(static_cast<std::size_t>(params.inventory_size),
                                      pool.size());
    std::vector<int> inv;
    for (std::size_t s = 0; s < want; ++s) {
      std::size_t j = s + stream[ui].next_below(pool.size() - s);
      std::swap(pool[s], pool[j]);
      inv.push_back(pool[s]);
    }
    std::sort(inv.begin(), inv.end());
    inventories[ui] = std::move(inv);
  };
  for (std::size_t ui : heavy_list) {
    stream[ui] = Substream(params.seed, static_cast<std::uint64_t>(verts[ui]));
    draw_inventory(ui);
  }

  // List-mode sub-family: member i is induced on the vertices whose allowed
  // list contains i. Vertices with empty allowed lists are left out.
  auto build_subfamily = [&](const std::vector<std::pair<std::size_t, const std::vector<int>*>>&
                                 allowed) {
    std::vector<Graph> members;
    for (int i = 1; i <= family.size(); ++i) {
      std::vector<Vertex> vs;
      for (const auto& [vi, lst] : allowed) {
        if (std::binary_search(lst->begin(), lst->end(), i)) vs.push_back(verts[vi]);
      }
      members.push_back(induced_subgraph(family.member(i), vs));
    }
    return GraphFamily(std::move(members));
  };

  SearchOutcome out;
  std::vector<int> color(n, 0);
  std::vector<int> avail_counts(n, 0);
  auto finish = [&](Status status) {
    fill_state(state, std::move(splits), verts, heavy, inventories, color, avail_counts);
    out.status = status;
    out.stats.wall_ms = elapsed_ms(t0);
    return out;
  };
  auto absorb = [&](const SearchStats& s) {
    out.stats.nodes += s.nodes;
    out.stats.propagations += s.propagations;
  };

  while (true) {
    // Phase 1: color the heavy side from its inventories.
    for (std::size_t vi = 0; vi < n; ++vi) color[vi] = 0;
    if (!heavy_list.empty()) {
      std::vector<std::pair<std::size_t, const std::vector<int>*>> allowed;
      for (std::size_t ui : heavy_list) allowed.push_back({ui, &inventories[ui]});
      GraphFamily bfam = build_subfamily(allowed);
      SearchOutcome rb = sub_b(bfam, params);
      absorb(rb.stats);
      if (rb.status != Status::Sat) {
        if (out.stats.resamples >= params.resample_cap) {
          out.stats.budget_hit = true;
          return finish(Status::Unknown);
        }
        ++out.stats.resamples;
        for (std::size_t ui : heavy_list) draw_inventory(ui);
        continue;
      }
      std::string why;
      if (!rb.witness.has_value() || !verify_cooperative(bfam, *rb.witness, &why)) {
        throw ContractError("sub-solver B returned an invalid witness: " + why);
      }
      for (std::size_t ui : heavy_list) color[ui] = rb.witness->color_of(verts[ui]);
    }

    // Availability: a color is closed at v when a heavy B-side neighbor in
    // that member took it.
    std::vector<std::vector<int>> available(n);
    std::size_t starved = n;
    for (std::size_t vi = 0; vi < n && starved == n; ++vi) {
      if (heavy[vi]) continue;
      for (int j : sides.a[vi]) {
        bool open = true;
        const Split& s = splits[static_cast<std::size_t>(j - 1)];
        for (Vertex w : family.member(j).neighbors(verts[vi])) {
          auto wi = idx(w);
          if (heavy[wi] && s.in_b(w) && color[wi] == j) {
            open = false;
            break;
          }
        }
        if (open) available[vi].push_back(j);
      }
      avail_counts[vi] = static_cast<int>(available[vi].size());
      if (available[vi].empty()) starved = vi;
    }
    if (starved != n) {
      if (out.stats.resamples >= params.resample_cap) {
        out.stats.budget_hit = true;
        return finish(Status::Unknown);
      }
      ++out.stats.resamples;
      std::vector<std::size_t> scope;
      for (int j : sides.a[starved]) {
        const Split& s = splits[static_cast<std::size_t>(j - 1)];
        for (Vertex w : family.member(j).neighbors(verts[starved])) {
          auto wi = idx(w);
          if (heavy[wi] && s.in_b(w)) scope.push_back(wi);
        }
      }
      std::sort(scope.begin(), scope.end());
      scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
      if (scope.empty()) {
        throw InternalError("starved vertex with no heavy blockers");
      }
      for (std::size_t ui : scope) draw_inventory(ui);
      continue;
    }

    // Phase 2: extend over the available leaf-memberships.
    std::vector<std::pair<std::size_t, const std::vector<int>*>> allowed;
    for (std::size_t vi = 0; vi < n; ++vi) {
      if (!heavy[vi]) allowed.push_back({vi, &available[vi]});
    }
    if (!allowed.empty()) {
      GraphFamily afam = build_subfamily(allowed);
      SearchOutcome ra = sub_a(afam, params);
      absorb(ra.stats);
      if (ra.status != Status::Sat) {
        return finish(Status::Unknown);  // the pipeline cannot certify absence
      }
      std::string why;
      if (!ra.witness.has_value() || !verify_cooperative(afam, *ra.witness, &why)) {
        throw ContractError("sub-solver A returned an invalid witness: " + why);
      }
      for (const auto& [vi, lst] : allowed) {
        (void)lst;
        color[vi] = ra.witness->color_of(verts[vi]);
      }
    }

    CooperativeColoring witness;
    for (std::size_t vi = 0; vi < n; ++vi) witness.set(verts[vi], color[vi]);
    std::string why;
    if (!verify_cooperative(family, witness, &why)) {
      throw InternalError("combined partition coloring is invalid: " + why);
    }
    out.witness = std::move(witness);
    return finish(Status::Sat);
  }
}

}  // namespace coopcolor
