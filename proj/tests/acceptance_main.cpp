// Acceptance suite: one line per criterion, PASS/FAIL, with wall time.
// Exit code 0 iff every line passes. `--long` additionally runs the
// long-budget level-4 certification.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "coopcolor/construction.hpp"
#include "coopcolor/decomposition.hpp"
#include "coopcolor/exact.hpp"
#include "coopcolor/multigraph.hpp"
#include "coopcolor/partition.hpp"
#include "coopcolor/qary.hpp"
#include "coopcolor/solvers.hpp"
#include "coopcolor/transversal.hpp"
#include "coopcolor/treedepth.hpp"
#include "oracles.hpp"

using namespace coopcolor;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

constexpr std::array<std::uint64_t, 10> kV = {2,     5,      16,     65,     326,
                                              1957, 13700, 109601, 986410, 9864101};

// ---- criterion bodies -------------------------------------------------

std::string recurrence_fidelity() {
  std::uint64_t v = 0, e = 0;
  for (int t = 1; t <= 10; ++t) {
    ConstructionStats s = construction_stats(t);
    std::uint64_t want_v = t == 1 ? 2 : static_cast<std::uint64_t>(t) * v + 1;
    std::uint64_t want_e =
        t == 1 ? 1 : static_cast<std::uint64_t>(t) * e + static_cast<std::uint64_t>(t) * v;
    expect(s.vertex_count == want_v, "V_" + std::to_string(t) + " breaks the recurrence");
    expect(s.vertex_count == kV[static_cast<std::size_t>(t - 1)],
           "V_" + std::to_string(t) + " differs from the frozen table");
    expect(s.max_mono_degree == (t == 1 ? 1 : v), "D_" + std::to_string(t) + " wrong");
    expect(s.edge_count == want_e, "E_" + std::to_string(t) + " breaks the recurrence");
    v = s.vertex_count;
    e = s.edge_count;
  }
  double factorial = 1.0;
  for (int t = 1; t <= 10; ++t) {
    factorial *= t;
    if (t < 5) continue;
    double ratio = static_cast<double>(construction_stats(t).vertex_count) / factorial;
    double tail = 2.0 / (factorial * (t + 1));
    expect(std::abs(ratio - std::numbers::e) < tail,
           "V_t/t! strays from e at t = " + std::to_string(t));
  }
  return "t = 1..10 counts and the e-tail bound";
}

std::string built_graph_consistency() {
  for (int t = 1; t <= 6; ++t) {
    LabeledConstruction c = build_construction(t);
    expect(c.multigraph.vertices().size() == kV[static_cast<std::size_t>(t - 1)],
           "level " + std::to_string(t) + " vertex count");
    GraphFamily fam = extract_star_family(c);
    int mono = 0;
    for (int i = 1; i <= t; ++i) {
      expect(is_star_forest(fam.member(i)),
             "level " + std::to_string(t) + " color " + std::to_string(i) +
                 " is not a star forest");
      mono = std::max(mono, max_degree(fam.member(i)));
    }
    expect(static_cast<std::uint64_t>(mono) == construction_stats(t).max_mono_degree,
           "level " + std::to_string(t) + " max monochromatic degree");
  }
  return "levels 1..6 materialized and audited";
}

std::string unsat_certification() {
  LabeledConstruction c1 = build_construction(1);
  expect(solve_adapted_exact(c1.multigraph, std::vector<int>{1}).status == Status::Unsat,
         "level 1 should be uncolorable with palette {1}");

  LabeledConstruction c2 = build_construction(2);
  SearchOutcome r2 = solve_adapted_exact(c2.multigraph, std::vector<int>{1, 2});
  expect(r2.status == Status::Unsat, "level 2 should be uncolorable");
  // Cross-check against the full 2^5 enumeration.
  expect(oracles::count_cooperative(extract_star_family(c2)) == 0,
         "enumeration found a level-2 coloring the solver missed");

  LabeledConstruction c3 = build_construction(3);
  auto t0 = Clock::now();
  SearchOutcome r3 =
      solve_adapted_exact(c3.multigraph, std::vector<int>{1, 2, 3}, Budget{10'000'000, 0.0});
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  expect(r3.status == Status::Unsat, "level 3 should certify Unsat within 10^7 nodes");
  expect(r3.stats.nodes <= 10'000'000, "level 3 exceeded the node budget");
  expect(secs < 5.0, "level 3 certification took " + std::to_string(secs) + " s");
  std::ostringstream note;
  note << "levels 1..3 Unsat (level 3: " << r3.stats.nodes << " nodes); m_S(5) >= 4 witnessed";
  return note.str();
}

std::string unsat_certification_long() {
  LabeledConstruction c4 = build_construction(4);
  SearchOutcome r = solve_adapted_exact(c4.multigraph, std::vector<int>{1, 2, 3, 4},
                                        Budget{4'000'000'000ULL, 600.0});
  expect(r.status != Status::Sat, "level 4 must never be colorable");
  std::ostringstream note;
  note << "level 4: " << to_string(r.status) << " after " << r.stats.nodes << " nodes";
  return note.str();
}

std::string apex_deleted_colorability() {
  for (int t : {2, 3}) {
    LabeledConstruction c = build_construction(t);
    std::vector<Vertex> keep;
    for (Vertex v : c.multigraph.vertices()) {
      if (v != *c.apex) keep.push_back(v);
    }
    EdgeColoredMultigraph pruned = induced_multigraph(c.multigraph, keep);
    std::vector<int> palette;
    for (int i = 1; i <= t; ++i) palette.push_back(i);
    SearchOutcome r = solve_adapted_exact(pruned, palette);
    expect(r.status == Status::Sat,
           "apex-deleted level " + std::to_string(t) + " should be colorable");
    std::string why;
    expect(verify_adapted(pruned, *r.witness, &why),
           "apex-deleted witness rejected: " + why);
    expect(oracles::naive_adapted_satisfiable(pruned, palette),
           "oracle disagrees on apex-deleted level " + std::to_string(t));
  }
  return "deleting the apex restores colorability at t = 2, 3";
}

std::string solver_soundness() {
  int instances = 0, runs = 0, sat = 0;
  auto audit = [&](const GraphFamily& fam, const SearchOutcome& r, const char* solver) {
    ++runs;
    if (r.status == Status::Sat) {
      ++sat;
      std::string why;
      expect(r.witness.has_value(), std::string(solver) + " claimed Sat with no witness");
      expect(verify_cooperative(fam, *r.witness, &why),
             std::string(solver) + " emitted an invalid witness: " + why);
    }
  };
  SolverParams quick;
  quick.resample_cap = 2'000;
  // 600 random star families: every solver applies.
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    int n = 12 + static_cast<int>(seed % 40);
    int k = 2 + static_cast<int>(seed % 4);
    int d = 1 + static_cast<int>(seed % 6);
    GraphFamily fam = sample_random_star_family(n, k, d, seed);
    ++instances;
    quick.seed = seed;
    audit(fam, greedy_solve(fam), "greedy");
    audit(fam, lll_solve(fam, quick), "lll");
    audit(fam, star_partition_solve(fam, quick), "star-partition");
    audit(fam,
          partition_solve_generic(
              fam, [](const Graph& g) { return star_split(g); },
              [](const GraphFamily& f, const SolverParams&) { return greedy_solve(f); },
              [](const GraphFamily& f, const SolverParams&) { return greedy_solve(f); }, quick),
          "partition");
    audit(fam, solve_cooperative_exact(fam, Budget{200'000, 0.0}), "exact");
  }
  // 400 general random families: the star-forest engines do not apply.
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    int n = 5 + static_cast<int>(seed % 6);
    int k = 2 + static_cast<int>(seed % 3);
    GraphFamily fam = oracles::random_family(n, k, seed, 20 + static_cast<int>(seed % 55));
    ++instances;
    quick.seed = seed;
    audit(fam, greedy_solve(fam), "greedy");
    audit(fam, lll_solve(fam, quick), "lll");
    audit(fam, solve_cooperative_exact(fam, Budget{200'000, 0.0}), "exact");
  }
  std::ostringstream note;
  note << instances << " instances, " << runs << " runs, " << sat
       << " Sat outcomes all verified";
  return note.str();
}

std::string lll_regime() {
  int sat = 0;
  SolverParams params;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GraphFamily fam = sample_random_star_family(200, 44, 8, seed);
    params.seed = seed;
    params.resample_cap = 1'000'000;
    SearchOutcome r = lll_solve(fam, params);
    expect(r.lll.has_value(), "missing LLL condition report");
    expect(r.lll->satisfied, "e*p*(D+1) <= 1 should hold at k = 44, d = 8");
    if (r.status == Status::Sat) ++sat;
  }
  expect(sat >= 99, "only " + std::to_string(sat) + "/100 seeds satisfied");
  return std::to_string(sat) + "/100 seeds Sat with the 2ed condition satisfied";
}

std::string partition_scaling() {
  int sat = 0;
  SolverParams params;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GraphFamily fam = sample_random_star_family(10'000, 12, 1'000, seed);
    params.seed = seed;
    SearchOutcome r = star_partition_solve(fam, params);
    if (r.status == Status::Sat) ++sat;
  }
  expect(sat >= 95, "only " + std::to_string(sat) + "/100 seeds satisfied");
  return std::to_string(sat) + "/100 seeds Sat at n = 10^4, d = 10^3, l = 12";
}

std::string detection_honesty() {
  for (int t : {2, 3}) {
    GraphFamily fam = extract_star_family(build_construction(t));
    for (std::uint64_t cap : std::vector<std::uint64_t>{100, 10'000}) {
      for (std::uint64_t seed : std::vector<std::uint64_t>{1, 2, 3}) {
        SolverParams params;
        params.seed = seed;
        params.resample_cap = cap;
        expect(lll_solve(fam, params).status == Status::Unknown,
               "lll must stay Unknown on the construction");
        expect(star_partition_solve(fam, params).status == Status::Unknown,
               "star-partition must stay Unknown on the construction");
        expect(partition_solve_generic(
                   fam, [](const Graph& g) { return star_split(g); },
                   [](const GraphFamily& f, const SolverParams&) { return greedy_solve(f); },
                   [](const GraphFamily& f, const SolverParams&) { return greedy_solve(f); },
                   params)
                       .status == Status::Unknown,
               "generic partition must stay Unknown on the construction");
      }
    }
    expect(greedy_solve(fam).status == Status::Unknown,
           "greedy must stay Unknown on the construction");
    expect(solve_cooperative_exact(fam).status == Status::Unsat,
           "exact must certify the construction Unsat");
  }
  return "randomized solvers: Unknown only; exact: Unsat at t = 2, 3";
}

std::string lemma_audit() {
  int kept = 0, violations = 0;
  std::uint64_t seed = 0;
  while (kept < 220) {
    ++seed;
    int n = 8 + static_cast<int>(seed % 7);  // 8..14
    int percent = 15 + static_cast<int>((seed * 13) % 60);
    Graph g = oracles::random_graph(n, seed, percent);
    if (find_qary_tree(g, 2, 2).status != Status::Unsat) continue;  // pre-filter
    ++kept;
    Split s = threshold_split(g, 2, 2);
    Graph b_side = induced_subgraph(g, s.b());
    if (b_side.vertex_count() == 0) continue;
    if (find_qary_tree(b_side, 2, 1).status == Status::Sat) ++violations;
  }
  expect(violations == 0, std::to_string(violations) + " B-sides grew a binary tree");
  return std::to_string(kept) + " tree-free graphs audited, zero violations";
}

std::string treedepth_oracle() {
  for (int n = 1; n <= 10; ++n) {
    TreedepthResult r = treedepth_exact(oracles::path_graph(n));
    expect(r.depth == static_cast<int>(std::ceil(std::log2(n + 1))),
           "path P_" + std::to_string(n) + " treedepth");
    expect(is_subgraph_of(oracles::path_graph(n), closure(r.forest)),
           "path witness closure fails containment");
  }
  for (int leaves = 1; leaves <= 9; ++leaves) {
    TreedepthResult r = treedepth_exact(oracles::star_graph(leaves));
    expect(r.depth == 2, "star treedepth");
    expect(is_subgraph_of(oracles::star_graph(leaves), closure(r.forest)),
           "star witness closure fails containment");
  }
  for (int n = 1; n <= 7; ++n) {
    TreedepthResult r = treedepth_exact(oracles::complete_graph(n));
    expect(r.depth == n, "K_" + std::to_string(n) + " treedepth");
    expect(is_subgraph_of(oracles::complete_graph(n), closure(r.forest)),
           "clique witness closure fails containment");
  }
  return "paths, stars, cliques, and closure containment";
}

std::string translation_equivalences() {
  std::uint64_t assignments = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    int k = 1 + static_cast<int>(seed % 3);
    GraphFamily fam = oracles::random_family(n, k, seed, 20 + static_cast<int>(seed % 60));
    EdgeColoredMultigraph m = family_to_adapted(fam);
    PartitionedGraph pg = family_to_transversal(fam);
    const Graph& h = pg.graph();
    const auto& verts = fam.universal_vertices();

    std::vector<int> sigma(verts.size(), 1);
    while (true) {
      ++assignments;
      bool fam_ok = oracles::family_valid(fam, sigma);

      CooperativeColoring c;
      for (std::size_t vi = 0; vi < verts.size(); ++vi) c.set(verts[vi], sigma[vi]);
      bool adapted_ok = verify_adapted(m, c);

      // The induced transversal: one vertex per block, independent iff valid.
      std::vector<Vertex> chosen;
      for (std::size_t vi = 0; vi < verts.size(); ++vi) {
        chosen.push_back(transversal_id(fam, verts[vi], sigma[vi]));
      }
      bool trans_ok = true;
      for (std::size_t x = 0; x < chosen.size() && trans_ok; ++x) {
        auto nbrs = h.neighbors(chosen[x]);
        for (std::size_t y = x + 1; y < chosen.size() && trans_ok; ++y) {
          trans_ok = std::find(nbrs.begin(), nbrs.end(), chosen[y]) == nbrs.end();
        }
      }

      expect(fam_ok == adapted_ok, "family and adapted verdicts diverge (seed " +
                                       std::to_string(seed) + ")");
      expect(fam_ok == trans_ok, "family and transversal verdicts diverge (seed " +
                                     std::to_string(seed) + ")");

      std::size_t pos = sigma.size();
      while (pos > 0 && sigma[pos - 1] == k) sigma[--pos] = 1;
      if (pos == 0) break;
      ++sigma[pos - 1];
    }
  }
  std::ostringstream note;
  note << "500 instances, " << assignments << " assignments, three-way agreement";
  return note.str();
}

// ---- harness -----------------------------------------------------------

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<std::string()> body;
};

}  // namespace

int main(int argc, char** argv) {
  bool long_mode = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--long") long_mode = true;
  }

  std::vector<Criterion> criteria{
      {1, "recurrence-fidelity", 1.0, recurrence_fidelity},
      {2, "built-graph-consistency", 30.0, built_graph_consistency},
      {3, "unsat-certification", 10.0, unsat_certification},
      {4, "apex-deleted-colorability", 5.0, apex_deleted_colorability},
      {5, "solver-soundness", 120.0, solver_soundness},
      {6, "lll-regime", 120.0, lll_regime},
      {7, "partition-solver-scaling", 600.0, partition_scaling},
      {8, "detection-honesty", 60.0, detection_honesty},
      {9, "threshold-lemma-audit", 120.0, lemma_audit},
      {10, "treedepth-oracle", 60.0, treedepth_oracle},
      {11, "translation-equivalences", 120.0, translation_equivalences},
  };
  if (long_mode) {
    criteria.push_back({3, "unsat-certification-long", 600.0, unsat_certification_long});
  }

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = Clock::now();
    std::string verdict = "PASS";
    std::string note;
    try {
      note = c.body();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      note = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (verdict == "PASS" && secs >= c.budget_seconds) {
      verdict = "FAIL";
      note = "over the " + std::to_string(c.budget_seconds) + " s budget";
    }
    if (verdict == "FAIL") ++failures;
    std::ostringstream line;
    line << verdict << "  " << std::setw(2) << c.id << "  " << std::left << std::setw(28)
         << c.name << std::right << std::fixed << std::setprecision(2) << std::setw(8) << secs
         << " s  " << note;
    std::cout << line.str() << "\n";
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
