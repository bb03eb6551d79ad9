#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

#include "coopcolor/construction.hpp"
#include "coopcolor/errors.hpp"
#include "coopcolor/graph.hpp"
#include "coopcolor/multigraph.hpp"

using namespace coopcolor;

namespace {

// V_t and E_t computed by running the recurrences V_t = t*V_{t-1} + 1 (V_1 = 2)
// and E_t = t*E_{t-1} + t*V_{t-1} (E_1 = 1) by hand.
constexpr std::array<std::uint64_t, 10> kVertexCounts = {
    2, 5, 16, 65, 326, 1957, 13700, 109601, 986410, 9864101};
constexpr std::array<std::uint64_t, 10> kEdgeCounts = {
    1, 6, 33, 196, 1305, 9786, 82201, 767208, 7891281, 88776910};

}  // namespace

TEST_CASE("shift recoloring table") {
  CHECK(shift(2, 1, 3) == 1);
  CHECK(shift(2, 2, 3) == 3);
  CHECK(shift(1, 3, 3) == 4);
  CHECK(shift(4, 3, 3) == 3);
  // i = 1 shifts everything; i = t+1 fixes everything.
  for (int x = 1; x <= 5; ++x) {
    CHECK(shift(1, x, 5) == x + 1);
    CHECK(shift(6, x, 5) == x);
  }
  CHECK_THROWS_AS(shift(1, 0, 3), ContractError);
  CHECK_THROWS_AS(shift(1, 4, 3), ContractError);
  CHECK_THROWS_AS(shift(0, 1, 3), ContractError);
  CHECK_THROWS_AS(shift(5, 1, 3), ContractError);
}

TEST_CASE("stats follow the recurrences exactly") {
  for (int t = 1; t <= 10; ++t) {
    ConstructionStats s = construction_stats(t);
    CHECK(s.t == t);
    CHECK(s.vertex_count == kVertexCounts[static_cast<std::size_t>(t - 1)]);
    CHECK(s.edge_count == kEdgeCounts[static_cast<std::size_t>(t - 1)]);
    CHECK(s.max_mono_degree ==
          (t == 1 ? 1 : kVertexCounts[static_cast<std::size_t>(t - 2)]));
  }
  CHECK_THROWS_AS(construction_stats(0), ContractError);
  CHECK_THROWS_AS(construction_stats(-3), ContractError);
  CHECK_THROWS_AS(construction_stats(25), ContractError);  // overflows 64 bits
}

TEST_CASE("base level is a single color-1 edge") {
  LabeledConstruction c = build_construction(1);
  CHECK(c.t == 1);
  CHECK(c.multigraph.vertices() == std::vector<Vertex>{0, 1});
  REQUIRE(c.multigraph.colored_edges().size() == 1);
  CHECK(c.multigraph.colored_edges()[0] == ColoredEdge{Edge{0, 1}, 1});
  CHECK(c.multigraph.palette_size() == 1);
  CHECK_FALSE(c.apex.has_value());
  CHECK(c.copy_map.empty());
}

TEST_CASE("level two matches the hand-built instance") {
  LabeledConstruction c = build_construction(2);
  std::vector<ColoredEdge> expect{{Edge{0, 1}, 2}, {Edge{0, 4}, 1}, {Edge{1, 4}, 1},
                                  {Edge{2, 3}, 1}, {Edge{2, 4}, 2}, {Edge{3, 4}, 2}};
  CHECK(c.multigraph.colored_edges() == expect);
  REQUIRE(c.apex.has_value());
  CHECK(*c.apex == 4);
  CHECK(c.copy_map.at(0) == CopyPos{1, 0});
  CHECK(c.copy_map.at(3) == CopyPos{2, 1});
}

TEST_CASE("each copy is the previous level recolored by its shift") {
  for (int t : {2, 3, 4}) {
    LabeledConstruction cur = build_construction(t);
    LabeledConstruction prev = build_construction(t - 1);
    const std::uint64_t sub_v = construction_stats(t - 1).vertex_count;
    REQUIRE(cur.apex.has_value());
    CHECK(*cur.apex == static_cast<Vertex>(construction_stats(t).vertex_count - 1));

    // Partition the non-apex edges by copy; apex edges must be color i toward
    // copy i, V_{t-1} of them each.
    std::map<int, std::vector<ColoredEdge>> inner;
    std::map<int, int> apex_edges;
    for (const ColoredEdge& ce : cur.multigraph.colored_edges()) {
      if (ce.e.v == *cur.apex) {
        int copy = cur.copy_map.at(ce.e.u).copy;
        CHECK(ce.color == copy);
        ++apex_edges[copy];
        continue;
      }
      int copy = cur.copy_map.at(ce.e.u).copy;
      CHECK(cur.copy_map.at(ce.e.v).copy == copy);
      // Translate back into the sub-construction's vertex ids and colors.
      int color = ce.color;
      int unshifted = color <= copy - 1 ? color : color - 1;
      CHECK(color != copy);  // shift never produces the copy's own color
      inner[copy].push_back(
          {Edge{cur.copy_map.at(ce.e.u).sub, cur.copy_map.at(ce.e.v).sub}, unshifted});
    }
    for (int i = 1; i <= t; ++i) {
      CHECK(apex_edges[i] == static_cast<int>(sub_v));
      std::sort(inner[i].begin(), inner[i].end());
      CHECK(inner[i] == prev.multigraph.colored_edges());
    }
  }
}

TEST_CASE("construction sizes and caps") {
  for (int t = 1; t <= 6; ++t) {
    LabeledConstruction c = build_construction(t);
    CHECK(c.multigraph.vertices().size() == kVertexCounts[static_cast<std::size_t>(t - 1)]);
    CHECK(c.multigraph.colored_edges().size() == kEdgeCounts[static_cast<std::size_t>(t - 1)]);
  }
  CHECK_THROWS_AS(build_construction(9), ContractError);         // default cap 8
  CHECK_THROWS_AS(build_construction(11, 20), ContractError);    // hard stats-only limit
  CHECK_THROWS_AS(build_construction(0), ContractError);
  CHECK(build_construction(3, 3).t == 3);  // cap is inclusive
}

TEST_CASE("extracted family is a star forest per color") {
  for (int t : {1, 2, 3, 4, 5}) {
    LabeledConstruction c = build_construction(t);
    GraphFamily fam = extract_star_family(c);
    REQUIRE(fam.size() == t);
    int mono = 0;
    for (int i = 1; i <= t; ++i) {
      CHECK(is_star_forest(fam.member(i)));
      mono = std::max(mono, max_degree(fam.member(i)));
    }
    CHECK(static_cast<std::uint64_t>(mono) == construction_stats(t).max_mono_degree);
    CHECK(fam.is_common_mode());
  }
}

TEST_CASE("max_t_for_degree walks the degree thresholds") {
  CHECK(max_t_for_degree(1) == 1);
  CHECK(max_t_for_degree(2) == 2);
  CHECK(max_t_for_degree(4) == 2);
  CHECK(max_t_for_degree(5) == 3);
  CHECK(max_t_for_degree(100) == 5);
  CHECK_THROWS_AS(max_t_for_degree(0), ContractError);
  // d = V_{t-1} is exactly attainable (that is D_t), d = V_{t-1} - 1 is not.
  for (int t = 2; t <= 10; ++t) {
    std::uint64_t vprev = kVertexCounts[static_cast<std::size_t>(t - 2)];
    CHECK(max_t_for_degree(vprev) == t);
    CHECK(max_t_for_degree(vprev - 1) == t - 1);
  }
  // Monotone in d.
  int prev = 0;
  for (std::uint64_t d = 1; d <= 400; ++d) {
    int cur = max_t_for_degree(d);
    CHECK(cur >= prev);
    prev = cur;
  }
  // Huge d hits the overflow early-out but still answers.
  CHECK(max_t_for_degree(UINT64_MAX) >= 20);
}
