#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "coopcolor/family.hpp"
#include "coopcolor/multigraph.hpp"

namespace coopcolor {

// Counts of the recursive construction, by the recurrences
//   V_1 = 2,  V_t = t*V_{t-1} + 1
//   D_1 = 1,  D_t = V_{t-1}        (max monochromatic degree)
//   E_1 = 1,  E_t = t*E_{t-1} + t*V_{t-1}   (edge count; derived bookkeeping)
struct ConstructionStats {
  int t = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t max_mono_degree = 0;
  std::uint64_t edge_count = 0;
};

// Position of a non-apex vertex inside the top-level recursion: which copy
// H_copy it belongs to (1-based) and its vertex id within that copy.
struct CopyPos {
  int copy = 0;
  Vertex sub = 0;
  friend bool operator==(const CopyPos&, const CopyPos&) = default;
};

struct LabeledConstruction {
  int t = 0;
  EdgeColoredMultigraph multigraph;
  std::optional<Vertex> apex;        // absent for t = 1
  std::map<Vertex, CopyPos> copy_map;  // non-apex vertices only; empty for t = 1
};

// Color remap used when copy H_i is embedded: x stays put below i, everything
// else moves up one, so the output never equals i. Context size t bounds the
// inputs: 1 <= x <= t, 1 <= i <= t+1.
int shift(int i, int x, int t);

// Level-t construction with canonical vertex numbering: copy H_i occupies
// ids [(i-1)*V_{t-1}, i*V_{t-1}), the apex is the last id. Deterministic.
// cap guards memory (default 8); levels above 10 are stats-only.
LabeledConstruction build_construction(int t, int cap = 8);

// Pure arithmetic over the recurrences; overflow is reported as an error.
ConstructionStats construction_stats(int t);

// Member i = the color-i edges, on the full vertex set.
GraphFamily extract_star_family(const LabeledConstruction& c);

// The unique t with D_t <= d < D_{t+1}.
int max_t_for_degree(std::uint64_t d);

}  // namespace coopcolor
