#include "coopcolor/family.hpp"

#include <algorithm>

#include "coopcolor/errors.hpp"

namespace coopcolor {

GraphFamily::GraphFamily(std::vector<Graph> members) : members_(std::move(members)) {
  if (members_.empty()) throw ContractError("family needs at least one member graph");
  for (const Graph& g : members_) {
    universe_.insert(universe_.end(), g.vertices().begin(), g.vertices().end());
  }
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  common_ = std::all_of(members_.begin(), members_.end(),
                        [&](const Graph& g) { return g.vertices() == universe_; });
}

const Graph& GraphFamily::member(int i) const {
  if (i < 1 || i > size()) {
    throw ContractError("member index " + std::to_string(i) + " out of range 1.." +
                        std::to_string(size()));
  }
  return members_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> GraphFamily::memberships(Vertex v) const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i) {
    if (members_[static_cast<std::size_t>(i - 1)].has_vertex(v)) out.push_back(i);
  }
  return out;
}

bool verify_cooperative(const GraphFamily& family, const CooperativeColoring& c,
                        std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  for (Vertex v : family.universal_vertices()) {
    int i = c.color_of(v);
    if (i == 0) return fail("vertex " + std::to_string(v) + " unassigned");
    if (i < 1 || i > family.size()) {
      return fail("vertex " + std::to_string(v) + " assigned out-of-range index " +
                  std::to_string(i));
    }
    if (!family.member(i).has_vertex(v)) {
      return fail("vertex " + std::to_string(v) + " assigned index " + std::to_string(i) +
                  " but is not a vertex of G_" + std::to_string(i));
    }
  }
  for (int i = 1; i <= family.size(); ++i) {
    for (const Edge& e : family.member(i).edges()) {
      if (c.color_of(e.u) == i && c.color_of(e.v) == i) {
        return fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") of G_" + std::to_string(i) + " lies inside R_" + std::to_string(i));
      }
    }
  }
  return true;
}

}  // namespace coopcolor
