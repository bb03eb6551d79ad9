#include "coopcolor/qary.hpp"

#include <algorithm>
#include <chrono>

#include "coopcolor/errors.hpp"

namespace coopcolor {

std::uint64_t qary_tree_size(int q, int h) {
  if (q < 1 || h < 1) throw ContractError("q-ary tree needs q >= 1 and h >= 1");
  std::uint64_t total = 1, level = 1;
  for (int d = 1; d <= h; ++d) {
    level *= static_cast<std::uint64_t>(q);
    total += level;
    if (total > (1ULL << 40)) throw ContractError("q-ary tree pattern is astronomically large");
  }
  return total;
}

namespace {

using Clock = std::chrono::steady_clock;

class TreeSearch {
 public:
  TreeSearch(const Graph& g, int q, int h, const Budget& budget)
      : g_(g), q_(q), h_(h), budget_(budget) {
    pattern_size_ = static_cast<int>(qary_tree_size(q, h));
    internal_count_ = static_cast<int>(qary_tree_size(q, h) -
                                       [&] {
                                         std::uint64_t leaves = 1;
                                         for (int d = 0; d < h; ++d)
                                           leaves *= static_cast<std::uint64_t>(q);
                                         return leaves;
                                       }());
    image_.assign(static_cast<std::size_t>(pattern_size_), -1);
    used_.assign(g.vertex_count(), 0);
  }

  SearchOutcome run() {
    auto t0 = Clock::now();
    deadline_valid_ = budget_.max_seconds > 0;
    if (deadline_valid_) {
      deadline_ = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget_.max_seconds));
    }
    SearchOutcome out;
    bool aborted = false;
    for (std::size_t r = 0; r < g_.vertex_count() && !aborted; ++r) {
      Vertex root = g_.vertices()[r];
      if (g_.degree(root) < q_) continue;  // root needs q children
      ++stats_.nodes;
      if (over_budget()) {
        aborted = true;
        break;
      }
      image_[0] = root;
      used_[r] = 1;
      int res = extend(0);
      used_[r] = 0;
      image_[0] = -1;
      if (res == kFound) {
        out.status = Status::Sat;
        TreeEmbedding emb{q_, h_, {}};
        emb.mapping = solution_;
        check_embedding(emb);
        out.embedding = std::move(emb);
        out.stats = stats_;
        out.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return out;
      }
      if (res == kAborted) aborted = true;
    }
    out.status = aborted ? Status::Unknown : Status::Unsat;
    out.stats = stats_;
    out.stats.budget_hit = aborted;
    out.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return out;
  }

 private:
  static constexpr int kFound = 0, kExhausted = 1, kAborted = 2;

  bool over_budget() {
    if (budget_.max_nodes > 0 && stats_.nodes >= budget_.max_nodes) return true;
    if (deadline_valid_ && (stats_.nodes & 1023) == 0 && Clock::now() >= deadline_) return true;
    return false;
  }

  // Assigns images to the children of internal pattern node j (all earlier
  // nodes are placed). Children q*j+1..q*j+q receive an ascending q-subset
  // of the free neighbors of image_[j].
  int extend(int j) {
    if (j == internal_count_) {
      solution_.assign(image_.begin(), image_.end());
      return kFound;
    }
    auto nbrs = g_.neighbors(image_[static_cast<std::size_t>(j)]);
    std::vector<int> cand;  // indices into g_.vertices()
    for (Vertex w : nbrs) {
      int wi = g_.index_of(w);
      if (!used_[static_cast<std::size_t>(wi)]) cand.push_back(wi);
    }
    if (static_cast<int>(cand.size()) < q_) return kExhausted;
    std::vector<int> pick(static_cast<std::size_t>(q_));
    return choose(j, cand, 0, 0, pick);
  }

  // Ascending combination of q candidate indices for node j's children.
  int choose(int j, const std::vector<int>& cand, int from, int taken, std::vector<int>& pick) {
    if (taken == q_) {
      for (int s = 0; s < q_; ++s) {
        image_[static_cast<std::size_t>(q_ * j + 1 + s)] =
            g_.vertices()[static_cast<std::size_t>(pick[static_cast<std::size_t>(s)])];
      }
      int res = extend(j + 1);
      if (res != kExhausted) return res;
      for (int s = 0; s < q_; ++s) image_[static_cast<std::size_t>(q_ * j + 1 + s)] = -1;
      return kExhausted;
    }
    for (int idx = from; idx <= static_cast<int>(cand.size()) - (q_ - taken); ++idx) {
      int wi = cand[static_cast<std::size_t>(idx)];
      ++stats_.nodes;
      if (over_budget()) return kAborted;
      // Internal children will themselves need q more fresh neighbors.
      bool child_internal = q_ * j + 1 + taken < internal_count_;
      if (child_internal &&
          g_.degree(g_.vertices()[static_cast<std::size_t>(wi)]) < q_ + 1) {
        continue;
      }
      used_[static_cast<std::size_t>(wi)] = 1;
      pick[static_cast<std::size_t>(taken)] = wi;
      int res = choose(j, cand, idx + 1, taken + 1, pick);
      used_[static_cast<std::size_t>(wi)] = 0;
      if (res != kExhausted) return res;
    }
    return kExhausted;
  }

  void check_embedding(const TreeEmbedding& emb) const {
    std::vector<Vertex> sorted = emb.mapping;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InternalError("tree embedding repeats a host vertex");
    }
    for (int j = 1; j < pattern_size_; ++j) {
      Vertex child = emb.mapping[static_cast<std::size_t>(j)];
      Vertex parent = emb.mapping[static_cast<std::size_t>((j - 1) / q_)];
      auto nb = g_.neighbors(parent);
      if (!std::binary_search(nb.begin(), nb.end(), child)) {
        throw InternalError("tree embedding breaks a parent-child edge");
      }
    }
  }

  const Graph& g_;
  int q_, h_;
  Budget budget_;
  int pattern_size_ = 0;
  int internal_count_ = 0;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<Vertex> solution_;
  SearchStats stats_;
  Clock::time_point deadline_;
  bool deadline_valid_ = false;
};

}  // namespace

SearchOutcome find_qary_tree(const Graph& g, int q, int h, const Budget& budget,
                             int pattern_cap) {
  std::uint64_t size = qary_tree_size(q, h);
  if (size > static_cast<std::uint64_t>(pattern_cap)) {
    throw ContractError("pattern has " + std::to_string(size) + " nodes, above the cap of " +
                        std::to_string(pattern_cap));
  }
  if (g.vertex_count() < size) {
    SearchOutcome out;
    out.status = Status::Unsat;
    return out;
  }
  TreeSearch s(g, q, h, budget);
  return s.run();
}

}  // namespace coopcolor
