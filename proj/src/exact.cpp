#include "coopcolor/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "coopcolor/errors.hpp"
#include "coopcolor/rng.hpp"

namespace coopcolor {

std::string to_string(Status s) {
  switch (s) {
    case Status::Sat: return "Sat";
    case Status::Unsat: return "Unsat";
    case Status::Unknown: return "Unknown";
  }
  throw InternalError("unreachable status");
}

namespace {

using Clock = std::chrono::steady_clock;

// Bitset over colors 1..nbits (bit c-1 = color c allowed).
struct ColorSet {
  std::vector<std::uint64_t> w;
  explicit ColorSet(int nbits = 0) : w(static_cast<std::size_t>((nbits + 63) / 64), 0) {}
  void set(int c) { w[static_cast<std::size_t>(c - 1) >> 6] |= 1ULL << ((c - 1) & 63); }
  void clear(int c) { w[static_cast<std::size_t>(c - 1) >> 6] &= ~(1ULL << ((c - 1) & 63)); }
  bool test(int c) const {
    return (w[static_cast<std::size_t>(c - 1) >> 6] >> ((c - 1) & 63)) & 1;
  }
};

enum class Walk { Found, Exhausted, Aborted };

class AdaptedSearch {
 public:
  AdaptedSearch(const EdgeColoredMultigraph& m, const std::vector<std::vector<int>>& allowed,
                const Budget& budget, std::uint64_t tie_seed, const std::atomic<bool>* cancel)
      : m_(m), budget_(budget), cancel_(cancel) {
    n_ = static_cast<int>(m.vertices().size());
    if (static_cast<int>(allowed.size()) != n_) {
      throw ContractError("per-vertex palette list size does not match vertex count");
    }
    int max_color = 1;
    for (const auto& lst : allowed) {
      for (int c : lst) {
        if (c < 1) throw ContractError("colors must be positive");
        max_color = std::max(max_color, c);
      }
    }
    avail_.assign(static_cast<std::size_t>(n_), ColorSet(max_color));
    counts_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      std::vector<int> lst = allowed[static_cast<std::size_t>(i)];
      std::sort(lst.begin(), lst.end());
      lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
      for (int c : lst) avail_[static_cast<std::size_t>(i)].set(c);
      counts_[static_cast<std::size_t>(i)] = static_cast<int>(lst.size());
      colors_.push_back(std::move(lst));
    }
    adj_.resize(static_cast<std::size_t>(n_));
    for (const ColoredEdge& ce : m.colored_edges()) {
      int u = index_of(ce.e.u), v = index_of(ce.e.v);
      adj_[static_cast<std::size_t>(u)].push_back({v, ce.color});
      adj_[static_cast<std::size_t>(v)].push_back({u, ce.color});
    }
    assigned_.assign(static_cast<std::size_t>(n_), 0);
    tie_rank_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) tie_rank_[static_cast<std::size_t>(i)] = i;
    if (tie_seed != 0) {
      Substream rng(tie_seed, 0x7ea5);
      for (int i = n_ - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i + 1)));
        std::swap(tie_rank_[static_cast<std::size_t>(i)], tie_rank_[static_cast<std::size_t>(j)]);
      }
    }
  }

  SearchOutcome run() {
    auto t0 = Clock::now();
    deadline_valid_ = budget_.max_seconds > 0;
    if (deadline_valid_) {
      deadline_ = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget_.max_seconds));
    }
    Walk w = dfs();
    SearchOutcome out;
    out.stats = stats_;
    out.stats.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    switch (w) {
      case Walk::Found: {
        CooperativeColoring witness;
        for (int i = 0; i < n_; ++i) {
          witness.set(m_.vertices()[static_cast<std::size_t>(i)],
                      assigned_[static_cast<std::size_t>(i)]);
        }
        check_witness(witness);
        out.status = Status::Sat;
        out.witness = std::move(witness);
        break;
      }
      case Walk::Exhausted:
        out.status = Status::Unsat;
        break;
      case Walk::Aborted:
        out.status = Status::Unknown;
        out.stats.budget_hit = !cancelled_;
        break;
    }
    return out;
  }

 private:
  int index_of(Vertex v) const {
    auto& verts = m_.vertices();
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  }

  bool out_of_budget() {
    if (budget_.max_nodes > 0 && stats_.nodes >= budget_.max_nodes) return true;
    if ((stats_.nodes & 1023) == 0) {
      if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed)) {
        cancelled_ = true;
        return true;
      }
      if (deadline_valid_ && Clock::now() >= deadline_) return true;
    }
    return false;
  }

  // Variable order: fewest remaining colors, ties by tie_rank. -1 when all
  // vertices are assigned.
  int pick_vertex() const {
    int best = -1;
    for (int i = 0; i < n_; ++i) {
      if (assigned_[static_cast<std::size_t>(i)] != 0) continue;
      if (best == -1 || counts_[static_cast<std::size_t>(i)] < counts_[static_cast<std::size_t>(best)] ||
          (counts_[static_cast<std::size_t>(i)] == counts_[static_cast<std::size_t>(best)] &&
           tie_rank_[static_cast<std::size_t>(i)] < tie_rank_[static_cast<std::size_t>(best)])) {
        best = i;
      }
    }
    return best;
  }

  Walk dfs() {
    int v = pick_vertex();
    if (v == -1) return Walk::Found;
    const auto sv = static_cast<std::size_t>(v);
    if (counts_[sv] == 0) return Walk::Exhausted;
    for (int c : colors_[sv]) {
      if (!avail_[sv].test(c)) continue;
      ++stats_.nodes;
      if (out_of_budget()) return Walk::Aborted;
      assigned_[sv] = c;
      std::size_t trail_mark = trail_.size();
      bool conflict = false;
      for (auto [u, col] : adj_[sv]) {
        const auto su = static_cast<std::size_t>(u);
        if (col != c || assigned_[su] != 0 || !avail_[su].test(c)) continue;
        avail_[su].clear(c);
        --counts_[su];
        ++stats_.propagations;
        trail_.push_back({u, c});
        if (counts_[su] == 0) {
          conflict = true;
          break;
        }
      }
      if (!conflict) {
        Walk w = dfs();
        if (w != Walk::Exhausted) return w;
      }
      while (trail_.size() > trail_mark) {
        auto [u, col] = trail_.back();
        trail_.pop_back();
        avail_[static_cast<std::size_t>(u)].set(col);
        ++counts_[static_cast<std::size_t>(u)];
      }
      assigned_[sv] = 0;
    }
    return Walk::Exhausted;
  }

  void check_witness(const CooperativeColoring& w) const {
    for (int i = 0; i < n_; ++i) {
      Vertex v = m_.vertices()[static_cast<std::size_t>(i)];
      int c = w.color_of(v);
      bool listed = std::binary_search(colors_[static_cast<std::size_t>(i)].begin(),
                                       colors_[static_cast<std::size_t>(i)].end(), c);
      if (!listed) throw InternalError("witness uses a color outside the vertex's palette");
    }
    for (const ColoredEdge& ce : m_.colored_edges()) {
      if (w.color_of(ce.e.u) == ce.color && w.color_of(ce.e.v) == ce.color) {
        throw InternalError("witness violates a colored edge");
      }
    }
  }

  const EdgeColoredMultigraph& m_;
  Budget budget_;
  const std::atomic<bool>* cancel_;
  int n_ = 0;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<std::vector<int>> colors_;  // sorted unique palette per vertex
  std::vector<ColorSet> avail_;
  std::vector<int> counts_;
  std::vector<int> assigned_;
  std::vector<int> tie_rank_;
  std::vector<std::pair<int, int>> trail_;
  SearchStats stats_;
  Clock::time_point deadline_;
  bool deadline_valid_ = false;
  bool cancelled_ = false;
};

SearchOutcome search_one(const EdgeColoredMultigraph& m,
                         const std::vector<std::vector<int>>& allowed, const Budget& budget,
                         std::uint64_t tie_seed, const std::atomic<bool>* cancel) {
  AdaptedSearch s(m, allowed, budget, tie_seed, cancel);
  return s.run();
}

}  // namespace

SearchOutcome solve_adapted_exact(const EdgeColoredMultigraph& m,
                                  const std::vector<std::vector<int>>& allowed,
                                  const Budget& budget, std::uint64_t tie_seed) {
  return search_one(m, allowed, budget, tie_seed, nullptr);
}

SearchOutcome solve_adapted_exact(const EdgeColoredMultigraph& m, const std::vector<int>& palette,
                                  const Budget& budget) {
  if (palette.empty()) throw ContractError("palette must be nonempty");
  std::vector<std::vector<int>> allowed(m.vertices().size(), palette);
  return solve_adapted_exact(m, allowed, budget, 0);
}

SearchOutcome solve_cooperative_exact(const GraphFamily& family, const Budget& budget) {
  EdgeColoredMultigraph m = family_to_adapted(family);
  std::vector<std::vector<int>> allowed;
  allowed.reserve(m.vertices().size());
  for (Vertex v : m.vertices()) allowed.push_back(family.memberships(v));
  SearchOutcome out = solve_adapted_exact(m, allowed, budget, 0);
  if (out.status == Status::Sat) {
    std::string why;
    if (!verify_cooperative(family, *out.witness, &why)) {
      throw InternalError("cooperative witness rejected: " + why);
    }
  }
  return out;
}

SearchOutcome solve_adapted_portfolio(const EdgeColoredMultigraph& m,
                                      const std::vector<std::vector<int>>& allowed,
                                      const Budget& budget, int workers, std::uint64_t seed) {
  if (workers < 1) throw ContractError("portfolio needs at least one worker");
  if (workers == 1) return solve_adapted_exact(m, allowed, budget, 0);
  std::atomic<bool> stop{false};
  std::vector<SearchOutcome> results(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      std::uint64_t tie =
          w == 0 ? 0 : mix_seed(seed, static_cast<std::uint64_t>(w));
      SearchOutcome r = search_one(m, allowed, budget, tie, &stop);
      if (r.status != Status::Unknown) stop.store(true, std::memory_order_relaxed);
      results[static_cast<std::size_t>(w)] = std::move(r);
    });
  }
  for (auto& t : threads) t.join();
  for (auto& r : results) {
    if (r.status != Status::Unknown) return std::move(r);
  }
  SearchOutcome out = std::move(results[0]);
  for (std::size_t i = 1; i < results.size(); ++i) {
    out.stats.nodes += results[i].stats.nodes;
    out.stats.propagations += results[i].stats.propagations;
    out.stats.budget_hit = out.stats.budget_hit || results[i].stats.budget_hit;
  }
  return out;
}

SearchOutcome solve_cooperative_portfolio(const GraphFamily& family, const Budget& budget,
                                          int workers, std::uint64_t seed) {
  EdgeColoredMultigraph m = family_to_adapted(family);
  std::vector<std::vector<int>> allowed;
  allowed.reserve(m.vertices().size());
  for (Vertex v : m.vertices()) allowed.push_back(family.memberships(v));
  SearchOutcome out = solve_adapted_portfolio(m, allowed, budget, workers, seed);
  if (out.status == Status::Sat) {
    std::string why;
    if (!verify_cooperative(family, *out.witness, &why)) {
      throw InternalError("cooperative witness rejected: " + why);
    }
  }
  return out;
}

}  // namespace coopcolor
