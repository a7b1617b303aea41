#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace hquat {

struct GreedyColoring {
  std::vector<int> color;  // per vertex, 0-based
  int count = 0;
};

/// Greedy coloring in smallest-last (degeneracy) order. For a connected
/// graph that is not regular the degeneracy is at most Delta - 1, so the
/// witness never exceeds Delta colors. Ties break on the lowest index,
/// keeping the coloring deterministic.
inline GreedyColoring greedy_coloring_smallest_last(const GraphSnapshot& g) {
  std::size_t v = g.vertex_count();
  std::vector<std::size_t> deg(v);
  for (std::size_t i = 0; i < v; ++i) deg[i] = g.degree(i);

  std::vector<std::size_t> removal_order;
  removal_order.reserve(v);
  std::vector<char> removed(v, 0);
  for (std::size_t step = 0; step < v; ++step) {
    std::size_t pick = v;
    for (std::size_t i = 0; i < v; ++i)
      if (!removed[i] && (pick == v || deg[i] < deg[pick])) pick = i;
    removed[pick] = 1;
    removal_order.push_back(pick);
    g.for_each_neighbor(pick, [&](std::size_t j) {
      if (!removed[j]) --deg[j];
    });
  }

  GreedyColoring out;
  out.color.assign(v, -1);
  std::vector<char> used;
  for (std::size_t p = v; p-- > 0;) {
    std::size_t i = removal_order[p];
    used.assign(v, 0);
    g.for_each_neighbor(i, [&](std::size_t j) {
      if (out.color[j] >= 0) used[static_cast<std::size_t>(out.color[j])] = 1;
    });
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    out.color[i] = c;
    out.count = std::max(out.count, c + 1);
  }
  return out;
}

/// Exact clique/chromatic machinery over all induced subgraphs of a graph
/// with at most 20 vertices, driven by subset dynamic programming. Powers
/// the exact omega/chi values and the full perfection sweep at n = 1.
class ExactSmallGraph {
 public:
  explicit ExactSmallGraph(const GraphSnapshot& g) {
    v_ = g.vertex_count();
    if (v_ > 20) throw std::invalid_argument("ExactSmallGraph: capped at 20 vertices");
    nb_.assign(v_, 0);
    for (std::size_t i = 0; i < v_; ++i)
      g.for_each_neighbor(i, [&](std::size_t j) { nb_[i] |= std::uint32_t{1} << j; });
    build_omega();
    chi_.assign(std::size_t{1} << v_, -1);
    chi_[0] = 0;
  }

  int omega(std::uint32_t subset) const { return omega_[subset]; }
  int omega_full() const { return omega_[(std::uint32_t{1} << v_) - 1]; }

  int chi(std::uint32_t subset) { return chi_rec(subset); }
  int chi_full() { return chi_rec((std::uint32_t{1} << v_) - 1); }

  /// chi == omega on every induced subgraph.
  bool perfect() {
    std::uint32_t full = (std::uint32_t{1} << v_) - 1;
    for (std::uint32_t s = 1; s <= full; ++s)
      if (chi_rec(s) != omega_[s]) return false;
    return true;
  }

 private:
  void build_omega() {
    std::size_t total = std::size_t{1} << v_;
    omega_.assign(total, 0);
    for (std::uint32_t s = 1; s < total; ++s) {
      int v = std::countr_zero(s);
      std::uint32_t rest = s & (s - 1);
      omega_[s] = std::max<int>(omega_[rest], 1 + omega_[rest & nb_[static_cast<std::size_t>(v)]]);
    }
  }

  // chi(S) = 1 + min over independent sets I containing the lowest vertex
  // of chi(S \ I); every color class may be taken to contain that vertex.
  int chi_rec(std::uint32_t s) {
    if (chi_[s] >= 0) return chi_[s];
    int low = std::countr_zero(s);
    int best = 1 + static_cast<int>(v_);
    std::uint32_t first = std::uint32_t{1} << low;
    std::uint32_t allowed = s & ~nb_[static_cast<std::size_t>(low)] & ~(first | (first - 1));
    grow_independent(s, first, allowed, best);
    chi_[s] = best;
    return best;
  }

  void grow_independent(std::uint32_t s, std::uint32_t members, std::uint32_t allowed, int& best) {
    int tail = 1 + chi_rec(s & ~members);
    best = std::min(best, tail);
    std::uint32_t rest = allowed;
    while (rest) {
      int w = std::countr_zero(rest);
      std::uint32_t wb = std::uint32_t{1} << w;
      rest &= rest - 1;
      grow_independent(s, members | wb, rest & ~nb_[static_cast<std::size_t>(w)], best);
    }
  }

  std::size_t v_ = 0;
  std::vector<std::uint32_t> nb_;
  std::vector<int> omega_;
  std::vector<int> chi_;
};

/// Pairwise adjacency check for a candidate clique; returns the violating
/// index pairs (capped at `limit` listed pairs, full count in `total`).
struct CliqueCheck {
  std::uint64_t violations = 0;
  std::vector<std::pair<std::size_t, std::size_t>> examples;
};

inline CliqueCheck clique_violations(const GraphSnapshot& g, const std::vector<std::size_t>& members,
                                     std::size_t limit = 4) {
  CliqueCheck out;
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y)
      if (!g.adjacent(members[x], members[y])) {
        ++out.violations;
        if (out.examples.size() < limit) out.examples.emplace_back(members[x], members[y]);
      }
  return out;
}

}  // namespace hquat
