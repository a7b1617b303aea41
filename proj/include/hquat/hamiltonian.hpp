#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace hquat {

struct HamiltonianCycle {
  std::vector<std::size_t> order;  // every vertex exactly once, last wraps to first
  bool construction_followed = true;  // the literal construction needed no repair
  std::uint64_t repairs = 0;
};

/// First defect of a candidate cycle: either a repeated/missing vertex
/// (reported as {size, size}) or the first non-adjacent consecutive pair,
/// returned as positions. std::nullopt means the cycle is valid.
inline std::optional<std::pair<std::size_t, std::size_t>> find_cycle_defect(
    const GraphSnapshot& g, const std::vector<std::size_t>& order) {
  std::size_t v = g.vertex_count();
  if (order.size() != v) return std::make_pair(v, v);
  std::vector<char> seen(v, 0);
  for (std::size_t x : order) {
    if (x >= v || seen[x]) return std::make_pair(v, v);
    seen[x] = 1;
  }
  for (std::size_t p = 0; p < v; ++p) {
    std::size_t q = (p + 1) % v;
    if (!g.adjacent(order[p], order[q])) return std::make_pair(p, q);
  }
  return std::nullopt;
}

namespace detail {

/// 2-opt rotation: fix the non-edge at positions (0,1) of a rotated copy by
/// reversing a prefix whose endpoints reconnect. Each repair strictly
/// reduces the number of defective consecutive pairs.
inline bool repair_step(const GraphSnapshot& g, std::vector<std::size_t>& order, std::size_t bad_pos) {
  std::size_t v = order.size();
  std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>((bad_pos + 1) % v), order.end());
  // now the defective edge is (order[v-1], order[0]); equivalently treat the
  // sequence as a path from order[0] to order[v-1] needing its ends joined.
  // Reversing order[0..j] replaces edges (j, j+1) and the closing edge with
  // (order[0], order[j+1]) and (order[j], order[v-1]).
  for (std::size_t j = 1; j + 1 < v; ++j) {
    if (!g.adjacent(order[j], order[v - 1])) continue;
    if (!g.adjacent(order[0], order[j + 1])) continue;
    std::reverse(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j + 1));
    return true;
  }
  return false;
}

}  // namespace detail

/// Hamiltonian cycle following the partition construction: a path through
/// the odd-component zero-divisors, a bridge into the units, an alternating
/// units/all-even path absorbing the all-even zero-divisors, the remaining
/// units, and the closing edge. Any consecutive pair the construction gets
/// wrong is repaired by deterministic 2-opt rotations and counted.
inline HamiltonianCycle hamiltonian_cycle(const GraphSnapshot& g) {
  Modulus m = g.modulus();
  std::size_t v = g.vertex_count();

  std::vector<std::size_t> v1, v2, v3;
  for (std::size_t i = 0; i < v; ++i) {
    switch (partition_class(g.vertex(i))) {
      case PartitionClass::V1: v1.push_back(i); break;
      case PartitionClass::V2: v2.push_back(i); break;
      case PartitionClass::V3: v3.push_back(i); break;
    }
  }

  HamiltonianCycle out;
  std::vector<std::size_t>& order = out.order;
  order.reserve(v);

  if (m.n == 1) {
    // all-ones vertex, a unit, the other twelve, a closing unit
    std::ptrdiff_t diag = g.index_of(Quat(1, 1, 1, 1, m));
    order.push_back(static_cast<std::size_t>(diag));
    order.push_back(v3.front());
    for (std::size_t i = 0; i < v; ++i)
      if (i != static_cast<std::size_t>(diag) && i != v3.front() && i != v3.back()) order.push_back(i);
    order.push_back(v3.back());
  } else {
    if (v3.size() < v1.size() + 1) throw std::logic_error("hamiltonian_cycle: not enough units to absorb the all-even part");
    order.insert(order.end(), v2.begin(), v2.end());
    order.push_back(v3[0]);
    for (std::size_t i = 0; i < v1.size(); ++i) {
      order.push_back(v1[i]);
      order.push_back(v3[i + 1]);
    }
    for (std::size_t i = v1.size() + 1; i < v3.size(); ++i) order.push_back(v3[i]);
  }

  std::uint64_t guard = static_cast<std::uint64_t>(v) * v + 16;
  for (;;) {
    auto defect = find_cycle_defect(g, order);
    if (!defect) break;
    if (defect->first >= v) throw std::logic_error("hamiltonian_cycle: constructed order is not a permutation");
    out.construction_followed = false;
    ++out.repairs;
    if (out.repairs > guard) throw std::runtime_error("hamiltonian_cycle: repair did not converge");
    if (!detail::repair_step(g, order, defect->first))
      throw std::runtime_error("hamiltonian_cycle: no admissible 2-opt rotation found");
  }
  return out;
}

}  // namespace hquat
