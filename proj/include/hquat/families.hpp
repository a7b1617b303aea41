#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quat.hpp"
#include "residue.hpp"

namespace hquat {

/// Streams every ring element in lexicographic component order.
template <typename Fn>
void for_each_element(Modulus m, Fn&& fn) {
  std::uint64_t total = std::uint64_t{1} << (4 * m.n);
  for (std::uint64_t code = 0; code < total; ++code) fn(Quat::from_code(code, m));
}

/// Streams every graph vertex (all elements except 0, 1, -1) in
/// lexicographic order; the workhorse for formula-mode degree scans where a
/// materialized vertex list would not fit.
template <typename Fn>
void for_each_vertex(Modulus m, Fn&& fn) {
  for_each_element(m, [&](const Quat& q) {
    if (is_vertex(q)) fn(q);
  });
}

inline std::uint64_t vertex_count_closed_form(Modulus m) {
  std::uint64_t total = std::uint64_t{1} << (4 * m.n);
  return m.n == 1 ? total - 2 : total - 3;
}

/// Materialized vertex list in lexicographic order. Capped at n = 5; larger
/// moduli go through for_each_vertex instead.
inline std::vector<Quat> enumerate_vertices(Modulus m) {
  if (m.n > 5) throw std::invalid_argument("enumerate_vertices: list form capped at n = 5, use the streaming visitor");
  std::vector<Quat> out;
  out.reserve(vertex_count_closed_form(m));
  for_each_vertex(m, [&](const Quat& q) { out.push_back(q); });
  return out;
}

/// Unit vertices (all units except 1 and -1), lexicographic.
inline std::vector<Quat> unit_vertices(Modulus m) {
  if (m.n > 5) throw std::invalid_argument("unit_vertices: capped at n = 5");
  std::vector<Quat> out;
  for_each_vertex(m, [&](const Quat& q) {
    if (classify(q) == ElementClass::Unit) out.push_back(q);
  });
  return out;
}

namespace detail {

inline std::vector<std::uint32_t> residues_with_parity(Modulus m, bool odd) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = odd ? 1 : 0; x < m.value(); x += 2) out.push_back(x);
  return out;
}

/// Residues whose 2-adic valuation is exactly l (i.e. 2^l times a unit).
inline std::vector<std::uint32_t> residues_with_exact_valuation(Modulus m, int l) {
  std::vector<std::uint32_t> out;
  if (l >= m.n) return out;
  for (std::uint32_t u = 1; (u << l) < m.value(); u += 2) out.push_back(u << l);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// The structured element family whose members the source analysis groups
/// into a single large complete subgraph: every two-odd/two-even parity
/// pattern, the all-odd pattern, and axis elements 2^l*u (one nonzero slot,
/// 1 <= l < n-1). For n = 1 the all-odd singleton is excluded.
/// Lexicographically sorted.
inline std::vector<Quat> clique_family(Modulus m) {
  std::vector<Quat> out;
  auto evens = detail::residues_with_parity(m, false);
  auto odds = detail::residues_with_parity(m, true);
  auto push_pattern = [&](bool o1, bool o2, bool o3, bool o4) {
    const auto& p1 = o1 ? odds : evens;
    const auto& p2 = o2 ? odds : evens;
    const auto& p3 = o3 ? odds : evens;
    const auto& p4 = o4 ? odds : evens;
    for (auto x1 : p1)
      for (auto x2 : p2)
        for (auto x3 : p3)
          for (auto x4 : p4) out.push_back(Quat(x1, x2, x3, x4, m));
  };
  // the six placements of two odd components
  push_pattern(false, false, true, true);
  push_pattern(false, true, false, true);
  push_pattern(false, true, true, false);
  push_pattern(true, false, false, true);
  push_pattern(true, false, true, false);
  push_pattern(true, true, false, false);
  // all odd
  push_pattern(true, true, true, true);
  // axis powers
  for (int l = 1; l < m.n - 1; ++l)
    for (auto v : detail::residues_with_exact_valuation(m, l))
      for (int pos = 0; pos < 4; ++pos) {
        std::int64_t comps[4] = {0, 0, 0, 0};
        comps[pos] = v;
        out.push_back(Quat(comps[0], comps[1], comps[2], comps[3], m));
      }
  if (m.n == 1) std::erase(out, Quat(1, 1, 1, 1, m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t clique_family_size_closed_form(Modulus m) {
  int n = m.n;
  if (n == 1) return (std::uint64_t{1} << (4 * n - 1)) - 2;
  return (std::uint64_t{1} << (4 * n - 1)) - (std::uint64_t{1} << (4 * n - 4)) +
         (std::uint64_t{1} << (n + 1)) - 8;
}

/// The three-way vertex split used by the Hamiltonian construction:
/// V1 = nonzero all-even zero-divisors, V2 = the remaining zero-divisor
/// vertices (some component odd), V3 = unit vertices.
enum class PartitionClass { V1, V2, V3 };

inline PartitionClass partition_class(const Quat& q) {
  if (classify(q) == ElementClass::Unit) return PartitionClass::V3;
  bool all_even = ((q.c[0] | q.c[1] | q.c[2] | q.c[3]) & 1u) == 0;
  return all_even ? PartitionClass::V1 : PartitionClass::V2;
}

struct HamiltonPartition {
  std::vector<Quat> v1, v2, v3;  // each part lexicographic
};

inline HamiltonPartition hamilton_partition(Modulus m) {
  if (m.n > 5) throw std::invalid_argument("hamilton_partition: capped at n = 5");
  HamiltonPartition p;
  for_each_vertex(m, [&](const Quat& q) {
    switch (partition_class(q)) {
      case PartitionClass::V1: p.v1.push_back(q); break;
      case PartitionClass::V2: p.v2.push_back(q); break;
      case PartitionClass::V3: p.v3.push_back(q); break;
    }
  });
  return p;
}

/// Structured vertex pairs the source analysis asserts to be non-adjacent,
/// tagged by the generating rule. The verification suite checks each pair
/// against the brute-force predicate and logs the rules that fail.
struct CatalogPair {
  std::string_view rule;
  Quat a, b;
};

inline std::vector<CatalogPair> nonadjacent_pairs_catalog(Modulus m) {
  std::vector<CatalogPair> out;
  int n = m.n;

  auto tuples_of = [&](const std::vector<std::uint32_t>& pool) {
    std::vector<Quat> qs;
    for (auto x1 : pool)
      for (auto x2 : pool)
        for (auto x3 : pool)
          for (auto x4 : pool) qs.push_back(Quat(x1, x2, x3, x4, m));
    return qs;
  };

  // complement-scale: every component of a has valuation exactly s, every
  // component of b valuation exactly n-s, 0 < s < n
  for (int s = 1; s < n; ++s) {
    auto as = tuples_of(detail::residues_with_exact_valuation(m, s));
    auto bs = tuples_of(detail::residues_with_exact_valuation(m, n - s));
    for (const auto& a : as)
      for (const auto& b : bs)
        if (a != b) out.push_back({"complement-scale", a, b});
  }

  // offset-scale: valuations exactly s vs exactly n-s-1, 0 <= s < n
  for (int s = 0; s < n; ++s) {
    auto as = tuples_of(detail::residues_with_exact_valuation(m, s));
    auto bs = tuples_of(detail::residues_with_exact_valuation(m, n - s - 1));
    for (const auto& a : as)
      for (const auto& b : bs)
        if (a != b) out.push_back({"offset-scale", a, b});
  }

  // half-modulus-same-form: components in {0, 2^{n-1}}, pairwise.
  // Degenerates to the whole vertex set at n = 1, so generated for n >= 2.
  if (n >= 2) {
    std::vector<Quat> hm;
    std::uint32_t h = std::uint32_t{1} << (n - 1);
    for (int mask = 1; mask < 16; ++mask)
      hm.push_back(Quat((mask & 8) ? h : 0, (mask & 4) ? h : 0, (mask & 2) ? h : 0,
                        (mask & 1) ? h : 0, m));
    std::sort(hm.begin(), hm.end());
    for (std::size_t i = 0; i < hm.size(); ++i)
      for (std::size_t j = i + 1; j < hm.size(); ++j)
        out.push_back({"half-modulus-same-form", hm[i], hm[j]});
  }

  // half-modulus-vs-zero-divisor: (2^{n-1},...,2^{n-1}) against every
  // zero-divisor vertex
  {
    std::uint32_t h = std::uint32_t{1} << (n - 1);
    Quat hq(h, h, h, h, m);
    if (m.n <= 5) {
      for_each_vertex(m, [&](const Quat& q) {
        if (q != hq && classify(q) == ElementClass::ZeroDivisor)
          out.push_back({"half-modulus-vs-zero-divisor", hq, q});
      });
    }
  }

  // quarter-scale-vs-diagonal: components of a all valuation exactly n-2,
  // b = (x,x,x,x) for any nonzero x; needs n >= 2
  if (n >= 2) {
    auto as = tuples_of(detail::residues_with_exact_valuation(m, n - 2));
    for (const auto& a : as)
      for (std::uint32_t x = 1; x < m.value(); ++x) {
        Quat b(x, x, x, x, m);
        if (a != b) out.push_back({"quarter-scale-vs-diagonal", a, b});
      }
  }

  // diagonal-same-form: distinct diagonal vertices, stated for n > 1
  if (n >= 2) {
    for (std::uint32_t x = 1; x < m.value(); ++x)
      for (std::uint32_t y = x + 1; y < m.value(); ++y)
        out.push_back({"diagonal-same-form", Quat(x, x, x, x, m), Quat(y, y, y, y, m)});
  }

  return out;
}

/// Axis elements 2^l * u at one position, zeros elsewhere, with their scale;
/// two of them are adjacent exactly when the scales sum below n.
struct AxisElement {
  Quat q;
  int level;
};

inline std::vector<AxisElement> axis_elements(Modulus m) {
  std::vector<AxisElement> out;
  for (int l = 1; l < m.n; ++l)
    for (auto v : detail::residues_with_exact_valuation(m, l))
      for (int pos = 0; pos < 4; ++pos) {
        std::int64_t comps[4] = {0, 0, 0, 0};
        comps[pos] = v;
        out.push_back({Quat(comps[0], comps[1], comps[2], comps[3], m), l});
      }
  return out;
}

}  // namespace hquat
