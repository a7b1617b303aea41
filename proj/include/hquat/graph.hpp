#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "adjacency.hpp"
#include "families.hpp"
#include "parallel.hpp"
#include "quat.hpp"
#include "rng.hpp"

namespace hquat {

/// Explicit vertex-indexed snapshot of the graph for small n.
///
/// Adjacency is one bit-vector per vertex over vertex indices; the graph is
/// dense, so rows double as fast neighborhood sets for the triangle,
/// coloring and BFS passes. Rows are filled from the valuation criterion and
/// audited against the brute-force product predicate on a seeded sample.
class GraphSnapshot {
 public:
  static constexpr int kMaxExplicitExponent = 4;

  static GraphSnapshot build(Modulus m, int threads = default_thread_count(),
                             std::size_t audit_samples = 20000, std::uint64_t audit_seed = 0) {
    if (m.n > kMaxExplicitExponent)
      throw std::invalid_argument("GraphSnapshot: explicit adjacency capped at n = 4");
    GraphSnapshot g(m);
    g.verts_ = enumerate_vertices(m);
    std::size_t v = g.verts_.size();
    g.words_ = (v + 63) / 64;
    g.bits_.assign(g.words_ * v, 0);

    g.code_to_index_.assign(std::size_t{1} << (4 * m.n), -1);
    for (std::size_t i = 0; i < v; ++i) g.code_to_index_[g.verts_[i].code()] = static_cast<std::int32_t>(i);

    // per-vertex normalized form: common 2-power and lifted odd part
    std::vector<int> kv(v);
    std::vector<std::array<std::int64_t, 4>> alpha(v);
    for (std::size_t i = 0; i < v; ++i) {
      NormalizedQuat nq = normalize(g.verts_[i]);
      kv[i] = nq.k;
      for (int t = 0; t < 4; ++t) alpha[i][t] = nq.alpha.c[t];
    }

    const int n = m.n;
    parallel_chunks(0, v, threads, [&](std::size_t lo, std::size_t hi, int) {
      for (std::size_t i = lo; i < hi; ++i) {
        std::uint64_t* row = g.bits_.data() + i * g.words_;
        const auto& ai = alpha[i];
        const int ki = kv[i];
        for (std::size_t j = 0; j < v; ++j) {
          if (j == i) continue;
          int kl = ki + kv[j];
          if (kl >= n) continue;
          const auto& bj = alpha[j];
          std::int64_t p0 = ai[0] * bj[0] - ai[1] * bj[1] - ai[2] * bj[2] - ai[3] * bj[3];
          std::int64_t p1 = ai[1] * bj[0] + ai[0] * bj[1] - ai[3] * bj[2] + ai[2] * bj[3];
          std::int64_t p2 = ai[2] * bj[0] + ai[3] * bj[1] + ai[0] * bj[2] - ai[1] * bj[3];
          std::int64_t p3 = ai[3] * bj[0] - ai[2] * bj[1] + ai[1] * bj[2] + ai[0] * bj[3];
          int nu = n;
          for (std::int64_t p : {p0, p1, p2, p3}) nu = std::min(nu, nu2_capped(p, n));
          if (kl + nu < n) row[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
      }
    });

    if (audit_samples > 0) g.audit(audit_samples, audit_seed);
    return g;
  }

  Modulus modulus() const { return mod_; }
  std::size_t vertex_count() const { return verts_.size(); }
  const std::vector<Quat>& vertices() const { return verts_; }
  const Quat& vertex(std::size_t i) const { return verts_[i]; }

  std::ptrdiff_t index_of(const Quat& q) const {
    if (q.n != mod_.n) return -1;
    std::int32_t i = code_to_index_[q.code()];
    return i;
  }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }

  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t words_per_row() const { return words_; }

  std::size_t degree(std::size_t i) const {
    const std::uint64_t* r = row(i);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  std::uint64_t edge_count() const {
    std::uint64_t twice = 0;
    for (std::size_t i = 0; i < vertex_count(); ++i) twice += degree(i);
    return twice / 2;
  }

  template <typename Fn>
  void for_each_neighbor(std::size_t i, Fn&& fn) const {
    const std::uint64_t* r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bitsw = r[w];
      while (bitsw) {
        int b = std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        fn(w * 64 + static_cast<std::size_t>(b));
      }
    }
  }

 private:
  explicit GraphSnapshot(Modulus m) : mod_(m) {}

  void audit(std::size_t samples, std::uint64_t seed) const {
    Rng rng(seed);
    std::size_t v = verts_.size();
    for (std::size_t s = 0; s < samples; ++s) {
      std::size_t i = rng.below(v);
      std::size_t j = rng.below(v);
      if (i == j) continue;
      bool want = adjacent_brute(verts_[i], verts_[j]);
      if (want != adjacent(i, j))
        throw std::logic_error("GraphSnapshot audit mismatch at pair " + verts_[i].str() + " / " + verts_[j].str());
    }
  }

  Modulus mod_;
  std::vector<Quat> verts_;
  std::vector<std::int32_t> code_to_index_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
};

struct DegreeExtremes {
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
};

inline DegreeExtremes degree_extremes(const GraphSnapshot& g) {
  DegreeExtremes e{~std::uint64_t{0}, 0};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    std::uint64_t d = g.degree(i);
    e.min_degree = std::min(e.min_degree, d);
    e.max_degree = std::max(e.max_degree, d);
  }
  return e;
}

/// Sorted multiset of vertex degrees.
inline std::vector<std::uint64_t> degree_sequence(const GraphSnapshot& g) {
  std::vector<std::uint64_t> out(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) out[i] = g.degree(i);
  std::sort(out.begin(), out.end());
  return out;
}

struct DiameterRadius {
  int diameter = 0;
  int radius = 0;
  bool connected = true;
};

/// Single-source eccentricity; clears `connected` if some vertex stays
/// unreached.
inline int bfs_eccentricity(const GraphSnapshot& g, std::size_t s, bool& connected) {
  std::size_t v = g.vertex_count();
  std::size_t words = g.words_per_row();
  std::uint64_t full_last = (v % 64) ? ((std::uint64_t{1} << (v % 64)) - 1) : ~std::uint64_t{0};
  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  visited[s >> 6] = frontier[s >> 6] = std::uint64_t{1} << (s & 63);
  int level = 0;
  for (;;) {
    bool complete = visited[words - 1] == full_last;
    for (std::size_t w = 0; complete && w + 1 < words; ++w)
      complete = visited[w] == ~std::uint64_t{0};
    if (complete) break;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fbits = frontier[w];
      while (fbits) {
        int b = std::countr_zero(fbits);
        fbits &= fbits - 1;
        const std::uint64_t* row = g.row(w * 64 + static_cast<std::size_t>(b));
        for (std::size_t t = 0; t < words; ++t) next[t] |= row[t];
      }
    }
    bool any = false;
    for (std::size_t t = 0; t < words; ++t) {
      next[t] &= ~visited[t];
      if (next[t]) any = true;
      visited[t] |= next[t];
    }
    if (!any) {
      connected = false;
      break;
    }
    frontier = next;
    ++level;
  }
  return level;
}

/// Eccentricity of every vertex via word-parallel frontier expansion.
inline DiameterRadius diameter_radius(const GraphSnapshot& g, int threads = default_thread_count()) {
  std::size_t v = g.vertex_count();
  std::vector<int> ecc(v, 0);
  std::vector<char> reached_all(v, 1);

  parallel_chunks(0, v, threads, [&](std::size_t lo, std::size_t hi, int) {
    for (std::size_t s = lo; s < hi; ++s) {
      bool connected = true;
      ecc[s] = bfs_eccentricity(g, s, connected);
      if (!connected) reached_all[s] = 0;
    }
  });

  DiameterRadius out;
  out.diameter = 0;
  out.radius = 1 << 30;
  for (std::size_t s = 0; s < v; ++s) {
    if (!reached_all[s]) out.connected = false;
    out.diameter = std::max(out.diameter, ecc[s]);
    out.radius = std::min(out.radius, ecc[s]);
  }
  return out;
}

struct GirthResult {
  int girth = 0;
  std::array<std::size_t, 3> triangle{};  // certificate when girth == 3
};

/// Shortest cycle length. Dense case: scan for a triangle by intersecting
/// neighbor rows; the general BFS fallback handles triangle-free graphs.
inline GirthResult girth(const GraphSnapshot& g) {
  std::size_t v = g.vertex_count();
  std::size_t words = g.words_per_row();
  for (std::size_t i = 0; i < v; ++i) {
    const std::uint64_t* ri = g.row(i);
    for (std::size_t j = i + 1; j < v; ++j) {
      if (!g.adjacent(i, j)) continue;
      const std::uint64_t* rj = g.row(j);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t common = ri[w] & rj[w];
        if (common) {
          std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(common));
          return {3, {i, j, k}};
        }
      }
    }
    // dense graphs resolve on the first few rows; keep scanning otherwise
  }

  // triangle-free: girth via BFS from every vertex (first repeated reach)
  int best = 0;
  for (std::size_t s = 0; s < v; ++s) {
    std::vector<int> dist(v, -1);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t u = queue[qi];
      std::size_t parent_dist = static_cast<std::size_t>(dist[u]);
      g.for_each_neighbor(u, [&](std::size_t w) {
        if (dist[w] < 0) {
          dist[w] = static_cast<int>(parent_dist) + 1;
          queue.push_back(w);
        } else if (dist[w] >= dist[u]) {
          int cycle = dist[u] + dist[w] + 1;
          if (best == 0 || cycle < best) best = cycle;
        }
      });
    }
  }
  return {best, {}};
}

struct EulerianCheck {
  bool eulerian = false;
  std::ptrdiff_t odd_degree_witness = -1;  // vertex index, -1 if none
};

inline EulerianCheck eulerian_check(const GraphSnapshot& g) {
  EulerianCheck out;
  // prefer the all-ones vertex as the documented witness
  Quat all_ones(1, 1, 1, 1, g.modulus());
  std::ptrdiff_t w = g.index_of(all_ones);
  if (w >= 0 && (g.degree(static_cast<std::size_t>(w)) & 1)) {
    out.odd_degree_witness = w;
    return out;
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.degree(i) & 1) {
      out.odd_degree_witness = static_cast<std::ptrdiff_t>(i);
      return out;
    }
  out.eulerian = diameter_radius(g).connected;
  return out;
}

/// Five mutually adjacent vertices (the first five units); certifies
/// non-planarity. Throws if validation fails.
inline std::array<std::size_t, 5> find_k5(const GraphSnapshot& g) {
  std::array<std::size_t, 5> pick{};
  std::size_t got = 0;
  for (std::size_t i = 0; i < g.vertex_count() && got < 5; ++i)
    if (classify(g.vertex(i)) == ElementClass::Unit) pick[got++] = i;
  if (got < 5) throw std::logic_error("find_k5: fewer than five unit vertices");
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!g.adjacent(pick[i], pick[j])) throw std::logic_error("find_k5: selected vertices not mutually adjacent");
  return pick;
}

/// Value-preserving inclusion of a smaller modulus into a larger one keeps
/// every edge: checked exhaustively over the smaller graph's edges.
inline bool embed_check(Modulus small, Modulus large, int threads = default_thread_count()) {
  if (small.n > large.n) throw std::invalid_argument("embed_check: need n1 <= n2");
  if (small.n == large.n) return true;
  GraphSnapshot g = GraphSnapshot::build(small, threads, 0);
  std::size_t v = g.vertex_count();
  std::vector<char> ok(v, 1);
  parallel_chunks(0, v, threads, [&](std::size_t lo, std::size_t hi, int) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Quat& a = g.vertex(i);
      Quat la(a.c[0], a.c[1], a.c[2], a.c[3], large);
      g.for_each_neighbor(i, [&](std::size_t j) {
        if (j < i) return;
        const Quat& b = g.vertex(j);
        Quat lb(b.c[0], b.c[1], b.c[2], b.c[3], large);
        if (!adjacent_fast(la, lb)) ok[i] = 0;
      });
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

/// DOT export, undirected, lexicographic vertex order; byte-deterministic.
inline void write_dot(const GraphSnapshot& g, std::ostream& os) {
  os << "graph nonzero_divisor_graph {\n";
  os << "  // modulus exponent n=" << g.modulus().n << ", vertices=" << g.vertex_count() << "\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    os << "  v" << i << " [label=\"" << g.vertex(i).str() << "\"];\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    g.for_each_neighbor(i, [&](std::size_t j) {
      if (j > i) os << "  v" << i << " -- v" << j << ";\n";
    });
  os << "}\n";
}

/// CSV edge list `a1,a2,a3,a4,b1,b2,b3,b4`, lexicographic, deterministic.
inline void write_edge_csv(const GraphSnapshot& g, std::ostream& os) {
  os << "# vertices=" << g.vertex_count() << " modulus_exponent=" << g.modulus().n << "\n";
  os << "a1,a2,a3,a4,b1,b2,b3,b4\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    g.for_each_neighbor(i, [&](std::size_t j) {
      if (j > i) os << g.vertex(i).str() << "," << g.vertex(j).str() << "\n";
    });
}

/// CSV rows `family_tag,a1,a2,a3,a4` for the named structured families.
inline void write_families_csv(Modulus m, std::ostream& os) {
  os << "family_tag,a1,a2,a3,a4\n";
  HamiltonPartition p = hamilton_partition(m);
  for (const Quat& q : p.v1) os << "v1," << q.str() << "\n";
  for (const Quat& q : p.v2) os << "v2," << q.str() << "\n";
  for (const Quat& q : p.v3) os << "v3," << q.str() << "\n";
  for (const Quat& q : clique_family(m)) os << "clique-family," << q.str() << "\n";
  for (const AxisElement& a : axis_elements(m)) os << "axis-power-" << a.level << "," << a.q.str() << "\n";
}

}  // namespace hquat
