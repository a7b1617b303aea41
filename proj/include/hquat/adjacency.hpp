#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "quat.hpp"
#include "residue.hpp"

namespace hquat {

/// a written as 2^k * alpha with at least one odd component in alpha.
struct NormalizedQuat {
  int k = 0;
  Quat alpha;
};

inline NormalizedQuat normalize(const Quat& a) {
  if (a.is_zero()) throw std::domain_error("normalize: zero quaternion");
  int n = a.modulus().n;
  int k = n;
  for (std::uint32_t x : a.c) k = std::min(k, nu2_capped(x, n));
  NormalizedQuat out;
  out.k = k;
  out.alpha = a;
  for (auto& x : out.alpha.c) x >>= k;  // exact: 2^k divides every lift
  return out;
}

/// The four product components as exact integers on the canonical lifts,
/// before any reduction, so their 2-adic valuations are well defined even
/// when the reduced value vanishes.
inline std::array<std::int64_t, 4> lifted_product(const Quat& a, const Quat& b) {
  std::int64_t a1 = a.c[0], a2 = a.c[1], a3 = a.c[2], a4 = a.c[3];
  std::int64_t b1 = b.c[0], b2 = b.c[1], b3 = b.c[2], b4 = b.c[3];
  return {a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4,
          a2 * b1 + a1 * b2 - a4 * b3 + a3 * b4,
          a3 * b1 + a4 * b2 + a1 * b3 - a2 * b4,
          a4 * b1 - a3 * b2 + a2 * b3 + a1 * b4};
}

struct PairValuations {
  int k = 0;   // common 2-power of a
  int l = 0;   // common 2-power of b
  int nu = 0;  // min valuation over the normalized product components
};

/// k, l and nu = min nu2 of the normalized product, each capped at n.
/// If all four normalized products were 0 as integers the min would cap at n
/// and the pair reads non-adjacent; over the integers this cannot actually
/// happen for nonzero inputs, but the convention keeps the function total.
inline PairValuations nu_min(const Quat& a, const Quat& b) {
  require_same_modulus(a, b);
  int n = a.modulus().n;
  NormalizedQuat na = normalize(a);
  NormalizedQuat nb = normalize(b);
  auto p = lifted_product(na.alpha, nb.alpha);
  int nu = n;
  for (std::int64_t x : p) nu = std::min(nu, nu2_capped(x, n));
  return {na.k, nb.k, nu};
}

inline void require_vertex_pair(const Quat& a, const Quat& b) {
  require_same_modulus(a, b);
  if (!is_vertex(a) || !is_vertex(b)) throw std::invalid_argument("adjacency: inputs must be vertices");
  if (a == b) throw std::invalid_argument("adjacency: vertices must be distinct");
}

/// Valuation criterion: a and b are adjacent iff k + l + nu < n.
inline bool adjacent_fast(const Quat& a, const Quat& b) {
  require_vertex_pair(a, b);
  PairValuations v = nu_min(a, b);
  return v.k + v.l + v.nu < a.modulus().n;
}

/// One-sided definition: the product a*b is nonzero.
inline bool adjacent_left(const Quat& a, const Quat& b) {
  require_vertex_pair(a, b);
  return !quat_mul(a, b).is_zero();
}

/// Canonical two-sided adjacency: some product in either order is nonzero.
/// The symmetry audit in the verification suite records whether the one-sided
/// form ever disagrees.
inline bool adjacent_brute(const Quat& a, const Quat& b) {
  require_vertex_pair(a, b);
  return !quat_mul(a, b).is_zero() || !quat_mul(b, a).is_zero();
}

}  // namespace hquat
