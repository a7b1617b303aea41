#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "mat4.hpp"
#include "quat.hpp"
#include "residue.hpp"

namespace hquat {

// Exact integer scalar for the normal-form computations. Transform entries
// can exceed 64 bits on adversarial inputs, so the whole pipeline runs on
// arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

/// 4x4 matrix over exact big integers.
struct WideMat4 {
  std::array<std::array<BigInt, 4>, 4> m{};

  static WideMat4 identity() {
    WideMat4 e;
    for (int i = 0; i < 4; ++i) e.m[i][i] = 1;
    return e;
  }
  static WideMat4 from(const Mat4& s) {
    WideMat4 w;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) w.m[i][j] = s(i, j);
    return w;
  }
  BigInt& operator()(int i, int j) { return m[i][j]; }
  const BigInt& operator()(int i, int j) const { return m[i][j]; }
  bool operator==(const WideMat4&) const = default;
};

inline WideMat4 wide_mat_mul(const WideMat4& a, const WideMat4& b) {
  WideMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      BigInt s = 0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline BigInt wide_det(const WideMat4& a) {
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return a(r0, c0) * (a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1)) -
           a(r0, c1) * (a(r1, c0) * a(r2, c2) - a(r1, c2) * a(r2, c0)) +
           a(r0, c2) * (a(r1, c0) * a(r2, c1) - a(r1, c1) * a(r2, c0));
  };
  BigInt d = 0;
  int sign = 1;
  for (int j = 0; j < 4; ++j) {
    int cols[3], k = 0;
    for (int c = 0; c < 4; ++c)
      if (c != j) cols[k++] = c;
    d += sign * a(0, j) * det3(1, 2, 3, cols[0], cols[1], cols[2]);
    sign = -sign;
  }
  return d;
}

/// Invariant factors d1 | d2 | d3 | d4, stored non-negative
/// (every integer divides 0, so trailing zeros keep the chain valid).
struct SnfDiagonal {
  std::array<BigInt, 4> d{};
  bool operator==(const SnfDiagonal&) const = default;
};

/// u * input * v == diag(d) with |det u| = |det v| = 1, all exact.
struct SnfDecomposition {
  SnfDiagonal diag;
  WideMat4 u, v;
};

namespace detail {

inline int nu2_big(const BigInt& x, int cap) {
  if (x == 0) return cap;
  int v = static_cast<int>(boost::multiprecision::lsb(boost::multiprecision::abs(x)));
  return v < cap ? v : cap;
}

/// g = gcd(p, q) > 0 together with x*p + y*q = g.
inline BigInt ext_gcd(BigInt p, BigInt q, BigInt& x, BigInt& y) {
  BigInt old_r = std::move(p), r = std::move(q);
  BigInt old_x = 1, cx = 0;
  BigInt old_y = 0, cy = 1;
  while (r != 0) {
    BigInt quo = old_r / r;
    BigInt tmp = old_r - quo * r;
    old_r = r;
    r = tmp;
    tmp = old_x - quo * cx;
    old_x = cx;
    cx = tmp;
    tmp = old_y - quo * cy;
    old_y = cy;
    cy = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

}  // namespace detail

/// Integer Smith normal form of a 4x4 matrix.
///
/// Deterministic variant of the classical algorithm: the pivot is the
/// minimal-|value| nonzero entry of the active submatrix (row-major ties).
/// An entry the pivot divides is cleared by plain subtraction (no feedback
/// into the pivot row/column); anything else goes through one 2x2
/// extended-gcd transform of determinant one, which strictly shrinks the
/// pivot and so bounds the number of passes. A row merge repairs
/// divisibility over the trailing submatrix before each pivot is finalized.
inline SnfDecomposition smith_normal_form(const Mat4& input) {
  WideMat4 a = WideMat4::from(input);
  WideMat4 u = WideMat4::identity();
  WideMat4 v = WideMat4::identity();

  auto row_swap = [&](int r1, int r2) {
    if (r1 == r2) return;
    std::swap(a.m[r1], a.m[r2]);
    std::swap(u.m[r1], u.m[r2]);
  };
  auto col_swap = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < 4; ++i) {
      std::swap(a(i, c1), a(i, c2));
      std::swap(v(i, c1), v(i, c2));
    }
  };
  // rows (t, i): clear a[i][t]
  auto row_step = [&](int t, int i) {
    BigInt p = a(t, t), q = a(i, t);
    if (q % p == 0) {
      BigInt s = q / p;
      for (int j = 0; j < 4; ++j) {
        a(i, j) -= s * a(t, j);
        u(i, j) -= s * u(t, j);
      }
      return;
    }
    BigInt x, y;
    BigInt g = detail::ext_gcd(p, q, x, y);
    BigInt ps = p / g, qs = q / g;  // [[x, y], [-qs, ps]] has determinant one
    for (int j = 0; j < 4; ++j) {
      BigInt rt = x * a(t, j) + y * a(i, j);
      BigInt ri = -qs * a(t, j) + ps * a(i, j);
      a(t, j) = std::move(rt);
      a(i, j) = std::move(ri);
      rt = x * u(t, j) + y * u(i, j);
      ri = -qs * u(t, j) + ps * u(i, j);
      u(t, j) = std::move(rt);
      u(i, j) = std::move(ri);
    }
  };
  // columns (t, j): clear a[t][j]
  auto col_step = [&](int t, int j) {
    BigInt p = a(t, t), q = a(t, j);
    if (q % p == 0) {
      BigInt s = q / p;
      for (int i = 0; i < 4; ++i) {
        a(i, j) -= s * a(i, t);
        v(i, j) -= s * v(i, t);
      }
      return;
    }
    BigInt x, y;
    BigInt g = detail::ext_gcd(p, q, x, y);
    BigInt ps = p / g, qs = q / g;
    for (int i = 0; i < 4; ++i) {
      BigInt ct = x * a(i, t) + y * a(i, j);
      BigInt cj = -qs * a(i, t) + ps * a(i, j);
      a(i, t) = std::move(ct);
      a(i, j) = std::move(cj);
      ct = x * v(i, t) + y * v(i, j);
      cj = -qs * v(i, t) + ps * v(i, j);
      v(i, t) = std::move(ct);
      v(i, j) = std::move(cj);
    }
  };
  auto row_add = [&](int dst, int src) {
    for (int j = 0; j < 4; ++j) {
      a(dst, j) += a(src, j);
      u(dst, j) += u(src, j);
    }
  };
  auto row_negate = [&](int r) {
    for (int j = 0; j < 4; ++j) {
      a(r, j) = -a(r, j);
      u(r, j) = -u(r, j);
    }
  };

  for (int t = 0; t < 4; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      BigInt best = 0;
      for (int i = t; i < 4; ++i)
        for (int j = t; j < 4; ++j) {
          if (a(i, j) == 0) continue;
          BigInt ax = boost::multiprecision::abs(a(i, j));
          if (pi < 0 || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = 4;  // remaining block is zero; trailing invariant factors are 0
        break;
      }
      row_swap(t, pi);
      col_swap(t, pj);

      for (int i = t + 1; i < 4; ++i)
        if (a(i, t) != 0) row_step(t, i);
      for (int j = t + 1; j < 4; ++j)
        if (a(t, j) != 0) col_step(t, j);
      // a gcd column transform mixes the cleared column back in; rerun until
      // both the row and the column stay clean
      bool dirty = false;
      for (int i = t + 1; i < 4; ++i) dirty = dirty || a(i, t) != 0;
      for (int j = t + 1; j < 4; ++j) dirty = dirty || a(t, j) != 0;
      if (dirty) continue;

      // pivot must divide the untouched submatrix for the chain to hold
      int bi = -1;
      for (int i = t + 1; i < 4 && bi < 0; ++i)
        for (int j = t + 1; j < 4; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bi = i;
            break;
          }
      if (bi >= 0) {
        row_add(t, bi);  // merge the offending row and keep reducing
        continue;
      }
      break;
    }
    if (t >= 4) break;
  }

  for (int t = 0; t < 4; ++t)
    if (a(t, t) < 0) row_negate(t);

  SnfDecomposition out;
  for (int i = 0; i < 4; ++i) out.diag.d[i] = a(i, i);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

/// Exact validation of a decomposition: recomposition, divisibility chain
/// and unimodular transforms, all over arbitrary-precision integers.
inline bool snf_certificate(const Mat4& m, const SnfDecomposition& s) {
  WideMat4 prod = wide_mat_mul(wide_mat_mul(s.u, WideMat4::from(m)), s.v);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (prod(i, j) != (i == j ? s.diag.d[i] : 0)) return false;
  for (int i = 0; i + 1 < 4; ++i) {
    const BigInt& x = s.diag.d[i];
    const BigInt& y = s.diag.d[i + 1];
    if (x < 0 || y < 0) return false;
    if (x == 0 && y != 0) return false;
    if (x != 0 && y % x != 0) return false;
  }
  BigInt du = wide_det(s.u), dv = wide_det(s.v);
  return (du == 1 || du == -1) && (dv == 1 || dv == -1);
}

inline BigInt diag_product(const SnfDiagonal& d) {
  BigInt p = 1;
  for (const BigInt& x : d.d) p *= x;
  return p;
}

/// Number of solutions X in (Z_{2^n})^4 of A·X == 0 (mod 2^n): the product
/// of gcd(d_i, 2^n) over the invariant factors. For a 2-power modulus
/// gcd(d, 2^n) = 2^min(nu2(d), n), with a zero factor contributing a free
/// coordinate (gcd(0, 2^n) := 2^n).
inline std::uint64_t congruence_kernel_count(const Mat4& a, Modulus m) {
  SnfDecomposition s = smith_normal_form(a);
  std::uint64_t count = 1;
  for (const BigInt& d : s.diag.d) count <<= detail::nu2_big(d, m.n);
  return count;
}

/// |{b : a*b = 0}| via the invariant factors of the left-multiplication
/// matrix. Valid for any element: units give 1, zero gives 2^{4n}.
inline std::uint64_t annihilator_count(const Quat& a) {
  return congruence_kernel_count(left_mul_matrix(a), a.modulus());
}

/// Exhaustive annihilator count; oracle for annihilator_count, n <= 4.
inline std::uint64_t kernel_count_brute(const Quat& a) {
  Modulus m = a.modulus();
  if (m.n > 4) throw std::invalid_argument("kernel_count_brute: capped at n = 4");
  std::uint64_t total = std::uint64_t{1} << (4 * m.n);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code)
    if (quat_mul(a, Quat::from_code(code, m)).is_zero()) ++count;
  return count;
}

/// Closed-form vertex degree. The annihilated elements are subtracted from
/// the 2^{4n} ring elements together with the excluded vertices; which
/// constants apply depends on n and on whether a annihilates itself.
inline std::uint64_t degree_formula(const Quat& a) {
  if (!is_vertex(a)) throw std::invalid_argument("degree_formula: input is not a vertex");
  Modulus m = a.modulus();
  std::uint64_t total = std::uint64_t{1} << (4 * m.n);
  std::uint64_t ann = annihilator_count(a);
  bool self_annihilating = quat_mul(a, a).is_zero();
  std::uint64_t excluded;
  if (m.n == 1)
    excluded = self_annihilating ? 1 : 2;
  else
    excluded = self_annihilating ? 2 : 3;
  return total - ann - excluded;
}

}  // namespace hquat
