#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace hquat {

using Int128 = __int128;

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiply overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 add overflow");
  return r;
}

/// 4x4 matrix with exact signed 64-bit entries.
struct Mat4 {
  std::array<std::array<std::int64_t, 4>, 4> m{};

  static Mat4 identity() {
    Mat4 e;
    for (int i = 0; i < 4; ++i) e.m[i][i] = 1;
    return e;
  }

  std::int64_t& operator()(int i, int j) { return m[i][j]; }
  std::int64_t operator()(int i, int j) const { return m[i][j]; }

  bool operator==(const Mat4&) const = default;
};

inline std::array<std::int64_t, 4> mat_apply(const Mat4& a, const std::array<std::int64_t, 4>& x) {
  std::array<std::int64_t, 4> r{};
  for (int i = 0; i < 4; ++i) {
    std::int64_t s = 0;
    for (int k = 0; k < 4; ++k) s = checked_add(s, checked_mul(a(i, k), x[k]));
    r[i] = s;
  }
  return r;
}

/// Exact determinant by cofactor expansion. 128-bit accumulation keeps the
/// result exact for every entry range the library produces.
inline Int128 det(const Mat4& a) {
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) -> Int128 {
    Int128 m00 = a(r0, c0), m01 = a(r0, c1), m02 = a(r0, c2);
    Int128 m10 = a(r1, c0), m11 = a(r1, c1), m12 = a(r1, c2);
    Int128 m20 = a(r2, c0), m21 = a(r2, c1), m22 = a(r2, c2);
    return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
           m02 * (m10 * m21 - m11 * m20);
  };
  Int128 d = 0;
  int sign = 1;
  for (int j = 0; j < 4; ++j) {
    int cols[3], k = 0;
    for (int c = 0; c < 4; ++c)
      if (c != j) cols[k++] = c;
    d += sign * Int128(a(0, j)) * det3(1, 2, 3, cols[0], cols[1], cols[2]);
    sign = -sign;
  }
  return d;
}

}  // namespace hquat
