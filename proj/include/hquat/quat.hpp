#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "mat4.hpp"
#include "residue.hpp"

namespace hquat {

enum class ElementClass { Zero, Unit, ZeroDivisor };

inline const char* to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Zero: return "zero";
    case ElementClass::Unit: return "unit";
    case ElementClass::ZeroDivisor: return "zero-divisor";
  }
  return "?";
}

/// Quaternion a1 + a2*i + a3*j + a4*k over Z_{2^n}, components canonical in
/// [0, 2^n). Ordering is lexicographic on the component tuple, which fixes
/// every enumeration and export order in the library.
struct Quat {
  std::array<std::uint32_t, 4> c{};
  std::uint8_t n = 1;

  Quat() = default;

  Quat(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4, Modulus m)
      : c{reduce_mod(a1, m), reduce_mod(a2, m), reduce_mod(a3, m), reduce_mod(a4, m)},
        n(static_cast<std::uint8_t>(m.n)) {}

  Modulus modulus() const { return Modulus(n); }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

  static Quat one(Modulus m) { return Quat(1, 0, 0, 0, m); }
  static Quat minus_one(Modulus m) { return Quat(-1, 0, 0, 0, m); }

  /// Lexicographic rank among all 2^{4n} elements; also the streaming order.
  std::uint64_t code() const {
    std::uint64_t m = std::uint64_t{1} << n;
    return ((std::uint64_t{c[0]} * m + c[1]) * m + c[2]) * m + c[3];
  }

  static Quat from_code(std::uint64_t code, Modulus m) {
    Quat q;
    q.n = static_cast<std::uint8_t>(m.n);
    std::uint64_t mv = m.value();
    q.c[3] = static_cast<std::uint32_t>(code % mv);
    code /= mv;
    q.c[2] = static_cast<std::uint32_t>(code % mv);
    code /= mv;
    q.c[1] = static_cast<std::uint32_t>(code % mv);
    q.c[0] = static_cast<std::uint32_t>(code / mv);
    return q;
  }

  /// Text form used by the CLI and CSV exports: "a1,a2,a3,a4".
  std::string str() const {
    return std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
           std::to_string(c[2]) + "," + std::to_string(c[3]);
  }

  friend auto operator<=>(const Quat& a, const Quat& b) = default;
};

inline void require_same_modulus(const Quat& a, const Quat& b) {
  if (a.n != b.n) throw std::invalid_argument("quaternion modulus mismatch");
}

inline Quat quat_add(const Quat& a, const Quat& b) {
  require_same_modulus(a, b);
  Modulus m = a.modulus();
  return Quat(std::int64_t{a.c[0]} + b.c[0], std::int64_t{a.c[1]} + b.c[1],
              std::int64_t{a.c[2]} + b.c[2], std::int64_t{a.c[3]} + b.c[3], m);
}

/// Hamilton product reduced mod 2^n. Component formulas follow from
/// i^2 = j^2 = k^2 = -1 and ij = -ji = k (cyclically).
inline Quat quat_mul(const Quat& a, const Quat& b) {
  require_same_modulus(a, b);
  Modulus m = a.modulus();
  std::int64_t a1 = a.c[0], a2 = a.c[1], a3 = a.c[2], a4 = a.c[3];
  std::int64_t b1 = b.c[0], b2 = b.c[1], b3 = b.c[2], b4 = b.c[3];
  std::int64_t w = a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4;
  std::int64_t x = a2 * b1 + a1 * b2 - a4 * b3 + a3 * b4;
  std::int64_t y = a3 * b1 + a4 * b2 + a1 * b3 - a2 * b4;
  std::int64_t z = a4 * b1 - a3 * b2 + a2 * b3 + a1 * b4;
  return Quat(w, x, y, z, m);
}

/// Element classification. A quaternion over Z_{2^n} is invertible exactly
/// when an odd number (1 or 3) of its components is odd, i.e. when the sum
/// of squared components is odd; everything else is a zero-divisor.
inline ElementClass classify(const Quat& a) {
  if (a.is_zero()) return ElementClass::Zero;
  int odd = (a.c[0] & 1) + (a.c[1] & 1) + (a.c[2] & 1) + (a.c[3] & 1);
  return (odd & 1) ? ElementClass::Unit : ElementClass::ZeroDivisor;
}

/// Matrix of left multiplication by `a` acting on column (b1,b2,b3,b4),
/// entries as exact signed integers built from the canonical lifts.
inline Mat4 left_mul_matrix(const Quat& a) {
  std::int64_t a1 = a.c[0], a2 = a.c[1], a3 = a.c[2], a4 = a.c[3];
  Mat4 r;
  r.m = {{{a1, -a2, -a3, -a4},
          {a2, a1, -a4, a3},
          {a3, a4, a1, -a2},
          {a4, -a3, a2, a1}}};
  return r;
}

/// Sum of squared canonical lifts (the quaternion norm of the lift).
inline std::uint64_t norm_lift(const Quat& a) {
  std::uint64_t s = 0;
  for (std::uint32_t x : a.c) s += std::uint64_t{x} * x;
  return s;
}

struct ElementCounts {
  std::uint64_t units = 0;
  std::uint64_t zero_divisors = 0;  // includes 0
};

/// Exhaustive classification of all 2^{4n} elements; supported for n <= 4.
inline ElementCounts count_elements(Modulus m) {
  if (m.n > 4) throw std::invalid_argument("count_elements: exhaustive classification capped at n = 4");
  ElementCounts out;
  std::uint64_t total = std::uint64_t{1} << (4 * m.n);
  for (std::uint64_t code = 0; code < total; ++code) {
    // parity of the component-odd count only needs the low bits of the code
    Quat q = Quat::from_code(code, m);
    if (classify(q) == ElementClass::Unit)
      ++out.units;
    else
      ++out.zero_divisors;
  }
  return out;
}

/// Vertices of the graph are all elements except 0, 1 and -1.
inline bool is_vertex(const Quat& a) {
  return !a.is_zero() && a != Quat::one(a.modulus()) && a != Quat::minus_one(a.modulus());
}

}  // namespace hquat
