#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hquat {

/// Exponent n of the power-of-two modulus 2^n.
///
/// Everything downstream stores canonical residues in [0, 2^n) and does
/// intermediate arithmetic in 64-bit integers, which is exact for every
/// supported exponent.
struct Modulus {
  static constexpr int kMaxExponent = 15;

  int n;

  explicit Modulus(int exponent) : n(exponent) {
    if (n < 1 || n > kMaxExponent) {
      throw std::invalid_argument("modulus exponent must be in [1, " +
                                  std::to_string(kMaxExponent) + "], got " +
                                  std::to_string(exponent));
    }
  }

  std::uint32_t value() const { return std::uint32_t{1} << n; }
  std::uint32_t mask() const { return value() - 1u; }

  bool operator==(const Modulus&) const = default;
};

/// x mod 2^n for any signed 64-bit x. Two's-complement wraparound makes the
/// bitmask canonical for negative inputs as well.
inline std::uint32_t reduce_mod(std::int64_t x, Modulus m) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) & m.mask());
}

/// Canonical residue in [0, 2^n) carrying its modulus exponent.
/// Units of Z_{2^n} are exactly the odd residues.
class Residue {
 public:
  Residue(std::int64_t raw, Modulus m) : v_(reduce_mod(raw, m)), n_(m.n) {}

  std::uint32_t value() const { return v_; }
  Modulus modulus() const { return Modulus(n_); }

  bool is_unit() const { return (v_ & 1u) != 0; }
  bool is_zero_divisor() const { return (v_ & 1u) == 0; }  // includes 0

  bool operator==(const Residue&) const = default;

 private:
  std::uint32_t v_;
  int n_;
};

/// 2-adic valuation of x, capped at `cap`; by convention nu2(0) = cap.
/// The cap matches the modulus exponent at every use site, which keeps the
/// adjacency criterion k + l + nu < n total without infinities.
inline int nu2_capped(std::int64_t x, int cap) {
  if (x == 0) return cap;
  std::uint64_t ax = static_cast<std::uint64_t>(x < 0 ? -x : x);
  int v = std::countr_zero(ax);
  return v < cap ? v : cap;
}

inline int nu2(Residue x) { return nu2_capped(x.value(), x.modulus().n); }

}  // namespace hquat
