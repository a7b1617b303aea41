#include <catch2/catch_amalgamated.hpp>

#include "hquat/quat.hpp"
#include "hquat/residue.hpp"
#include "hquat/rng.hpp"

using namespace hquat;

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Modulus(0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(16), std::invalid_argument);
  CHECK(Modulus(3).value() == 8);
  CHECK(Modulus(3).mask() == 7);
}

TEST_CASE("residue canonicalization and unit test") {
  Modulus m(3);
  CHECK(Residue(9, m).value() == 1);
  CHECK(Residue(-1, m).value() == 7);
  CHECK(Residue(5, m).is_unit());
  CHECK(Residue(6, m).is_zero_divisor());
  CHECK(Residue(0, m).is_zero_divisor());
}

TEST_CASE("two-adic valuation with cap") {
  CHECK(nu2(Residue(8, Modulus(4))) == 3);
  CHECK(nu2(Residue(0, Modulus(3))) == 3);  // capping convention
  CHECK(nu2(Residue(12, Modulus(4))) == 2);
  CHECK(nu2_capped(-4, 8) == 2);
  CHECK(nu2_capped(0, 5) == 5);
}

TEST_CASE("quaternion code round trip is lexicographic") {
  Modulus m(2);
  std::uint64_t prev = 0;
  Quat prev_q;
  for (std::uint64_t code = 0; code < 256; ++code) {
    Quat q = Quat::from_code(code, m);
    CHECK(q.code() == code);
    if (code > 0) CHECK(prev_q < q);
    prev = code;
    prev_q = q;
  }
  (void)prev;
}

TEST_CASE("product follows the defining relations") {
  for (int n = 1; n <= 4; ++n) {
    Modulus m(n);
    Quat i(0, 1, 0, 0, m), j(0, 0, 1, 0, m), k(0, 0, 0, 1, m);
    CHECK(quat_mul(i, j) == k);
    CHECK(quat_mul(j, i) == Quat(0, 0, 0, -1, m));
    CHECK(quat_mul(j, k) == i);
    CHECK(quat_mul(k, i) == j);
    CHECK(quat_mul(i, i) == Quat(-1, 0, 0, 0, m));
    Quat b(3, 1, 2, 1, m);
    CHECK(quat_mul(Quat::one(m), b) == b);
    CHECK(quat_mul(b, Quat::one(m)) == b);
  }
  // (1,1,1,1)^2 = 0 only mod 2
  Quat d1(1, 1, 1, 1, Modulus(1));
  CHECK(quat_mul(d1, d1).is_zero());
  Quat d2(1, 1, 1, 1, Modulus(2));
  CHECK(quat_mul(d2, d2) == Quat(-2, 2, 2, 2, Modulus(2)));
  CHECK_THROWS_AS(quat_mul(d1, Quat(1, 1, 1, 1, Modulus(2))), std::invalid_argument);
}

TEST_CASE("classification matches the component parity rule") {
  Modulus m1(1);
  CHECK(classify(Quat(1, 1, 0, 0, m1)) == ElementClass::ZeroDivisor);
  CHECK(classify(Quat(0, 1, 1, 1, m1)) == ElementClass::Unit);
  CHECK(classify(Quat(0, 0, 0, 0, m1)) == ElementClass::Zero);
  CHECK(classify(Quat(1, 1, 1, 1, m1)) == ElementClass::ZeroDivisor);
  Modulus m3(3);
  CHECK(classify(Quat(2, 4, 6, 1, m3)) == ElementClass::Unit);
  CHECK(classify(Quat(1, 3, 5, 0, m3)) == ElementClass::Unit);  // three odd components
  CHECK(classify(Quat(1, 3, 0, 0, m3)) == ElementClass::ZeroDivisor);
}

TEST_CASE("classification agrees with brute-force invertibility") {
  for (int n = 1; n <= 2; ++n) {
    Modulus m(n);
    std::uint64_t total = std::uint64_t{1} << (4 * n);
    Quat one = Quat::one(m);
    for (std::uint64_t ca = 0; ca < total; ++ca) {
      Quat a = Quat::from_code(ca, m);
      bool invertible = false;
      for (std::uint64_t cb = 0; cb < total && !invertible; ++cb) {
        Quat b = Quat::from_code(cb, m);
        invertible = quat_mul(a, b) == one && quat_mul(b, a) == one;
      }
      REQUIRE((classify(a) == ElementClass::Unit) == invertible);
    }
  }
}

TEST_CASE("left multiplication matrix") {
  Modulus m(2);
  CHECK(left_mul_matrix(Quat::one(m)) == Mat4::identity());
  CHECK(left_mul_matrix(Quat(0, 0, 0, 0, m)) == Mat4{});
  Mat4 got = left_mul_matrix(Quat(1, 1, 1, 1, m));
  Mat4 want;
  want.m = {{{1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}}};
  CHECK(got == want);
}

TEST_CASE("matrix action equals the ring product, exhaustively for small n") {
  for (int n = 1; n <= 2; ++n) {
    Modulus m(n);
    std::uint64_t total = std::uint64_t{1} << (4 * n);
    for (std::uint64_t ca = 0; ca < total; ++ca) {
      Quat a = Quat::from_code(ca, m);
      Mat4 mat = left_mul_matrix(a);
      for (std::uint64_t cb = 0; cb < total; ++cb) {
        Quat b = Quat::from_code(cb, m);
        auto y = mat_apply(mat, {b.c[0], b.c[1], b.c[2], b.c[3]});
        REQUIRE(Quat(y[0], y[1], y[2], y[3], m) == quat_mul(a, b));
      }
    }
  }
}

TEST_CASE("element counts split evenly between units and zero-divisors") {
  CHECK(count_elements(Modulus(1)).units == 8);
  CHECK(count_elements(Modulus(1)).zero_divisors == 8);
  CHECK(count_elements(Modulus(2)).units == 128);
  CHECK(count_elements(Modulus(2)).zero_divisors == 128);
  CHECK(count_elements(Modulus(3)).units == 2048);
  CHECK(count_elements(Modulus(3)).zero_divisors == 2048);
  CHECK_THROWS_AS(count_elements(Modulus(5)), std::invalid_argument);
}

TEST_CASE("ring axioms, exhaustive at n <= 2") {
  for (int n = 1; n <= 2; ++n) {
    Modulus m(n);
    std::uint64_t total = std::uint64_t{1} << (4 * n);
    Quat one = Quat::one(m);
    std::uint64_t bad = 0;
    for (std::uint64_t ca = 0; ca < total; ++ca) {
      Quat a = Quat::from_code(ca, m);
      if (quat_mul(a, one) != a || quat_mul(one, a) != a) ++bad;
      for (std::uint64_t cb = 0; cb < total; ++cb) {
        Quat b = Quat::from_code(cb, m);
        Quat ab = quat_mul(a, b);
        for (std::uint64_t cc = 0; cc < total; ++cc) {
          Quat c = Quat::from_code(cc, m);
          if (quat_mul(ab, c) != quat_mul(a, quat_mul(b, c))) ++bad;
          if (quat_mul(a, quat_add(b, c)) != quat_add(ab, quat_mul(a, c))) ++bad;
        }
      }
    }
    REQUIRE(bad == 0);
  }
}

TEST_CASE("ring axioms, sampled at n = 3 and 4") {
  for (int n : {3, 4}) {
    Modulus m(n);
    Rng rng(17);
    auto rand_q = [&] { return Quat::from_code(rng.below(std::uint64_t{1} << (4 * n)), m); };
    for (int t = 0; t < 20000; ++t) {
      Quat a = rand_q(), b = rand_q(), c = rand_q();
      REQUIRE(quat_mul(quat_mul(a, b), c) == quat_mul(a, quat_mul(b, c)));
      REQUIRE(quat_mul(a, quat_add(b, c)) == quat_add(quat_mul(a, b), quat_mul(a, c)));
      REQUIRE(quat_mul(quat_add(a, b), c) == quat_add(quat_mul(a, c), quat_mul(b, c)));
    }
  }
}

TEST_CASE("determinant of the multiplication matrix is the squared norm") {
  for (int n : {1, 2, 3, 4}) {
    Modulus m(n);
    Rng rng(42 + static_cast<std::uint64_t>(n));
    for (int t = 0; t < 250; ++t) {
      Quat a = Quat::from_code(rng.below(std::uint64_t{1} << (4 * n)), m);
      Int128 d = det(left_mul_matrix(a));
      Int128 norm = static_cast<Int128>(norm_lift(a));
      REQUIRE(d == norm * norm);
    }
  }
}
