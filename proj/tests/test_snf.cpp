#include <catch2/catch_amalgamated.hpp>

#include "hquat/families.hpp"
#include "hquat/rng.hpp"
#include "hquat/snf.hpp"

using namespace hquat;

TEST_CASE("fixed smith normal forms") {
  SECTION("identity") {
    SnfDecomposition d = smith_normal_form(Mat4::identity());
    CHECK(d.diag.d == std::array<BigInt, 4>{1, 1, 1, 1});
    CHECK(snf_certificate(Mat4::identity(), d));
  }
  SECTION("zero matrix") {
    SnfDecomposition d = smith_normal_form(Mat4{});
    CHECK(d.diag.d == std::array<BigInt, 4>{0, 0, 0, 0});
    CHECK(snf_certificate(Mat4{}, d));
  }
  SECTION("all-ones multiplication matrix") {
    Mat4 m = left_mul_matrix(Quat(1, 1, 1, 1, Modulus(3)));
    SnfDecomposition d = smith_normal_form(m);
    CHECK(d.diag.d == std::array<BigInt, 4>{1, 2, 2, 4});
    CHECK(snf_certificate(m, d));
  }
  SECTION("rank-deficient") {
    Mat4 m;
    m.m = {{{2, 4, 6, 8}, {1, 2, 3, 4}, {0, 0, 0, 0}, {3, 6, 9, 12}}};
    SnfDecomposition d = smith_normal_form(m);
    CHECK(d.diag.d == std::array<BigInt, 4>{1, 0, 0, 0});
    CHECK(snf_certificate(m, d));
  }
}

TEST_CASE("smith normal form on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = rng.range(-256, 256);
    SnfDecomposition d = smith_normal_form(m);
    REQUIRE(snf_certificate(m, d));
    BigInt dm = boost::multiprecision::abs(wide_det(WideMat4::from(m)));
    REQUIRE(diag_product(d.diag) == dm);
  }
}

TEST_CASE("annihilator counts") {
  SECTION("units annihilate nothing") {
    for (int n : {1, 2, 3}) {
      Modulus m(n);
      CHECK(annihilator_count(Quat(0, 1, 0, 0, m)) == 1);
      CHECK(annihilator_count(Quat(1, 1, 1, 0, m)) == 1);
    }
  }
  SECTION("worked values") {
    CHECK(annihilator_count(Quat(1, 1, 1, 1, Modulus(2))) == 16);
    CHECK(annihilator_count(Quat(0, 0, 0, 0, Modulus(2))) == 256);
    for (int n : {1, 2, 3, 4}) {
      Modulus m(n);
      std::uint32_t h = 1u << (n - 1);
      CHECK(annihilator_count(Quat(h, h, h, h, m)) == std::uint64_t{1} << (4 * n - 1));
    }
  }
  SECTION("matches the exhaustive kernel, all elements at n <= 2") {
    for (int n : {1, 2}) {
      Modulus m(n);
      std::uint64_t total = std::uint64_t{1} << (4 * n);
      for (std::uint64_t code = 0; code < total; ++code) {
        Quat a = Quat::from_code(code, m);
        REQUIRE(annihilator_count(a) == kernel_count_brute(a));
      }
    }
  }
  SECTION("matches the exhaustive kernel, sampled at n = 3, 4") {
    for (int n : {3, 4}) {
      Modulus m(n);
      Rng rng(1234);
      for (int t = 0; t < 200; ++t) {
        Quat a = Quat::from_code(rng.below(std::uint64_t{1} << (4 * n)), m);
        REQUIRE(annihilator_count(a) == kernel_count_brute(a));
      }
    }
  }
}

TEST_CASE("kernel count is invariant under lifts shifted by the modulus") {
  for (int n : {2, 3, 4}) {
    Modulus m(n);
    Rng rng(99 + static_cast<std::uint64_t>(n));
    for (int t = 0; t < 100; ++t) {
      Quat a = Quat::from_code(rng.below(std::uint64_t{1} << (4 * n)), m);
      Mat4 mat = left_mul_matrix(a);
      std::uint64_t base = congruence_kernel_count(mat, m);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mat(i, j) += static_cast<std::int64_t>(m.value()) * rng.range(-4, 4);
      REQUIRE(congruence_kernel_count(mat, m) == base);
    }
  }
}

TEST_CASE("degree formula") {
  SECTION("rejects non-vertices") {
    Modulus m(2);
    CHECK_THROWS_AS(degree_formula(Quat(0, 0, 0, 0, m)), std::invalid_argument);
    CHECK_THROWS_AS(degree_formula(Quat(1, 0, 0, 0, m)), std::invalid_argument);
    CHECK_THROWS_AS(degree_formula(Quat(3, 0, 0, 0, m)), std::invalid_argument);
  }
  SECTION("witness values") {
    CHECK(degree_formula(Quat(1, 1, 1, 1, Modulus(1))) == 7);
    CHECK(degree_formula(Quat(1, 1, 1, 1, Modulus(2))) == 237);
    CHECK(degree_formula(Quat(1, 1, 1, 1, Modulus(3))) == 4077);
    CHECK(degree_formula(Quat(0, 1, 1, 1, Modulus(2))) == 252);  // unit vertex hits the maximum
    CHECK(degree_formula(Quat(2, 2, 2, 2, Modulus(2))) == 126);  // adjacent only to units
  }
  SECTION("equals the brute-force left sweep for every vertex, n <= 2") {
    for (int n : {1, 2}) {
      Modulus m(n);
      std::vector<Quat> verts = enumerate_vertices(m);
      for (const Quat& a : verts) {
        std::uint64_t sweep = 0;
        for (const Quat& b : verts)
          if (b != a && !quat_mul(a, b).is_zero()) ++sweep;
        REQUIRE(degree_formula(a) == sweep);
      }
    }
  }
  SECTION("equals the brute-force left sweep, sampled at n = 3") {
    Modulus m(3);
    std::vector<Quat> verts = enumerate_vertices(m);
    Rng rng(5);
    for (int t = 0; t < 64; ++t) {
      const Quat& a = verts[rng.below(verts.size())];
      std::uint64_t sweep = 0;
      for (const Quat& b : verts)
        if (b != a && !quat_mul(a, b).is_zero()) ++sweep;
      REQUIRE(degree_formula(a) == sweep);
    }
  }
}
