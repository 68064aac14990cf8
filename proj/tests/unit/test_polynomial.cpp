#include <doctest.h>

#include <random>

#include "seclab/poly_io.hpp"
#include "support/random_poly.hpp"

using namespace seclab;

TEST_SUITE("polynomial") {
  TEST_CASE("power rule examples") {
    auto R = make_standard_ring("x", 4);
    auto q = parse_polynomial(R, "x_0*x_2-x_1^2");
    CHECK(differentiate(q, 0) == parse_polynomial(R, "x_2"));
    CHECK(differentiate(q, 1) == parse_polynomial(R, "-2*x_1"));
    CHECK(differentiate(parse_polynomial(R, "x_1*x_3-x_2^2"), 0).is_zero());
  }

  TEST_CASE("derivative vanishes on p-th powers") {
    auto R = make_standard_ring("x", 2, 7);
    CHECK(differentiate(parse_polynomial(R, "x_0^7"), 0).is_zero());
    CHECK(differentiate(parse_polynomial(R, "x_0^8"), 0) == parse_polynomial(R, "x_0^7"));
  }

  TEST_CASE("integration examples") {
    auto R = make_standard_ring("x", 3);
    CHECK(integrate(Polynomial::constant(R, 1), 0) == parse_polynomial(R, "x_0"));
    CHECK(integrate(parse_polynomial(R, "x_0"), 0) == parse_polynomial(R, "16002*x_0^2"));
    CHECK(integrate(parse_polynomial(R, "x_0*x_2-x_1^2"), 0) == parse_polynomial(R, "16002*x_0^2*x_2-x_0*x_1^2"));
  }

  TEST_CASE("integration hits the characteristic") {
    auto R = make_standard_ring("x", 2, 5);
    CHECK_THROWS_AS(integrate(parse_polynomial(R, "x_0^4+x_1"), 0), CharacteristicObstruction);
    CHECK_NOTHROW(integrate(parse_polynomial(R, "x_0^3+x_1"), 0));
  }

  TEST_CASE("derivative of the integral is the identity") {
    auto R = make_ring({{"x", {"x_0", "x_1", "x_2"}, {1}}, {"y", {"y_0", "y_1"}, {2}}});
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
      auto f = testing::random_polynomial(R, rng, 6, 5);
      for (int i = 0; i < R->nvars(); ++i) CHECK(differentiate(integrate(f, i), i) == f);
    }
  }

  TEST_CASE("arithmetic identities") {
    auto R = make_standard_ring("x", 3);
    std::mt19937_64 rng(23);
    for (int k = 0; k < 100; ++k) {
      auto f = testing::random_polynomial(R, rng, 5, 3), g = testing::random_polynomial(R, rng, 5, 3),
           h = testing::random_polynomial(R, rng, 4, 2);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK(f + g == g + f);
      CHECK((f * g) * h == f * (g * h));
      // Leibniz rule
      CHECK(differentiate(f * g, 1) == differentiate(f, 1) * g + f * differentiate(g, 1));
      std::vector<std::uint32_t> pt{static_cast<std::uint32_t>(rng() % 32003), static_cast<std::uint32_t>(rng() % 32003),
                                    static_cast<std::uint32_t>(rng() % 32003)};
      CHECK((f * g).evaluate(pt) == R->field().mul(f.evaluate(pt), g.evaluate(pt)));
    }
  }

  TEST_CASE("homogeneity is verified") {
    auto R = make_ring({{"x", {"x_0", "x_1"}, {1, 0}}, {"y", {"y_0", "y_1"}, {0, 1}}});
    auto f = parse_polynomial(R, "x_0*y_1-x_1*y_0");
    CHECK(f.is_homogeneous());
    CHECK(f.multidegree() == std::vector<int>{1, 1});
    auto g = parse_polynomial(R, "x_0^2-x_1*y_0");
    CHECK_FALSE(g.is_homogeneous());
    CHECK(g.is_weighted_homogeneous());
    CHECK_THROWS_AS(g.multidegree(), InvalidArgument);
    auto a = parse_polynomial(R, "x_0^2*y_0+x_0*x_1*y_1"), b = parse_polynomial(R, "x_1*y_1^2");
    auto da = a.multidegree(), db = b.multidegree(), dab = (a * b).multidegree();
    CHECK(dab == std::vector<int>{da[0] + db[0], da[1] + db[1]});
  }

  TEST_CASE("substitution and renaming") {
    auto S = make_standard_ring("s", 2);
    auto R = make_standard_ring("x", 4);
    std::vector<Polynomial> img{parse_polynomial(S, "s_0^3"), parse_polynomial(S, "s_0^2*s_1"),
                                parse_polynomial(S, "s_0*s_1^2"), parse_polynomial(S, "s_1^3")};
    for (const char* q : {"x_0*x_2-x_1^2", "x_0*x_3-x_1*x_2", "x_1*x_3-x_2^2"}) {
      CHECK(parse_polynomial(R, q).substitute(img).is_zero());
    }
    CHECK_FALSE(parse_polynomial(R, "x_0*x_3-x_1^2").substitute(img).is_zero());
    auto T = make_standard_ring("x", 5);
    CHECK(to_string(transfer(parse_polynomial(R, "x_3^2-x_0"), T)) == "x_3^2-x_0");
    CHECK_THROWS_AS(transfer(parse_polynomial(T, "x_4"), R), InvalidArgument);
    CHECK(parse_polynomial(R, "x_0^2*x_1+x_1*x_3").specialize(1, 1) == parse_polynomial(R, "x_0^2+x_3"));
  }

  TEST_CASE("ring mismatch") {
    auto R = make_standard_ring("x", 2), S = make_standard_ring("y", 2);
    CHECK_THROWS_AS(Polynomial::variable(R, 0) + Polynomial::variable(S, 0), RingMismatch);
  }
}
