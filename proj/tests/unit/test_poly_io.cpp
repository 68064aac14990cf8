#include <doctest.h>

#include <random>

#include "seclab/poly_io.hpp"
#include "support/random_poly.hpp"

using namespace seclab;

TEST_SUITE("poly_io") {
  TEST_CASE("canonical printing") {
    auto R = make_standard_ring("x", 4);
    CHECK(to_string(parse_polynomial(R, "x_0*x_2 - x_1^2")) == "-x_1^2+x_0*x_2");
    CHECK(to_string(parse_polynomial(R, "-x_1^2 + x_2*x_0")) == "-x_1^2+x_0*x_2");
    CHECK(to_string(parse_polynomial(R, "3x_0 + 2")) == "3*x_0+2");
    CHECK(to_string(parse_polynomial(R, "(x_0-x_1)^2")) == "x_0^2-2*x_0*x_1+x_1^2");
    CHECK(to_string(parse_polynomial(R, "32002*x_3")) == "-x_3");
    CHECK(to_string(parse_polynomial(R, "x_0-x_0")) == "0");
    CHECK(to_string(parse_polynomial(R, "-1")) == "-1");
  }

  TEST_CASE("braced and bare names") {
    auto R = make_ring({{"y1", {"y_{1,0}", "y_{1,1}"}, {1}}, {"t", {"t"}, {1}}});
    auto f = parse_polynomial(R, "y_{1,0}*y_{1,1}-t^2");
    CHECK(to_string(f) == "y_{1,0}*y_{1,1}-t^2");
  }

  TEST_CASE("parse errors") {
    auto R = make_standard_ring("x", 2);
    CHECK_THROWS_AS(parse_polynomial(R, "x_0+"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "x_5"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "(x_0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, ""), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "x_0^"), ParseError);
  }

  TEST_CASE("round trip on random polynomials") {
    auto R = make_ring({{"x", {"x_0", "x_1", "x_2"}, {1, 0}}, {"y", {"y_0", "y_1"}, {0, 1}}});
    std::mt19937_64 rng(31);
    for (int k = 0; k < 200; ++k) {
      auto f = testing::random_polynomial(R, rng, 7, 4);
      CHECK(parse_polynomial(R, to_string(f)) == f);
      CHECK(polynomial_from_json(R, polynomial_to_json(f)) == f);
    }
  }

  TEST_CASE("ideal text and JSON formats") {
    auto R = make_ring({{"x", {"x_0", "x_1", "x_2"}, {1, 0}}, {"y", {"y_0", "y_1"}, {0, 1}}}, 101);
    std::vector<Polynomial> gens{parse_polynomial(R, "x_0*y_1-x_1*y_0"), parse_polynomial(R, "x_2^2")};
    auto text = write_ideal_text(R, gens);
    CHECK(text ==
          "ring prime=101\n"
          "block x weights=1,0 vars=x_0,x_1,x_2\n"
          "block y weights=0,1 vars=y_0,y_1\n"
          "generators 2\n"
          "-x_1*y_0+x_0*y_1\n"
          "x_2^2\n");
    auto back = read_ideal_text("# comment\n" + text);
    CHECK(*back.ring == *R);
    REQUIRE(back.polys.size() == 2);
    CHECK(to_string(back.polys[0]) == to_string(gens[0]));
    auto j = ideal_to_json(R, gens);
    auto back2 = ideal_from_json(nlohmann::json::parse(j.dump()));
    CHECK(*back2.ring == *R);
    CHECK(to_string(back2.polys[1]) == "x_2^2");
    CHECK_THROWS_AS(read_ideal_text("ring prime=101\nblock x weights=1 vars=a\ngenerators 2\na\n"), ParseError);
    CHECK_THROWS_AS(read_ideal_text("block x vars=a\n"), ParseError);
  }
}
