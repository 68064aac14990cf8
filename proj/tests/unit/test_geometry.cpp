#include <doctest.h>

#include "seclab/errors.hpp"
#include "seclab/geometry.hpp"
#include "seclab/poly_io.hpp"
#include "seclab/secant.hpp"

using namespace seclab;

namespace {

std::vector<Polynomial> vars(const Ring& R) {
  std::vector<Polynomial> v;
  for (int i = 0; i < R->nvars(); ++i) v.push_back(Polynomial::variable(R, i));
  return v;
}

std::vector<std::string> strings(std::span<const Polynomial> fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("Hankel minors in colex order") {
    auto R = make_standard_ring("x", 4);
    auto v = vars(R);
    auto M = hankel_matrix(2, 3, v);
    CHECK(to_string(M[1][2]) == "x_3");
    auto q = minors(2, M);
    CHECK(strings(q) == std::vector<std::string>{"-x_1^2+x_0*x_2", "-x_1*x_2+x_0*x_3", "-x_2^2+x_1*x_3"});
    CHECK_THROWS_AS(minors(3, M), InvalidArgument);
    CHECK_THROWS_AS(hankel_matrix(3, 3, v), InvalidArgument);
  }

  TEST_CASE("repeated minors are dropped") {
    auto R = make_standard_ring("x", 2);
    auto v = vars(R);
    PolyMatrix M{{v[0], v[0], v[1]}, {v[1], v[1], v[0]}};
    CHECK(minors(2, M).size() == 1);
  }

  TEST_CASE("point ideals") {
    auto R = make_standard_ring("x", 3);
    auto I = point_ideal(R, {1, 2, 0});
    CHECK(I == make_ideal(R, {"x_2", "2*x_0-x_1"}));
    CHECK_THROWS_AS(point_ideal(R, {0, 0, 0}), InvalidArgument);
    // a prefix of the variables: the point lives in the first coordinates
    CHECK(point_ideal(R, {0, 1}) == make_ideal(R, {"x_0"}));
    CHECK_THROWS_AS(point_ideal(R, {1, 0, 0, 0}), InvalidArgument);
  }

  TEST_CASE("recipes") {
    CHECK(recipe_by_name("twisted-cubic").name() == "rnc3");
    CHECK(recipe_by_name("g2d9").genus() == 2);
    CHECK(recipe_by_name("g2d12").degree() == 12);
    CHECK(recipe_by_name("ver-g3d12").genus() == 3);
    CHECK_THROWS_AS(recipe_by_name("rnc"), InvalidArgument);
    CHECK_THROWS_AS(recipe_by_name("elliptic"), InvalidArgument);
    CHECK(recipe_names().size() == 7);
  }

  TEST_CASE("curve ideals: quadric counts") {
    auto twisted = curve_ideal(recipe_by_name("twisted-cubic"));
    CHECK(twisted.generators().size() == 3);
    CHECK(hilbert_values(twisted, 4) == std::vector<std::int64_t>{1, 4, 7, 10, 13});
    CHECK(curve_ideal(recipe_by_name("rnc", 1)).is_zero());

    auto g2d9 = curve_ideal(recipe_by_name("g2d9"));
    CHECK(g2d9.ring()->nvars() == 8);
    CHECK(g2d9.generators().size() == 19);
    // h(d) = 9d - 1 for d >= 1 on a genus 2 curve of degree 9
    CHECK(hilbert_values(g2d9, 4) == std::vector<std::int64_t>{1, 8, 17, 26, 35});

    auto g2d12 = curve_ideal(recipe_by_name("g2d12"));
    CHECK(g2d12.ring()->nvars() == 11);
    CHECK(g2d12.generators().size() == 43);

    auto ver = curve_ideal(recipe_by_name("ver-g3d12"));
    CHECK(ver.ring()->nvars() == 10);
    CHECK(ver.generators().size() == 33);
    for (const auto& f : ver.generators()) CHECK(f.total_degree() == 2);
  }

  TEST_CASE("points") {
    auto P = curve_ideal(recipe_by_name("points5"));
    CHECK(hilbert_values(P, 3) == std::vector<std::int64_t>{1, 4, 5, 5});
    CurveRecipe bad = recipe_by_name("points2");
    bad.points.push_back({1, 0, 0});  // repeated point: degree drops
    CHECK_THROWS_AS(curve_ideal(bad), DegenerateInput);
  }

  TEST_CASE("blowup of P^3 along the twisted cubic") {
    auto I = curve_ideal(recipe_by_name("twisted-cubic"));
    auto B = blowup_ideal(I, I.generators());
    CHECK(B.x_vars() == 4);
    CHECK(B.ideal.generators().size() == 2);
    // every relation vanishes on the graph (x, q(x))
    std::vector<Polynomial> sub = vars(I.ring());
    for (const auto& q : I.generators()) sub.push_back(q);
    for (const auto& f : B.ideal.generators()) CHECK(f.substitute(sub).is_zero());

    auto F0 = fiber_over_point(B, {0, 0, 0, 1}, std::nullopt);
    CHECK(F0 == make_ideal(B.ideal.ring(), {"x_0", "x_1", "x_2", "x_3*y_0"}));
    auto F = fiber_over_point(B, {0, 0, 0, 1}, 3);
    CHECK(F.ring()->nvars() == 6);
    CHECK(F == make_ideal(F.ring(), {"x_0", "x_1", "x_2", "y_0"}));
  }

  TEST_CASE("blowup along the rational normal quartic") {
    auto I = curve_ideal(recipe_by_name("rnc", 4));
    auto B = blowup_ideal(I, I.generators());
    CHECK(B.ideal.generators().size() == 9);
    int pure_y = 0;
    std::vector<Polynomial> sub = vars(I.ring());
    for (const auto& q : I.generators()) sub.push_back(q);
    for (const auto& f : B.ideal.generators()) {
      CHECK(f.substitute(sub).is_zero());
      bool has_x = false;
      for (const auto& t : f.terms()) has_x = has_x || (t.m.support() & 0x1f);
      pure_y += !has_x;
    }
    CHECK(pure_y == 1);
    CHECK(B.ideal.contains(parse_polynomial(B.ideal.ring(), "y_2*y_3-y_1*y_4+y_0*y_5")));

    auto F = fiber_over_point(B, {1, 0, 0, 0, 0}, 0);
    CHECK(F == make_ideal(F.ring(), {"y_5", "y_4", "y_2", "x_4", "x_3", "x_2", "x_1"}));

    auto Sigma = secant_ideal_elimination(I, 1);
    auto T = restrict_secant_to_fiber(B, Sigma.generators(), {1, 0, 0, 0, 0}, 0);
    CHECK(T.contains(F));
    CHECK(T.contains(parse_polynomial(T.ring(), "y_1^2-y_0*y_3")));
    CHECK_FALSE(F.contains(T));
  }

  TEST_CASE("secant fiber equals the tangent projection") {
    auto X = curve_ideal(recipe_by_name("rnc", 4));
    auto Sigma = secant_ideal_elimination(X, 1);
    auto S = Sigma.generators();
    auto check = secant_fiber_projection_check(X, S, {1, 0, 0, 0, 0}, 0);
    CHECK(check.hilbert_match);
    CHECK(check.fiber_in_projection);
    CHECK(check.projection_in_fiber);
    CHECK(check.ok());
    CHECK(check.hilbert_fiber == check.hilbert_projection);

    // a point off the curve is rejected
    CHECK_THROWS_AS(secant_fiber_projection_check(X, S, {1, 1, 0, 0, 0}, 0), InvalidArgument);
  }

  TEST_CASE("blowup input validation") {
    auto I = curve_ideal(recipe_by_name("twisted-cubic"));
    CHECK_THROWS_AS(blowup_ideal(I, {}), InvalidArgument);
    auto cubic = parse_polynomial(I.ring(), "x_0^3");
    CHECK_THROWS_AS(blowup_ideal(I, std::span<const Polynomial>(&cubic, 1)), InvalidArgument);
  }
}
