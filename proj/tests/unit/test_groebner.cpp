#include <doctest.h>

#include <random>

#include "seclab/ideal.hpp"
#include "seclab/poly_io.hpp"
#include "support/oracles.hpp"
#include "support/random_poly.hpp"

using namespace seclab;

namespace {

std::vector<std::string> strings(std::span<const Polynomial> ps) {
  std::vector<std::string> s;
  for (const auto& p : ps) s.push_back(to_string(p));
  return s;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("linear reduction") {
    auto R = make_standard_ring("x", 2);
    auto I = make_ideal(R, {"x_0", "x_0+x_1"});
    CHECK(strings(I.groebner()->polys()) == std::vector<std::string>{"x_1", "x_0"});
  }

  TEST_CASE("twisted cubic quadrics are already a basis") {
    auto R = make_standard_ring("x", 4);
    auto I = make_ideal(R, {"x_0*x_2-x_1^2", "x_0*x_3-x_1*x_2", "x_1*x_3-x_2^2"});
    auto gb = I.groebner();
    CHECK(gb->size() == 3);
    auto ord = gb->order();
    // every S-pair reduces to zero by plain division
    for (std::size_t a = 0; a < I.size(); ++a) {
      for (std::size_t b = a + 1; b < I.size(); ++b) {
        auto s = s_polynomial(I.generators()[a], I.generators()[b], ord);
        CHECK(divide_remainder(s, I.generators(), ord).is_zero());
      }
    }
    // leading monomials x1^2, x1x2, x2^2 under grevlex
    std::vector<std::string> leads;
    for (const auto& m : gb->leading_monomials()) leads.push_back(to_string(Polynomial::monomial(R, m)));
    CHECK(leads == std::vector<std::string>{"x_2^2", "x_1*x_2", "x_1^2"});
  }

  TEST_CASE("monomial plus variable") {
    auto R = make_standard_ring("x", 3);
    auto I = make_ideal(R, {"x_0*x_1", "x_2"});
    CHECK(I == make_ideal(R, {"x_2", "x_0*x_1"}));
    CHECK(I.groebner()->size() == 2);
  }

  TEST_CASE("membership and normal forms") {
    auto R = make_standard_ring("x", 3);
    auto g = parse_polynomial(R, "x_0^2-x_1*x_2+x_2^2");
    Ideal I(R, {g});
    CHECK(normal_form(g, I).is_zero());
    auto one = Polynomial::constant(R, 1);
    CHECK(normal_form(one, I) == one);
    CHECK(make_ideal(R, {"x_0", "x_0+1"}).is_unit());
  }

  TEST_CASE("idempotence and membership soundness on random ideals") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 3 + static_cast<int>(rng() % 2);
      auto R = make_standard_ring("x", n);
      std::vector<Polynomial> gens;
      int ng = 2 + static_cast<int>(rng() % 2);
      // multilinear generators keep lex degrees (Bezout bound) small
      for (int k = 0; k < ng; ++k) gens.push_back(testing::random_polynomial(R, rng, 3, 1));
      for (const auto& ord : {MonomialOrder::grevlex(*R), MonomialOrder::lex(*R)}) {
        auto G = compute_groebner_basis(R, gens, ord);
        for (const auto& g : gens) CHECK(G.reduce(g).is_zero());
        auto G2 = compute_groebner_basis(R, G.polys(), ord);
        CHECK(strings(G2.polys()) == strings(G.polys()));
        // reduced: no lead divides another basis term
        for (std::size_t a = 0; a < G.size(); ++a) {
          for (std::size_t b = 0; b < G.size(); ++b) {
            if (a == b) continue;
            for (const auto& t : G.polys()[b].terms()) CHECK_FALSE(G.leading_monomials()[a].divides(t.m));
          }
          CHECK(G.polys()[a].leading_term(ord).c == 1);
        }
        // all S-pairs reduce to zero
        for (std::size_t a = 0; a < G.size(); ++a) {
          for (std::size_t b = a + 1; b < G.size(); ++b) {
            CHECK(G.reduce(s_polynomial(G.polys()[a], G.polys()[b], ord)).is_zero());
          }
        }
      }
    }
  }

  TEST_CASE("degree limit truncates homogeneous bases exactly") {
    auto R = make_standard_ring("x", 4);
    std::mt19937_64 rng(5);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_form(R, rng, 2, 4));
    auto ord = MonomialOrder::grevlex(*R);
    auto full = compute_groebner_basis(R, gens, ord);
    GroebnerOptions opts;
    opts.degree_limit = 3;
    auto part = compute_groebner_basis(R, gens, ord, opts);
    std::vector<std::string> low;
    for (const auto& g : full.polys()) {
      if (g.total_degree() <= 3) low.push_back(to_string(g));
    }
    CHECK(strings(part.polys()) == low);
  }

  TEST_CASE("budgets raise resource errors") {
    auto R = make_standard_ring("x", 4);
    std::mt19937_64 rng(9);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_form(R, rng, 3, 6));
    GroebnerOptions opts;
    opts.max_basis_size = 3;
    CHECK_THROWS_AS(compute_groebner_basis(R, gens, MonomialOrder::grevlex(*R), opts), ResourceLimitExceeded);
    GroebnerOptions opts2;
    opts2.max_degree = 4;
    CHECK_THROWS_AS(compute_groebner_basis(R, gens, MonomialOrder::grevlex(*R), opts2), ResourceLimitExceeded);
  }

  TEST_CASE("cache returns the same basis") {
    auto R = make_standard_ring("x", 3);
    auto I = make_ideal(R, {"x_0^2-x_1", "x_1^2-x_2"});
    auto a = I.groebner(), b = I.groebner();
    CHECK(a.get() == b.get());
    Ideal copy = I;
    CHECK(copy.groebner().get() == a.get());
  }
}
