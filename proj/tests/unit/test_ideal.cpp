#include <doctest.h>

#include <random>

#include "seclab/ideal.hpp"
#include "seclab/poly_io.hpp"
#include "support/oracles.hpp"
#include "support/random_poly.hpp"

using namespace seclab;

TEST_SUITE("ideal") {
  TEST_CASE("eliminate by substitution") {
    auto R = make_ring({{"x", {"x"}, {1}}, {"yz", {"y", "z"}, {1}}});
    auto I = make_ideal(R, {"x-y", "x-z"});
    auto E = eliminate(I, std::vector<std::string>{"x"});
    CHECK(E.ring()->nvars() == 2);
    CHECK(E == make_ideal(E.ring(), {"y-z"}));
  }

  TEST_CASE("elimination agrees with brute force up to degree 4") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
      auto R = make_ring({{"a", {"a_0", "a_1"}, {1}}, {"b", {"b_0", "b_1"}, {1}}});
      std::vector<Polynomial> gens;
      int ng = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < ng; ++k) gens.push_back(testing::random_form(R, rng, 2, 3));
      Ideal I(R, gens);
      auto E = eliminate(I, std::vector<std::string>{"a"});
      for (int d = 0; d <= 4; ++d) {
        FormSpace direct = testing::multiples_piece(R, gens, d).intersect(testing::monomial_subspace_free_of(R, d, 0b0011));
        std::vector<Polynomial> lifted;
        for (const auto& f : truncate_ideal(d, E)) lifted.push_back(transfer(f, R));
        CHECK(FormSpace::span(R, d, lifted) == direct);
      }
    }
  }

  TEST_CASE("intersection of coprime principal ideals") {
    auto R = make_standard_ring("x", 2);
    Ideal ideals[] = {make_ideal(R, {"x_0"}), make_ideal(R, {"x_1"})};
    CHECK(intersect_ideals(ideals) == make_ideal(R, {"x_0*x_1"}));
    CHECK(intersect_ideals(ideals, 4) == make_ideal(R, {"x_0*x_1"}));
    CHECK_THROWS_AS(intersect_ideals(std::span<const Ideal>()), InvalidArgument);
  }

  TEST_CASE("intersection properties on random ideals") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
      auto R = make_standard_ring("x", 3);
      Ideal A(R, {testing::random_form(R, rng, 1, 2), testing::random_form(R, rng, 2, 3)});
      Ideal B(R, {testing::random_form(R, rng, 2, 3)});
      Ideal AB[] = {A, B};
      Ideal C = intersect_ideals(AB);
      CHECK(A.contains(C));
      CHECK(B.contains(C));
      CHECK(C.contains(A * B));
      // graded route agrees in every degree up to the limit
      Ideal D = intersect_ideals(AB, 5);
      for (int d = 0; d <= 5; ++d) CHECK(graded_piece(C, d) == graded_piece(D, d));
      Ideal AA[] = {A, A};
      CHECK(intersect_ideals(AA) == A);
    }
  }

  TEST_CASE("twisted cubic as a kernel") {
    auto S = make_standard_ring("s", 2);
    auto R = make_standard_ring("x", 4);
    std::vector<Polynomial> t{parse_polynomial(S, "s_0^3"), parse_polynomial(S, "s_0^2*s_1"),
                              parse_polynomial(S, "s_0*s_1^2"), parse_polynomial(S, "s_1^3")};
    auto K = kernel_of_ring_map(t, R);
    auto expected = make_ideal(R, {"x_0*x_2-x_1^2", "x_0*x_3-x_1*x_2", "x_1*x_3-x_2^2"});
    CHECK(K == expected);
    for (const auto& g : K.generators()) CHECK(g.substitute(t).is_zero());
    std::vector<std::string> leads;
    for (const auto& m : K.groebner()->leading_monomials()) leads.push_back(to_string(Polynomial::monomial(R, m)));
    CHECK(leads == std::vector<std::string>{"x_2^2", "x_1*x_2", "x_1^2"});
  }

  TEST_CASE("identity map has zero kernel") {
    auto S = make_standard_ring("s", 3);
    auto R = make_standard_ring("x", 3);
    std::vector<Polynomial> t;
    for (int i = 0; i < 3; ++i) t.push_back(Polynomial::variable(S, i));
    CHECK(kernel_of_ring_map(t, R).is_zero());
  }

  TEST_CASE("truncation") {
    auto R = make_standard_ring("x", 2);
    auto I = make_ideal(R, {"x_0"});
    auto t = truncate_ideal(2, I);
    std::vector<std::string> s;
    for (const auto& f : t) s.push_back(to_string(f));
    CHECK(s == std::vector<std::string>{"x_0^2", "x_0*x_1"});
    CHECK(truncate_ideal(3, Ideal::zero(R)).empty());
  }

  TEST_CASE("Hilbert data") {
    auto R = make_standard_ring("x", 4);
    auto tc = make_ideal(R, {"x_0*x_2-x_1^2", "x_0*x_3-x_1*x_2", "x_1*x_3-x_2^2"});
    auto h = hilbert_data(tc, 8);
    CHECK(h.krull_dim == 2);
    CHECK(h.projective_dim() == 1);
    CHECK(h.degree == 3);
    for (int d = 0; d <= 8; ++d) {
      CHECK(h.values[d] == 3 * d + 1);
      CHECK(h.values[d] == testing::hilbert_function_direct(R, tc.generators(), d));
    }
    auto R2 = make_standard_ring("x", 2);
    auto h2 = hilbert_data(make_ideal(R2, {"x_0"}), 6);
    for (int d = 0; d <= 6; ++d) CHECK(h2.values[d] == 1);
    CHECK(h2.degree == 1);
    CHECK_THROWS_AS(hilbert_data(make_ideal(R2, {"x_0^2-x_1"}), 3), InvalidArgument);
  }

  TEST_CASE("Hilbert function matches direct ranks on random ideals") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      auto R = make_standard_ring("x", 4);
      std::vector<Polynomial> gens;
      int ng = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < ng; ++k) gens.push_back(testing::random_form(R, rng, 1 + static_cast<int>(rng() % 3), 3));
      auto h = hilbert_data(Ideal(R, gens), 6);
      for (int d = 0; d <= 6; ++d) CHECK(h.values[d] == testing::hilbert_function_direct(R, gens, d));
    }
  }

  TEST_CASE("random linear change") {
    auto R = make_standard_ring("x", 4);
    auto a = random_linear_change(R, 42), b = random_linear_change(R, 42);
    CHECK(a.matrix == b.matrix);
    CHECK_FALSE(random_linear_change(R, 43).matrix == a.matrix);
    std::mt19937_64 rng(8);
    for (int k = 0; k < 10; ++k) {
      auto f = testing::random_polynomial(R, rng, 5, 3);
      CHECK(a.apply_inverse(a.apply(f)) == f);
      CHECK(a.apply(a.apply_inverse(f)) == f);
    }
  }

  TEST_CASE("minimal generators") {
    auto R = make_standard_ring("x", 3);
    auto I = make_ideal(R, {"x_0^2", "x_0*x_1", "x_0^2*x_2", "x_0^2+x_0*x_1", "x_1^3"});
    auto M = minimal_generators(I);
    CHECK(M.size() == 3);
    CHECK(M == I);
  }
}
