#include <doctest.h>

#include <random>

#include "seclab/betti.hpp"
#include "seclab/errors.hpp"
#include "seclab/poly_io.hpp"
#include "support/oracles.hpp"
#include "support/random_poly.hpp"

using namespace seclab;

namespace {

BettiTable from_brute(const Ideal& I, int max_degree) {
  auto beta = testing::brute_force_betti(I, max_degree);
  BettiTable t(I.ring()->nvars());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    for (std::size_t j = 0; j < beta[i].size(); ++j) {
      if (beta[i][j]) t.set(static_cast<int>(i), static_cast<int>(j), beta[i][j]);
    }
  }
  return t;
}

Ideal twisted_cubic() {
  auto R = make_standard_ring("x", 4);
  return make_ideal(R, {"x_0*x_2-x_1^2", "x_0*x_3-x_1*x_2", "x_1*x_3-x_2^2"});
}

}  // namespace

TEST_SUITE("betti") {
  TEST_CASE("Koszul complex of two variables") {
    auto R = make_standard_ring("x", 3);
    auto T = betti_table(make_ideal(R, {"x_0", "x_1"}));
    CHECK(T.complete);
    CHECK(T.entries().size() == 3);
    CHECK(T.at(0, 0) == 1);
    CHECK(T.at(1, 1) == 2);
    CHECK(T.at(2, 2) == 1);
    CHECK(T.projective_dimension() == 2);
    CHECK(T.regularity() == 0);
  }

  TEST_CASE("twisted cubic") {
    auto T = betti_table(twisted_cubic());
    CHECK(T.complete);
    CHECK(T.at(1, 2) == 3);
    CHECK(T.at(2, 3) == 2);
    CHECK(T.totals() == std::vector<std::int64_t>{1, 3, 2});
    CHECK(format_betti_text(T) ==
          "       0 1 2\n"
          "total: 1 3 2\n"
          "    0: 1 . .\n"
          "    1: . 3 2\n");
  }

  TEST_CASE("zero and unit ideals") {
    auto R = make_standard_ring("x", 3);
    auto Z = betti_table(Ideal(R, {}));
    CHECK(Z.entries().size() == 1);
    CHECK(Z.at(0, 0) == 1);
    CHECK(Z.complete);
    auto U = betti_table(make_ideal(R, {"1"}));
    CHECK(U.entries().empty());
  }

  TEST_CASE("agrees with the brute-force resolution on random ideals") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 3 + static_cast<int>(trial % 2);
      auto R = make_standard_ring("x", n);
      std::vector<Polynomial> gens;
      const int ng = 2 + static_cast<int>(rng() % 3);
      for (int k = 0; k < ng; ++k) gens.push_back(testing::random_form(R, rng, 2 + static_cast<int>(rng() % 2), 4));
      Ideal I(R, gens);
      auto T = betti_table(I);
      CAPTURE(trial);
      if (!T.complete) continue;
      CHECK(T == from_brute(I, T.regularity() + T.projective_dimension() + 1));
    }
  }

  TEST_CASE("two skew lines: non Cohen-Macaulay") {
    auto R = make_standard_ring("x", 4);
    auto I = make_ideal(R, {"x_0*x_2", "x_0*x_3", "x_1*x_2", "x_1*x_3"});
    auto red = artinian_reduction(I, 1);
    CHECK(red.krull_dim == 2);
    CHECK(red.eliminated == 1);
    CHECK_FALSE(red.artinian);

    BettiOptions o;
    o.row_bound = 3;
    auto T = betti_table(I, o);
    CHECK(T.complete == false);  // the row range is a bound, not a proof
    CHECK(T == from_brute(I, 7));
    CHECK(T.at(3, 4) == 1);
    CHECK_THROWS_AS(regularity_report(T, I), InvalidArgument);
    auto rep = regularity_report(T, I, true);
    CHECK(rep.projective_dimension == 3);
    CHECK(rep.codimension == 2);
    CHECK_FALSE(rep.acm);
  }

  TEST_CASE("alternating sum recovers the Hilbert numerator") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
      auto R = make_standard_ring("x", 4);
      Ideal I(R, {testing::random_form(R, rng, 2, 5), testing::random_form(R, rng, 2, 5),
                  testing::random_form(R, rng, 3, 5)});
      auto T = betti_table(I);
      REQUIRE(T.complete);
      CHECK(betti_numerator(T) == hilbert_data(I, 0).numerator);
    }
  }

  TEST_CASE("invariant under linear changes of coordinates") {
    auto I = twisted_cubic();
    auto T = betti_table(I);
    for (std::uint64_t seed : {11u, 12u, 13u}) {
      auto L = random_linear_change(I.ring(), seed);
      CHECK(betti_table(L.apply(I)) == T);
    }
  }

  TEST_CASE("reduction, seeds and threading do not change the table") {
    std::mt19937_64 rng(9);
    auto R = make_standard_ring("x", 4);
    Ideal I(R, {testing::random_form(R, rng, 2, 6), testing::random_form(R, rng, 2, 6),
                testing::random_form(R, rng, 2, 6)});
    auto T = betti_table(I);
    BettiOptions plain;
    plain.reduce = false;
    CHECK(betti_table(I, plain) == T);
    BettiOptions serial;
    serial.parallel = false;
    serial.seed = 77;
    CHECK(betti_table(I, serial) == T);
    CHECK(T.at(0, 0) == 1);  // S/I is cyclic
  }

  TEST_CASE("windows and budgets") {
    auto I = twisted_cubic();
    BettiOptions cols;
    cols.col_bound = 1;
    auto C = betti_table(I, cols);
    CHECK_FALSE(C.complete);
    CHECK(C.at(1, 2) == 3);
    CHECK(C.at(2, 3) == 0);

    BettiOptions tiny;
    tiny.max_matrix_cells = 1;
    auto F = betti_table(I, tiny);
    CHECK_FALSE(F.complete);
    CHECK_FALSE(F.frontier.empty());

    BettiOptions bad;
    bad.row_bound = -1;
    CHECK_THROWS_AS(betti_table(I, bad), InvalidArgument);
    auto R = make_ring({{"x", {"a", "b"}, {2}}});
    CHECK_THROWS_AS(betti_table(make_ideal(R, {"a"})), InvalidArgument);
    CHECK_THROWS_AS(betti_table(make_ideal(twisted_cubic().ring(), {"x_0^2-x_1"})), InvalidArgument);
  }

  TEST_CASE("json round trip") {
    BettiOptions o;
    o.row_bound = 1;
    auto T = betti_table(twisted_cubic(), o);
    T.note = "n";
    auto back = betti_from_json(betti_to_json(T));
    CHECK(back == T);
    CHECK(back.complete == T.complete);
    CHECK(back.row_bound == T.row_bound);
    CHECK(back.note == "n");
    CHECK(betti_to_json(T)["totals"] == nlohmann::json::array({1, 3, 2}));
  }

  TEST_CASE("table entries") {
    BettiTable t(3);
    t.set(0, 0, 1);
    t.set(2, 5, 4);
    CHECK(t.row_entry(3, 2) == 4);
    t.set(2, 5, 0);
    CHECK(t.entries().size() == 1);
    CHECK_THROWS_AS(t.set(1, 1, -1), InvalidArgument);
  }
}
