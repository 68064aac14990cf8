#include <doctest.h>

#include <random>

#include "seclab/ring.hpp"

using namespace seclab;

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial::from_exponents(std::vector<int>(e)); }

Monomial random_monomial(std::mt19937_64& rng, int n, int maxe) {
  std::vector<int> e(n);
  for (auto& x : e) x = static_cast<int>(rng() % (maxe + 1));
  return Monomial::from_exponents(e);
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("grevlex in three variables") {
    auto R = make_standard_ring("x", 3);
    auto ord = MonomialOrder::grevlex(*R);
    // x0^2 > x0x1 > x1^2 > x0x2
    CHECK(compare(mono({2, 0, 0}), mono({1, 1, 0}), ord) > 0);
    CHECK(compare(mono({1, 1, 0}), mono({0, 2, 0}), ord) > 0);
    CHECK(compare(mono({0, 2, 0}), mono({1, 0, 1}), ord) > 0);
    CHECK(compare(mono({1, 0, 1}), mono({1, 0, 1}), ord) == 0);
  }

  TEST_CASE("lex puts x0 above every power of x1") {
    auto R = make_standard_ring("x", 2);
    auto ord = MonomialOrder::lex(*R);
    for (int k = 1; k < 200; k += 17) CHECK(compare(mono({1, 0}), mono({0, k}), ord) > 0);
  }

  TEST_CASE("block order eliminating x") {
    auto R = make_ring({{"x", {"x_0", "x_1"}, {1}}, {"y", {"y_0", "y_1", "y_2"}, {1}}});
    int bx = 0;
    auto ord = MonomialOrder::block_elimination(*R, std::span<const int>(&bx, 1));
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
      auto a = random_monomial(rng, 5, 4);
      auto b = random_monomial(rng, 5, 4);
      bool ax = a[0] || a[1], bx2 = b[0] || b[1];
      if (ax && !bx2) CHECK(compare(a, b, ord) > 0);
    }
    CHECK(compare(mono({1, 0, 0, 0, 0}), mono({0, 0, 9, 9, 9}), ord) > 0);
  }

  TEST_CASE("order laws on random triples") {
    auto R = make_ring({{"x", {"a", "b", "c"}, {1}}, {"y", {"d", "e"}, {2}}});
    int blocks[] = {1};
    std::vector<MonomialOrder> orders{MonomialOrder::grevlex(*R), MonomialOrder::lex(*R),
                                      MonomialOrder::block_elimination(*R, blocks),
                                      MonomialOrder::eliminate_blocks(*R, blocks),
                                      MonomialOrder::weighted(*R, {3, 0, 1, 0, 2})};
    std::mt19937_64 rng(11);
    for (const auto& ord : orders) {
      for (int k = 0; k < 300; ++k) {
        auto a = random_monomial(rng, 5, 3), b = random_monomial(rng, 5, 3), c = random_monomial(rng, 5, 3);
        int ab = ord.compare(a, b), ba = ord.compare(b, a);
        CHECK(ab == -ba);
        CHECK((ab == 0) == (a == b));
        if (ab > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
        CHECK(ord.compare(a * c, b * c) == ab);
        if (!a.is_one()) CHECK(ord.compare(a, Monomial()) > 0);
      }
    }
  }

  TEST_CASE("compare rejects monomials from a larger ring") {
    auto R = make_standard_ring("x", 2);
    auto ord = MonomialOrder::grevlex(*R);
    CHECK_THROWS_AS(compare(mono({0, 0, 1}), mono({1, 0, 0}), ord), RingMismatch);
  }

  TEST_CASE("ring validation") {
    CHECK_THROWS_AS(make_ring({{"x", {"a", "a"}, {1}}}), InvalidArgument);
    CHECK_THROWS_AS(make_ring({{"x", {"a"}, {0}}}), InvalidArgument);
    CHECK_THROWS_AS(make_ring({{"x", {"a"}, {1, 0}}, {"y", {"b"}, {1}}}), InvalidArgument);
    CHECK_THROWS_AS(make_ring({{"x", {"a"}, {1}}}, 32004), InvalidArgument);
    CHECK_THROWS_AS(make_standard_ring("x", 33), ResourceLimitExceeded);
    auto R = make_ring({{"x", {"a", "b"}, {1, 0}}, {"y", {"c"}, {0, 1}}});
    CHECK(R->grading_rank() == 2);
    CHECK(R->multidegree(mono({1, 1, 2})) == std::vector<int>{2, 2});
    CHECK(R->weighted_degree(mono({1, 1, 2})) == 4);
  }

  TEST_CASE("degree additivity") {
    auto R = make_ring({{"x", {"a", "b"}, {1, 0}}, {"y", {"c", "d"}, {0, 1}}, {"t", {"t"}, {1, 2}}});
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
      auto a = random_monomial(rng, 5, 5), b = random_monomial(rng, 5, 5);
      auto da = R->multidegree(a), db = R->multidegree(b), dab = R->multidegree(a * b);
      for (int c = 0; c < 2; ++c) CHECK(dab[c] == da[c] + db[c]);
    }
  }

  TEST_CASE("monomials of degree") {
    auto m = monomials_of_degree(3, 2);
    REQUIRE(m.size() == 6);
    auto R = make_standard_ring("x", 3);
    auto ord = MonomialOrder::grevlex(*R);
    for (std::size_t i = 1; i < m.size(); ++i) CHECK(ord.compare(m[i - 1], m[i]) > 0);
    int w[] = {1, 2};
    CHECK(monomials_of_weighted_degree(w, 4).size() == 3);
    CHECK(monomials_of_degree(4, 0).size() == 1);
  }
}
