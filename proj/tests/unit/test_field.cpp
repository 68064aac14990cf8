#include <doctest.h>

#include <random>

#include "seclab/field.hpp"

using namespace seclab;

namespace {

// a^(p-2) by repeated multiplication: independent of the extended-Euclid path
std::uint32_t fermat_inverse(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < p - 2; ++i) r = r * a % p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("inverse of small elements") {
    PrimeField F;
    CHECK(F.prime() == 32003);
    CHECK(F.inv(1) == 1);
    CHECK(F.inv(2) == 16002);
    CHECK(field_inv(FieldElement(2, F)).value() == 16002);
  }

  TEST_CASE("zero has no inverse") {
    PrimeField F;
    CHECK_THROWS_AS(F.inv(0), DivisionByZero);
    CHECK_THROWS_AS(field_inv(FieldElement(0, F)), DivisionByZero);
    CHECK_THROWS_AS(FieldElement(5, F) / FieldElement(0, F), DivisionByZero);
  }

  TEST_CASE("inverse agrees with the Fermat oracle on random elements") {
    PrimeField F;
    std::mt19937_64 rng(7);
    for (int k = 0; k < 100; ++k) {
      std::uint32_t a = 1 + static_cast<std::uint32_t>(rng() % (F.prime() - 1));
      std::uint32_t inv = F.inv(a);
      CHECK(F.mul(a, inv) == 1);
      CHECK(inv == fermat_inverse(a, F.prime()));
    }
  }

  TEST_CASE("modulus must be an odd prime") {
    CHECK_THROWS_AS(PrimeField(32004), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(2), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(1), InvalidArgument);
    CHECK_NOTHROW(PrimeField(101));
    CHECK_NOTHROW(PrimeField(2147483647u));
  }

  TEST_CASE("field axioms on random samples") {
    for (std::uint32_t p : {3u, 101u, 32003u, 2147483647u}) {
      PrimeField F(p);
      std::mt19937_64 rng(p);
      for (int k = 0; k < 500; ++k) {
        FieldElement a(static_cast<std::uint32_t>(rng() % p), F), b(static_cast<std::uint32_t>(rng() % p), F),
            c(static_cast<std::uint32_t>(rng() % p), F);
        FieldElement zero(0, F), one(1, F);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a + (-a) == zero);
        CHECK(a - b == a + (-b));
        if (a.value() != 0) CHECK(a * a.inverse() == one);
      }
    }
  }

  TEST_CASE("symmetric representatives") {
    PrimeField F;
    CHECK(F.symmetric(1) == 1);
    CHECK(F.symmetric(32002) == -1);
    CHECK(F.symmetric(16001) == 16001);
    CHECK(F.symmetric(16002) == -16001);
    CHECK(F.from_int(-1) == 32002);
  }

  TEST_CASE("mixed moduli are rejected") {
    PrimeField F(101), G(103);
    CHECK_THROWS_AS(FieldElement(1, F) + FieldElement(1, G), InvalidArgument);
  }
}
