#pragma once

#include <cstdint>
#include <ostream>

#include "seclab/errors.hpp"

namespace seclab {

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) on raw residues in [0, p). The modulus is checked
/// for primality on construction and must fit in 31 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  friend class FieldElement;
  struct Trusted {};
  PrimeField(std::uint32_t p, Trusted) : p_(p) {}

  std::uint32_t p_;
};

/// Value type for a single field element; carries its modulus.
class FieldElement {
 public:
  FieldElement(std::uint32_t value, const PrimeField& field)
      : value_(value % field.prime()), p_(field.prime()) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t prime() const { return p_; }

  FieldElement operator+(FieldElement o) const { return {field().add(value_, checked(o)), field()}; }
  FieldElement operator-(FieldElement o) const { return {field().sub(value_, checked(o)), field()}; }
  FieldElement operator*(FieldElement o) const { return {field().mul(value_, checked(o)), field()}; }
  FieldElement operator/(FieldElement o) const { return {field().div(value_, checked(o)), field()}; }
  FieldElement operator-() const { return {field().neg(value_), field()}; }
  FieldElement inverse() const { return {field().inv(value_), field()}; }

  friend bool operator==(FieldElement a, FieldElement b) { return a.value_ == b.value_ && a.p_ == b.p_; }
  friend std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.value_; }

 private:
  // p_ was validated when the originating PrimeField was built.
  PrimeField field() const { return PrimeField(p_, PrimeField::Trusted{}); }
  std::uint32_t checked(FieldElement o) const {
    if (o.p_ != p_) throw InvalidArgument("field elements from different primes");
    return o.value_;
  }

  std::uint32_t value_;
  std::uint32_t p_;
};

/// Multiplicative inverse; throws DivisionByZero on 0.
FieldElement field_inv(FieldElement a);

}  // namespace seclab
