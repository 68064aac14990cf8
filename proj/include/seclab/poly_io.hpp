#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "seclab/polynomial.hpp"

namespace seclab {

/// Parse a polynomial such as `x_0*x_2-x_1^2`, `3x_0 + 2*y_{1,0}^3` or
/// `(x_0-x_1)^2`. Coefficients are integers reduced mod p; `*` is optional.
Polynomial parse_polynomial(const Ring& ring, std::string_view text);

/// Canonical text: terms in descending ring order, symmetric coefficients,
/// no spaces. parse_polynomial(to_string(f)) == f.
std::string to_string(const Polynomial& f);

/// Ring header lines ("ring prime=..." and one "block" line per block).
std::string ring_header(const RingSpec& ring);

/// A ring together with a list of polynomials, as read from a file.
struct PolynomialList {
  Ring ring;
  std::vector<Polynomial> polys;
};

/// Plain-text format:
///   ring prime=32003
///   block x weights=1 vars=x_0,x_1,x_2
///   generators 2
///   x_0*x_1
///   x_2
/// Lines starting with '#' and blank lines are ignored.
std::string write_ideal_text(const Ring& ring, std::span<const Polynomial> gens);
PolynomialList read_ideal_text(std::string_view text);
Ring parse_ring_header(std::string_view text);

nlohmann::json ring_to_json(const RingSpec& ring);
Ring ring_from_json(const nlohmann::json& j);
nlohmann::json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Ring& ring, const nlohmann::json& j);
nlohmann::json ideal_to_json(const Ring& ring, std::span<const Polynomial> gens);
PolynomialList ideal_from_json(const nlohmann::json& j);

}  // namespace seclab
